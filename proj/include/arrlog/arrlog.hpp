#pragma once

// Exact computation of logarithmic derivation modules of plane arrangements
// in K^3, their Euler/Ziegler restriction maps, cokernel Hilbert functions,
// freeness certificates, and presentations.

#include "arrlog/arrangement.hpp"
#include "arrlog/builtins.hpp"
#include "arrlog/cokernel.hpp"
#include "arrlog/corpus.hpp"
#include "arrlog/errors.hpp"
#include "arrlog/fields.hpp"
#include "arrlog/lattice.hpp"
#include "arrlog/linalg.hpp"
#include "arrlog/logmod.hpp"
#include "arrlog/polynomials.hpp"
#include "arrlog/presentation.hpp"
#include "arrlog/report.hpp"
#include "arrlog/restriction.hpp"
#include "arrlog/session.hpp"
#include "arrlog/verdicts.hpp"
