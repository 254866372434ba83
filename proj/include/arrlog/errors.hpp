#pragma once

#include <stdexcept>
#include <string>

namespace arrlog {

// Every failure the library can signal, split by who has to act on it:
// input errors are the caller's to fix, internal errors mean a broken
// invariant (a bug, or a counterexample to a theorem the code relies on)
// and must surface loudly.
enum class Errc {
  ZeroForm,
  DuplicateHyperplane,
  BadFieldElement,
  EmptyArrangement,
  EmptyRestriction,
  SingularChart,
  NotLogarithmic,
  UnknownName,
  ParseError,
  GenerationExhausted,
  CapTooSmall,
  // internal invariant violations
  NegativeLP,
  HilbertPatternViolation,
  StabilizationNotReached,
  InconsistentVerdicts,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const { return code_; }

  bool internal() const {
    switch (code_) {
      case Errc::NegativeLP:
      case Errc::HilbertPatternViolation:
      case Errc::StabilizationNotReached:
      case Errc::InconsistentVerdicts:
      case Errc::Internal:
        return true;
      default:
        return false;
    }
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void check_internal(bool ok, const std::string& msg) {
  if (!ok) fail(Errc::Internal, msg);
}

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroForm: return "ZeroForm";
    case Errc::DuplicateHyperplane: return "DuplicateHyperplane";
    case Errc::BadFieldElement: return "BadFieldElement";
    case Errc::EmptyArrangement: return "EmptyArrangement";
    case Errc::EmptyRestriction: return "EmptyRestriction";
    case Errc::SingularChart: return "SingularChart";
    case Errc::NotLogarithmic: return "NotLogarithmic";
    case Errc::UnknownName: return "UnknownName";
    case Errc::ParseError: return "ParseError";
    case Errc::GenerationExhausted: return "GenerationExhausted";
    case Errc::CapTooSmall: return "CapTooSmall";
    case Errc::NegativeLP: return "NegativeLP";
    case Errc::HilbertPatternViolation: return "HilbertPatternViolation";
    case Errc::StabilizationNotReached: return "StabilizationNotReached";
    case Errc::InconsistentVerdicts: return "InconsistentVerdicts";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace arrlog
