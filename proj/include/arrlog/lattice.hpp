#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "arrlog/arrangement.hpp"
#include "arrlog/errors.hpp"

namespace arrlog {

// Rank-2 flat: a line through the origin, recorded by the set of hyperplanes
// containing it. mu = |A_X| - 1 by the Möbius recursion on a pencil.
template <class F>
struct LineFlat {
  std::array<elem_t<F>, 3> direction;  // normalized direction vector
  std::vector<std::size_t> hyperplanes;
  long long mu = 0;
};

template <class F>
struct FlatLattice {
  std::vector<LineFlat<F>> lines;
  int rank = 0;
  bool has_origin = false;   // rank-3 flat present
  long long origin_mu = 0;   // valid when has_origin
};

template <class F>
std::array<elem_t<F>, 3> cross_product(const std::array<elem_t<F>, 3>& a,
                                       const std::array<elem_t<F>, 3>& b, const F& f) {
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
          f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

template <class F>
FlatLattice<F> intersection_lattice(const Arrangement<F>& a) {
  if (a.size() == 0) fail(Errc::EmptyArrangement, "intersection lattice needs a nonempty arrangement");
  const F& f = a.field;
  FlatLattice<F> lat;
  lat.rank = static_cast<int>(arrangement_rank(a));

  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      auto dir = cross_product<F>(a.forms[i].coeffs, a.forms[j].coeffs, f);
      // forms are pairwise non-proportional, so the direction is nonzero
      auto norm = normalize_form<F>(dir, f).coeffs;
      bool seen = false;
      for (const auto& line : lat.lines)
        if (f.eq(line.direction[0], norm[0]) && f.eq(line.direction[1], norm[1]) &&
            f.eq(line.direction[2], norm[2])) {
          seen = true;
          break;
        }
      if (seen) continue;
      LineFlat<F> line;
      line.direction = norm;
      for (std::size_t k = 0; k < a.size(); ++k) {
        auto val = f.add(f.add(f.mul(a.forms[k].coeffs[0], norm[0]), f.mul(a.forms[k].coeffs[1], norm[1])),
                         f.mul(a.forms[k].coeffs[2], norm[2]));
        if (f.is_zero(val)) line.hyperplanes.push_back(k);
      }
      line.mu = static_cast<long long>(line.hyperplanes.size()) - 1;
      lat.lines.push_back(std::move(line));
    }
  }
  std::sort(lat.lines.begin(), lat.lines.end(), [&](const LineFlat<F>& x, const LineFlat<F>& y) {
    for (int i = 0; i < 3; ++i) {
      int c = f.cmp(x.direction[i], y.direction[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });

  // every unordered pair of hyperplanes must lie in exactly one line
  std::size_t pair_count = 0;
  for (const auto& line : lat.lines)
    pair_count += line.hyperplanes.size() * (line.hyperplanes.size() - 1) / 2;
  check_internal(pair_count == a.size() * (a.size() - 1) / 2, "pair coverage of the line flats failed");

  if (lat.rank == 3) {
    long long sum_lines = 0;
    for (const auto& line : lat.lines) sum_lines += line.mu;
    lat.has_origin = true;
    lat.origin_mu = -(1 - static_cast<long long>(a.size()) + sum_lines);
  }
  return lat;
}

// chi(A;t) = t^3 - |A| t^2 + (sum of line mu) t + origin mu; the reduced
// polynomial chi0 = chi/(t-1) = t^2 - b1 t + b2 has integer coefficients.
struct CharPoly {
  // chi coefficients, descending powers: t^3, t^2, t^1, t^0
  std::array<long long, 4> chi{1, 0, 0, 0};
  long long b1 = 0;
  long long b2 = 0;

  long long chi0_eval(long long s) const { return s * s - b1 * s + b2; }
};

template <class F>
CharPoly char_poly(const Arrangement<F>& a) {
  auto lat = intersection_lattice(a);
  CharPoly cp;
  long long n = static_cast<long long>(a.size());
  long long sum_lines = 0;
  for (const auto& line : lat.lines) sum_lines += line.mu;
  cp.chi = {1, -n, sum_lines, lat.has_origin ? lat.origin_mu : 0};

  // exact division by (t - 1); chi(1) = 0 for nonempty arrangements
  check_internal(cp.chi[0] + cp.chi[1] + cp.chi[2] + cp.chi[3] == 0, "chi(1) != 0");
  // chi = (t-1)(t^2 - b1 t + b2)
  cp.b1 = -(cp.chi[1] + 1);
  cp.b2 = -cp.chi[3];
  check_internal(cp.chi[2] == cp.b2 + cp.b1, "chi/(t-1) division mismatch");
  check_internal(cp.b1 == n - 1, "b1 != |A| - 1");
  return cp;
}

}  // namespace arrlog
