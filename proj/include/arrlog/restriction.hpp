#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

#include "arrlog/arrangement.hpp"
#include "arrlog/errors.hpp"
#include "arrlog/lattice.hpp"
#include "arrlog/linalg.hpp"

namespace arrlog {

// 2-variable multiarrangement (A, m): the target data of Ziegler restriction
// and the general object of the rank-2 theory. Lines are normalized and
// coefficient-lex sorted.
template <class F>
struct MultiArrangement2 {
  F field;
  std::vector<std::array<elem_t<F>, 2>> lines;
  std::vector<int> mult;

  std::size_t size() const { return lines.size(); }
  long long total_multiplicity() const {
    long long s = 0;
    for (int m : mult) s += m;
    return s;
  }
};

// Euler restriction A^H in an explicit chart. The chart matrix M sends
// alpha_H to the first coordinate and keeps the two standard coordinates
// other than the leading one of alpha_H, so M rows are
// (alpha_H, e_k, e_l) with k < l. Reduction modulo alpha_H is the
// substitution x -> s*vcol + t*wcol with vcol,wcol the last two columns
// of M^(-1).
template <class F>
struct RestrictedArrangement {
  Matrix<F> chart;
  std::size_t source_h = 0;
  int kept0 = 1, kept1 = 2;               // indices k < l of the surviving coordinates
  std::array<elem_t<F>, 3> vcol, wcol;    // substitution vectors for "mod alpha_H"
  std::vector<std::array<elem_t<F>, 2>> lines;

  std::size_t size() const { return lines.size(); }
};

template <class F>
std::array<elem_t<F>, 2> normalize_form2(std::array<elem_t<F>, 2> c, const F& field) {
  int lead = -1;
  for (int i = 0; i < 2; ++i)
    if (!field.is_zero(c[i])) {
      lead = i;
      break;
    }
  if (lead < 0) fail(Errc::ZeroForm, "restricted line form is zero");
  auto inv = field.inv(c[lead]);
  for (auto& x : c) x = field.mul(x, inv);
  return c;
}

template <class F>
int cmp_form2(const std::array<elem_t<F>, 2>& a, const std::array<elem_t<F>, 2>& b, const F& field) {
  for (int i = 0; i < 2; ++i) {
    int c = field.cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

// Deterministic chart for one normalized form: rows (alpha, e_k, e_l) with
// j the leading index of alpha and k < l the other two coordinates. Also
// carries the last two columns of the inverse, which implement reduction
// modulo alpha as the substitution x -> s*vcol + t*wcol.
template <class F>
struct HyperplaneChart {
  Matrix<F> matrix;
  int lead = 0;
  int kept0 = 1, kept1 = 2;
  std::array<elem_t<F>, 3> vcol, wcol;
};

template <class F>
HyperplaneChart<F> hyperplane_chart(const LinearForm3<F>& form, const F& f) {
  const auto& alpha = form.coeffs;
  int j = form.leading_index(f);
  check_internal(j >= 0, "chart of a zero form");
  int k = -1, l = -1;
  for (int i = 0; i < 3; ++i) {
    if (i == j) continue;
    (k < 0 ? k : l) = i;
  }
  HyperplaneChart<F> ch;
  ch.lead = j;
  ch.kept0 = k;
  ch.kept1 = l;
  ch.matrix = Matrix<F>(3, 3, f);
  for (int c = 0; c < 3; ++c) ch.matrix.at(0, c) = alpha[c];
  ch.matrix.at(1, k) = f.one();
  ch.matrix.at(2, l) = f.one();
  // x_k = s, x_l = t, x_j = -(alpha_k s + alpha_l t); alpha_j = 1 normalized
  ch.vcol = {f.zero(), f.zero(), f.zero()};
  ch.wcol = {f.zero(), f.zero(), f.zero()};
  ch.vcol[k] = f.one();
  ch.wcol[l] = f.one();
  ch.vcol[j] = f.neg(alpha[k]);
  ch.wcol[j] = f.neg(alpha[l]);
  return ch;
}

namespace detail {

template <class F>
struct RestrictionData {
  RestrictedArrangement<F> restricted;
  std::vector<int> mult;  // aligned with restricted.lines
};

template <class F>
RestrictionData<F> restrict_with_multiplicity(const Arrangement<F>& a, std::size_t h) {
  if (a.size() < 2) fail(Errc::EmptyRestriction, "restriction needs at least two hyperplanes");
  check_internal(h < a.size(), "hyperplane index out of range");
  const F& f = a.field;

  auto ch = hyperplane_chart(a.forms[h], f);
  RestrictedArrangement<F> res;
  res.source_h = h;
  res.kept0 = ch.kept0;
  res.kept1 = ch.kept1;
  res.chart = ch.matrix;
  res.vcol = ch.vcol;
  res.wcol = ch.wcol;

  // trace of each other hyperplane: alpha_L(s*vcol + t*wcol)
  std::vector<std::pair<std::array<elem_t<F>, 2>, int>> tally;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == h) continue;
    const auto& c = a.forms[i].coeffs;
    std::array<elem_t<F>, 2> tr = {
        f.add(f.add(f.mul(c[0], res.vcol[0]), f.mul(c[1], res.vcol[1])), f.mul(c[2], res.vcol[2])),
        f.add(f.add(f.mul(c[0], res.wcol[0]), f.mul(c[1], res.wcol[1])), f.mul(c[2], res.wcol[2]))};
    auto norm = normalize_form2<F>(tr, f);
    bool merged = false;
    for (auto& entry : tally)
      if (cmp_form2<F>(entry.first, norm, f) == 0) {
        entry.second += 1;
        merged = true;
        break;
      }
    if (!merged) tally.emplace_back(norm, 1);
  }
  std::sort(tally.begin(), tally.end(),
            [&](const auto& x, const auto& y) { return cmp_form2<F>(x.first, y.first, f) < 0; });

  RestrictionData<F> out;
  out.restricted = std::move(res);
  for (auto& entry : tally) {
    out.restricted.lines.push_back(entry.first);
    out.mult.push_back(entry.second);
  }
  return out;
}

}  // namespace detail

template <class F>
RestrictedArrangement<F> euler_restriction(const Arrangement<F>& a, std::size_t h) {
  return detail::restrict_with_multiplicity(a, h).restricted;
}

template <class F>
std::vector<int> ziegler_multiplicity(const Arrangement<F>& a, std::size_t h) {
  auto data = detail::restrict_with_multiplicity(a, h);
  long long total = 0;
  for (int m : data.mult) total += m;
  check_internal(total == static_cast<long long>(a.size()) - 1, "|m^H| != |A| - 1");
  return data.mult;
}

template <class F>
MultiArrangement2<F> ziegler_restriction(const Arrangement<F>& a, std::size_t h) {
  auto data = detail::restrict_with_multiplicity(a, h);
  return MultiArrangement2<F>{a.field, data.restricted.lines, data.mult};
}

// simple restriction as a multiarrangement with multiplicity one everywhere
template <class F>
MultiArrangement2<F> simple_restriction(const RestrictedArrangement<F>& r, const F& field) {
  return MultiArrangement2<F>{field, r.lines, std::vector<int>(r.lines.size(), 1)};
}

// LP(A,H) = chi0(A; |A^H| - 1), a nonnegative combinatorial integer.
// Negativity would contradict the root-location theorem, so it aborts loudly.
template <class F>
long long lp_invariant(const Arrangement<F>& a, std::size_t h) {
  auto lines = euler_restriction(a, h).lines;
  auto cp = char_poly(a);
  long long lp = cp.chi0_eval(static_cast<long long>(lines.size()) - 1);
  if (lp < 0)
    fail(Errc::NegativeLP, "LP invariant is negative: chi0(" + std::to_string(lines.size() - 1) +
                               ") = " + std::to_string(lp));
  return lp;
}

}  // namespace arrlog
