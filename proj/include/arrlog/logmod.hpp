#pragma once

#include <array>
#include <optional>
#include <vector>

#include "arrlog/arrangement.hpp"
#include "arrlog/errors.hpp"
#include "arrlog/polynomials.hpp"
#include "arrlog/restriction.hpp"

namespace arrlog {

// deg(p.d) = deg(p.d^d) = deg p throughout; a degree-d piece of a derivation
// module is cut out of the 3*dim S_d (resp. 2(d+1), d+1) coefficient space by
// the membership conditions, reduced per hyperplane through its chart.

template <class F>
struct Derivation3 {
  int degree = 0;
  std::array<HomoPoly<F>, 3> comp;  // coefficients of d/dx1, d/dx2, d/dx3
};

template <class F>
struct Derivation2 {
  int degree = 0;
  std::array<HomoPoly<F>, 2> comp;
};

template <class F>
struct BiDerivation3 {
  int degree = 0;
  std::array<HomoPoly<F>, 3> comp;  // coefficients of d1^d2, d1^d3, d2^d3
};

template <class F>
Derivation3<F> derivation3_from_vector(int degree, const std::vector<elem_t<F>>& v, const F& field) {
  std::size_t n = mono_count3(degree);
  check_internal(v.size() == 3 * n, "derivation vector length mismatch");
  Derivation3<F> th;
  th.degree = degree;
  for (int i = 0; i < 3; ++i) {
    th.comp[i] = HomoPoly<F>(3, degree, field);
    for (std::size_t j = 0; j < n; ++j) th.comp[i].coeffs[j] = v[i * n + j];
  }
  return th;
}

template <class F>
std::vector<elem_t<F>> derivation3_to_vector(const Derivation3<F>& th) {
  std::vector<elem_t<F>> v;
  for (int i = 0; i < 3; ++i) v.insert(v.end(), th.comp[i].coeffs.begin(), th.comp[i].coeffs.end());
  return v;
}

template <class F>
BiDerivation3<F> biderivation3_from_vector(int degree, const std::vector<elem_t<F>>& v, const F& field) {
  std::size_t n = mono_count3(degree);
  check_internal(v.size() == 3 * n, "biderivation vector length mismatch");
  BiDerivation3<F> th;
  th.degree = degree;
  for (int i = 0; i < 3; ++i) {
    th.comp[i] = HomoPoly<F>(3, degree, field);
    for (std::size_t j = 0; j < n; ++j) th.comp[i].coeffs[j] = v[i * n + j];
  }
  return th;
}

template <class F>
Derivation2<F> derivation2_from_vector(int degree, const std::vector<elem_t<F>>& v, const F& field) {
  std::size_t n = mono_count2(degree);
  check_internal(v.size() == 2 * n, "derivation vector length mismatch");
  Derivation2<F> th;
  th.degree = degree;
  for (int i = 0; i < 2; ++i) {
    th.comp[i] = HomoPoly<F>(2, degree, field);
    for (std::size_t j = 0; j < n; ++j) th.comp[i].coeffs[j] = v[i * n + j];
  }
  return th;
}

template <class F>
Derivation3<F> euler_derivation(const F& field) {
  Derivation3<F> th;
  th.degree = 1;
  for (int i = 0; i < 3; ++i) {
    th.comp[i] = HomoPoly<F>(3, 1, field);
    th.comp[i].coeffs[i] = field.one();
  }
  return th;
}

// theta(alpha) for a linear form: sum_i alpha_i p_i
template <class F>
HomoPoly<F> apply_to_form(const Derivation3<F>& th, const std::array<elem_t<F>, 3>& c, const F& field) {
  HomoPoly<F> r(3, th.degree, field);
  for (int i = 0; i < 3; ++i)
    r = poly_add(r, poly_scale(th.comp[i], c[i], field), field);
  return r;
}

// theta(f) = sum_i p_i df/dx_i
template <class F>
HomoPoly<F> apply_derivation(const Derivation3<F>& th, const HomoPoly<F>& f, const F& field) {
  check_internal(f.nvars == 3 && f.degree >= 1, "apply_derivation expects positive-degree 3-var f");
  HomoPoly<F> r(3, th.degree + f.degree - 1, field);
  for (int i = 0; i < 3; ++i)
    r = poly_add(r, poly_mul(th.comp[i], poly_derivative(f, i, field), field), field);
  return r;
}

// theta(f,g) = sum_{i<j} p_ij (d_i f d_j g - d_j f d_i g)
template <class F>
HomoPoly<F> apply_biderivation(const BiDerivation3<F>& th, const HomoPoly<F>& f, const HomoPoly<F>& g,
                               const F& field) {
  check_internal(f.degree >= 1 && g.degree >= 1, "apply_biderivation expects positive degrees");
  HomoPoly<F> r(3, th.degree + f.degree + g.degree - 2, field);
  static constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int k = 0; k < 3; ++k) {
    int i = pairs[k][0], j = pairs[k][1];
    auto term = poly_sub_mul(poly_derivative(f, i, field), poly_derivative(g, j, field),
                             poly_derivative(f, j, field), poly_derivative(g, i, field), field);
    r = poly_add(r, poly_mul(th.comp[k], term, field), field);
  }
  return r;
}

// reduce a 3-var polynomial modulo the chart form: substitute the chart columns
template <class F>
HomoPoly<F> reduce_mod_chart(const HomoPoly<F>& p, const HyperplaneChart<F>& ch, const F& field) {
  auto sub = substitution_3to2_matrix<F>(p.degree, ch.vcol, ch.wcol, field);
  HomoPoly<F> r(2, p.degree, field);
  for (std::size_t i = 0; i < sub.rows; ++i) {
    auto acc = field.zero();
    for (std::size_t j = 0; j < sub.cols; ++j) acc = field.add(acc, field.mul(sub.at(i, j), p.coeffs[j]));
    r.coeffs[i] = acc;
  }
  return r;
}

enum class ModuleTag { D, DH, D2, DRestriction, DMulti, D2Restriction };

template <class F>
struct GradedPieceBasis {
  ModuleTag tag = ModuleTag::D;
  int degree = 0;
  std::size_t ambient = 0;
  std::vector<std::vector<elem_t<F>>> basis;

  std::size_t dim() const { return basis.size(); }
};

namespace detail {

// rows [a*R | b*R | c*R] appended to `rows`, where R is (d+1) x n
template <class F>
void append_scaled_blocks(std::vector<std::vector<elem_t<F>>>& rows, const Matrix<F>& r,
                          const std::array<elem_t<F>, 3>& scale, const F& field) {
  for (std::size_t i = 0; i < r.rows; ++i) {
    std::vector<elem_t<F>> row(3 * r.cols, field.zero());
    for (int b = 0; b < 3; ++b) {
      if (field.is_zero(scale[b])) continue;
      for (std::size_t j = 0; j < r.cols; ++j)
        row[b * r.cols + j] = field.mul(scale[b], r.at(i, j));
    }
    rows.push_back(std::move(row));
  }
}

template <class F>
std::vector<Matrix<F>> reduction_matrices(const Arrangement<F>& a, int d) {
  std::vector<Matrix<F>> out;
  out.reserve(a.size());
  for (std::size_t h = 0; h < a.size(); ++h) {
    auto ch = hyperplane_chart(a.forms[h], a.field);
    out.push_back(substitution_3to2_matrix<F>(d, ch.vcol, ch.wcol, a.field));
  }
  return out;
}

}  // namespace detail

// D(A)_d: theta(alpha_H) ≡ 0 mod alpha_H for every H; d+1 conditions per
// hyperplane on the 3*dim S_d coefficient unknowns.
template <class F>
GradedPieceBasis<F> d_piece(const Arrangement<F>& a, int d,
                            const std::vector<Matrix<F>>* reductions = nullptr) {
  check_internal(d >= 0, "negative degree");
  const F& f = a.field;
  std::vector<Matrix<F>> local;
  if (!reductions) {
    local = detail::reduction_matrices(a, d);
    reductions = &local;
  }
  std::vector<std::vector<elem_t<F>>> rows;
  rows.reserve(a.size() * (d + 1));
  for (std::size_t h = 0; h < a.size(); ++h)
    detail::append_scaled_blocks<F>(rows, (*reductions)[h], a.forms[h].coeffs, f);

  GradedPieceBasis<F> out;
  out.tag = ModuleTag::D;
  out.degree = d;
  out.ambient = 3 * mono_count3(d);
  if (rows.empty()) {
    Matrix<F> empty(0, out.ambient, f);
    out.basis = nullspace(empty, f);
  } else {
    out.basis = nullspace(Matrix<F>::from_rows(rows, f), f);
  }
  return out;
}

// D_H(A)_d: additionally theta(alpha_H) = 0 exactly (all dim S_d coefficients).
template <class F>
GradedPieceBasis<F> dh_piece(const Arrangement<F>& a, std::size_t h, int d,
                             const std::vector<Matrix<F>>* reductions = nullptr) {
  check_internal(h < a.size(), "hyperplane index out of range");
  const F& f = a.field;
  std::vector<Matrix<F>> local;
  if (!reductions) {
    local = detail::reduction_matrices(a, d);
    reductions = &local;
  }
  std::vector<std::vector<elem_t<F>>> rows;
  for (std::size_t i = 0; i < a.size(); ++i)
    detail::append_scaled_blocks<F>(rows, (*reductions)[i], a.forms[i].coeffs, f);

  std::size_t n = mono_count3(d);
  const auto& c = a.forms[h].coeffs;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<elem_t<F>> row(3 * n, f.zero());
    for (int b = 0; b < 3; ++b) row[b * n + j] = c[b];
    rows.push_back(std::move(row));
  }

  GradedPieceBasis<F> out;
  out.tag = ModuleTag::DH;
  out.degree = d;
  out.ambient = 3 * n;
  out.basis = nullspace(Matrix<F>::from_rows(rows, f), f);
  return out;
}

// D^2(A)_d: bivector fields with theta(alpha_H, x_k) ≡ 0 mod alpha_H for all k.
// With components (p12, p13, p23) and alpha = (c1,c2,c3):
//   theta(alpha, x1) = -c2 p12 - c3 p13
//   theta(alpha, x2) =  c1 p12 - c3 p23
//   theta(alpha, x3) =  c1 p13 + c2 p23
template <class F>
GradedPieceBasis<F> d2_piece(const Arrangement<F>& a, int d,
                             const std::vector<Matrix<F>>* reductions = nullptr) {
  check_internal(d >= 0, "negative degree");
  const F& f = a.field;
  std::vector<Matrix<F>> local;
  if (!reductions) {
    local = detail::reduction_matrices(a, d);
    reductions = &local;
  }
  std::vector<std::vector<elem_t<F>>> rows;
  for (std::size_t h = 0; h < a.size(); ++h) {
    const auto& c = a.forms[h].coeffs;
    const auto& r = (*reductions)[h];
    detail::append_scaled_blocks<F>(rows, r, {f.neg(c[1]), f.neg(c[2]), f.zero()}, f);
    detail::append_scaled_blocks<F>(rows, r, {c[0], f.zero(), f.neg(c[2])}, f);
    detail::append_scaled_blocks<F>(rows, r, {f.zero(), c[0], c[1]}, f);
  }

  GradedPieceBasis<F> out;
  out.tag = ModuleTag::D2;
  out.degree = d;
  out.ambient = 3 * mono_count3(d);
  if (rows.empty()) {
    Matrix<F> empty(0, out.ambient, f);
    out.basis = nullspace(empty, f);
  } else {
    out.basis = nullspace(Matrix<F>::from_rows(rows, f), f);
  }
  return out;
}

// D(A,m)_d for a 2-variable multiarrangement: theta(alpha_X) in (alpha_X^m(X)).
template <class F>
GradedPieceBasis<F> dm_piece(const MultiArrangement2<F>& ma, int d) {
  check_internal(d >= 0, "negative degree");
  const F& f = ma.field;
  std::size_t n = mono_count2(d);
  std::vector<std::vector<elem_t<F>>> rows;
  for (std::size_t x = 0; x < ma.size(); ++x) {
    check_internal(ma.mult[x] >= 1, "multiplicity must be positive");
    auto functionals = divisibility_functionals<F>(ma.lines[x], ma.mult[x], d, f);
    for (const auto& func : functionals) {
      std::vector<elem_t<F>> row(2 * n, f.zero());
      for (std::size_t j = 0; j < n; ++j) {
        row[j] = f.mul(ma.lines[x][0], func[j]);
        row[n + j] = f.mul(ma.lines[x][1], func[j]);
      }
      rows.push_back(std::move(row));
    }
  }

  GradedPieceBasis<F> out;
  out.tag = ModuleTag::DMulti;
  out.degree = d;
  out.ambient = 2 * n;
  if (rows.empty()) {
    Matrix<F> empty(0, out.ambient, f);
    out.basis = nullspace(empty, f);
  } else {
    out.basis = nullspace(Matrix<F>::from_rows(rows, f), f);
  }
  return out;
}

template <class F>
GradedPieceBasis<F> dm_piece(const RestrictedArrangement<F>& r, const std::vector<int>& mult, int d,
                             const F& field) {
  check_internal(mult.size() == r.lines.size(), "multiplicity length mismatch");
  return dm_piece(MultiArrangement2<F>{field, r.lines, mult}, d);
}

// D^2(A^H)_d in two variables is Q(A^H) * S_(d-n): a bivector q d/ds^d/dt lies
// in it iff every line form divides q.
template <class F>
GradedPieceBasis<F> d2_restriction_piece(const std::vector<std::array<elem_t<F>, 2>>& lines, int d,
                                         const F& field) {
  GradedPieceBasis<F> out;
  out.tag = ModuleTag::D2Restriction;
  out.degree = d;
  out.ambient = mono_count2(d);
  int n = static_cast<int>(lines.size());
  if (d < n) return out;

  HomoPoly<F> q(2, 0, field);
  q.coeffs[0] = field.one();
  for (const auto& line : lines) q = poly_mul(q, linear_poly2<F>(line, field), field);

  auto ez = mono_exps2(d - n);
  for (const auto& e : ez) {
    HomoPoly<F> mono(2, d - n, field);
    mono.coeffs[mono_index2(d - n, e[0])] = field.one();
    auto prod = poly_mul(q, mono, field);
    out.basis.push_back(prod.coeffs);
  }
  return out;
}

struct ExponentPair {
  long long d1 = 0;
  long long d2 = 0;
};

// Exponents of a free rank-2 multiarrangement module: d1 is the least degree
// with a nonzero piece, d2 = |m| - d1 (Saito degree sum). The Hilbert pattern
// dim = max(0, d-d1+1) + max(0, d-d2+1) is asserted for d <= |m|+2 and any
// mismatch signals an arithmetic bug.
template <class F>
ExponentPair multi_exponents(const MultiArrangement2<F>& ma) {
  long long total = ma.total_multiplicity();
  check_internal(total >= 1, "multi_exponents needs |m| >= 1");
  std::vector<long long> dims;
  long long d1 = -1;
  for (long long d = 0; d <= total + 2; ++d) {
    dims.push_back(static_cast<long long>(dm_piece(ma, static_cast<int>(d)).dim()));
    if (d1 < 0 && dims.back() > 0) d1 = d;
  }
  if (d1 < 0 || d1 > total - d1)
    fail(Errc::HilbertPatternViolation, "no generator found in degrees 0..|m|");
  ExponentPair e{d1, total - d1};
  for (long long d = 0; d <= total + 2; ++d) {
    long long expect = std::max(0LL, d - e.d1 + 1) + std::max(0LL, d - e.d2 + 1);
    if (dims[d] != expect)
      fail(Errc::HilbertPatternViolation,
           "Hilbert pattern broken at degree " + std::to_string(d) + ": dim " +
               std::to_string(dims[d]) + " vs expected " + std::to_string(expect));
  }
  return e;
}

template <class F>
ExponentPair multi_exponents(const RestrictedArrangement<F>& r, const std::vector<int>& mult,
                             const F& field) {
  return multi_exponents(MultiArrangement2<F>{field, r.lines, mult});
}

template <class F>
bool in_derivation_module(const Arrangement<F>& a, const Derivation3<F>& th) {
  const F& f = a.field;
  for (std::size_t h = 0; h < a.size(); ++h) {
    auto val = apply_to_form(th, a.forms[h].coeffs, f);
    auto ch = hyperplane_chart(a.forms[h], f);
    if (!reduce_mod_chart(val, ch, f).is_zero(f)) return false;
  }
  return true;
}

template <class F>
struct SaitoResult {
  bool is_basis = false;
  std::optional<elem_t<F>> scalar;
};

// Saito's criterion: det(theta_i(x_j)) = c Q(A) with c != 0 iff the triple is
// a basis of D(A). Membership of each derivation is a precondition.
template <class F>
SaitoResult<F> saito_check(const Arrangement<F>& a, const std::array<Derivation3<F>, 3>& triple) {
  const F& f = a.field;
  for (const auto& th : triple)
    if (!in_derivation_module(a, th))
      fail(Errc::NotLogarithmic, "derivation is not logarithmic for this arrangement");

  SaitoResult<F> out;
  int det_deg = triple[0].degree + triple[1].degree + triple[2].degree;
  if (det_deg != static_cast<int>(a.size())) return out;  // degree sum obstruction

  auto minor = [&](int r1, int r2, int c1, int c2) {
    return poly_sub_mul(triple[r1].comp[c1], triple[r2].comp[c2], triple[r1].comp[c2],
                        triple[r2].comp[c1], f);
  };
  auto det = poly_mul(triple[0].comp[0], minor(1, 2, 1, 2), f);
  det = poly_sub(det, poly_mul(triple[0].comp[1], minor(1, 2, 0, 2), f), f);
  det = poly_add(det, poly_mul(triple[0].comp[2], minor(1, 2, 0, 1), f), f);

  auto q = defining_polynomial(a);
  // find c with det = c*q
  std::size_t lead = q.coeffs.size();
  for (std::size_t i = 0; i < q.coeffs.size(); ++i)
    if (!f.is_zero(q.coeffs[i])) {
      lead = i;
      break;
    }
  check_internal(lead < q.coeffs.size(), "defining polynomial vanished");
  auto c = f.div(det.coeffs[lead], q.coeffs[lead]);
  if (f.is_zero(c)) return out;
  for (std::size_t i = 0; i < q.coeffs.size(); ++i)
    if (!f.eq(det.coeffs[i], f.mul(c, q.coeffs[i]))) return out;
  out.is_basis = true;
  out.scalar = c;
  return out;
}

}  // namespace arrlog
