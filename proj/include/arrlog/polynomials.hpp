#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "arrlog/errors.hpp"
#include "arrlog/fields.hpp"
#include "arrlog/linalg.hpp"

namespace arrlog {

// Monomial order is graded-lexicographic with x1 > x2 > x3, fixed globally.
// Degree-d monomials in 3 variables are indexed by exponent triples
// (a,b,c), a+b+c = d, in lex-descending order; in 2 variables s^(d-i) t^i
// sits at index i.

inline std::size_t mono_count3(int d) { return std::size_t(d + 1) * (d + 2) / 2; }
inline std::size_t mono_count2(int d) { return std::size_t(d + 1); }

inline std::size_t mono_index3(int d, int a, int b) {
  return std::size_t(d - a) * (d - a + 1) / 2 + std::size_t(d - a - b);
}
inline std::size_t mono_index2(int d, int a) { return std::size_t(d - a); }

inline std::vector<std::array<int, 3>> mono_exps3(int d) {
  std::vector<std::array<int, 3>> out;
  out.reserve(mono_count3(d));
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

inline std::vector<std::array<int, 2>> mono_exps2(int d) {
  std::vector<std::array<int, 2>> out;
  out.reserve(mono_count2(d));
  for (int a = d; a >= 0; --a) out.push_back({a, d - a});
  return out;
}

inline std::size_t mono_count(int nvars, int d) {
  return nvars == 3 ? mono_count3(d) : mono_count2(d);
}

// Homogeneous polynomial in 2 or 3 variables. The degree is formal: the
// all-zero coefficient vector of degree d is a valid value.
template <class F>
struct HomoPoly {
  using E = elem_t<F>;

  int nvars = 3;
  int degree = 0;
  std::vector<E> coeffs;

  HomoPoly() = default;
  HomoPoly(int nv, int deg, const F& field)
      : nvars(nv), degree(deg), coeffs(mono_count(nv, deg), field.zero()) {}

  bool is_zero(const F& field) const {
    for (const auto& c : coeffs)
      if (!field.is_zero(c)) return false;
    return true;
  }
};

template <class F>
HomoPoly<F> poly_add(const HomoPoly<F>& a, const HomoPoly<F>& b, const F& field) {
  check_internal(a.nvars == b.nvars && a.degree == b.degree, "poly_add shape mismatch");
  HomoPoly<F> r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = field.add(r.coeffs[i], b.coeffs[i]);
  return r;
}

template <class F>
HomoPoly<F> poly_sub(const HomoPoly<F>& a, const HomoPoly<F>& b, const F& field) {
  check_internal(a.nvars == b.nvars && a.degree == b.degree, "poly_sub shape mismatch");
  HomoPoly<F> r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = field.sub(r.coeffs[i], b.coeffs[i]);
  return r;
}

template <class F>
HomoPoly<F> poly_scale(const HomoPoly<F>& a, const elem_t<F>& c, const F& field) {
  HomoPoly<F> r = a;
  for (auto& x : r.coeffs) x = field.mul(x, c);
  return r;
}

template <class F>
HomoPoly<F> poly_mul(const HomoPoly<F>& a, const HomoPoly<F>& b, const F& field) {
  check_internal(a.nvars == b.nvars, "poly_mul variable mismatch");
  HomoPoly<F> r(a.nvars, a.degree + b.degree, field);
  if (a.nvars == 3) {
    auto ea = mono_exps3(a.degree);
    auto eb = mono_exps3(b.degree);
    for (std::size_t i = 0; i < ea.size(); ++i) {
      if (field.is_zero(a.coeffs[i])) continue;
      for (std::size_t j = 0; j < eb.size(); ++j) {
        if (field.is_zero(b.coeffs[j])) continue;
        std::size_t k = mono_index3(r.degree, ea[i][0] + eb[j][0], ea[i][1] + eb[j][1]);
        r.coeffs[k] = field.add(r.coeffs[k], field.mul(a.coeffs[i], b.coeffs[j]));
      }
    }
  } else {
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (field.is_zero(a.coeffs[i])) continue;
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
        if (field.is_zero(b.coeffs[j])) continue;
        r.coeffs[i + j] = field.add(r.coeffs[i + j], field.mul(a.coeffs[i], b.coeffs[j]));
      }
    }
  }
  return r;
}

// a*b - c*d for same-shape products
template <class F>
HomoPoly<F> poly_sub_mul(const HomoPoly<F>& a, const HomoPoly<F>& b, const HomoPoly<F>& c,
                         const HomoPoly<F>& d, const F& field) {
  return poly_sub(poly_mul(a, b, field), poly_mul(c, d, field), field);
}

template <class F>
HomoPoly<F> poly_mul_monomial3(const HomoPoly<F>& a, const std::array<int, 3>& m, const F& field) {
  int dm = m[0] + m[1] + m[2];
  HomoPoly<F> r(3, a.degree + dm, field);
  auto ea = mono_exps3(a.degree);
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (field.is_zero(a.coeffs[i])) continue;
    r.coeffs[mono_index3(r.degree, ea[i][0] + m[0], ea[i][1] + m[1])] = a.coeffs[i];
  }
  return r;
}

// partial derivative; returns the (degree-1)-part, or the zero polynomial of
// degree 0 when degree is 0
template <class F>
HomoPoly<F> poly_derivative(const HomoPoly<F>& a, int var, const F& field) {
  if (a.degree == 0) return HomoPoly<F>(a.nvars, 0, field);
  HomoPoly<F> r(a.nvars, a.degree - 1, field);
  if (a.nvars == 3) {
    auto ea = mono_exps3(a.degree);
    for (std::size_t i = 0; i < ea.size(); ++i) {
      if (field.is_zero(a.coeffs[i]) || ea[i][var] == 0) continue;
      auto e = ea[i];
      e[var] -= 1;
      std::size_t k = mono_index3(r.degree, e[0], e[1]);
      r.coeffs[k] = field.add(r.coeffs[k], field.mul(a.coeffs[i], field.from_int(ea[i][var])));
    }
  } else {
    auto ea = mono_exps2(a.degree);
    for (std::size_t i = 0; i < ea.size(); ++i) {
      if (field.is_zero(a.coeffs[i]) || ea[i][var] == 0) continue;
      auto e = ea[i];
      e[var] -= 1;
      std::size_t k = mono_index2(r.degree, e[0]);
      r.coeffs[k] = field.add(r.coeffs[k], field.mul(a.coeffs[i], field.from_int(ea[i][var])));
    }
  }
  return r;
}

template <class F>
HomoPoly<F> linear_poly3(const std::array<elem_t<F>, 3>& c, const F& field) {
  HomoPoly<F> p(3, 1, field);
  p.coeffs[0] = c[0];
  p.coeffs[1] = c[1];
  p.coeffs[2] = c[2];
  return p;
}

template <class F>
HomoPoly<F> linear_poly2(const std::array<elem_t<F>, 2>& c, const F& field) {
  HomoPoly<F> p(2, 1, field);
  p.coeffs[0] = c[0];
  p.coeffs[1] = c[1];
  return p;
}

// powers L^0 .. L^max of a linear polynomial
template <class F>
std::vector<HomoPoly<F>> linear_powers(const HomoPoly<F>& lin, int max, const F& field) {
  std::vector<HomoPoly<F>> pw;
  pw.reserve(max + 1);
  HomoPoly<F> one(lin.nvars, 0, field);
  one.coeffs[0] = field.one();
  pw.push_back(one);
  for (int k = 1; k <= max; ++k) pw.push_back(poly_mul(pw.back(), lin, field));
  return pw;
}

template <class F>
bool matrix_invertible(const Matrix<F>& t, const F& field) {
  return t.rows == t.cols && rank(t, field) == t.rows;
}

// p composed with the substitution x -> T.x (row i of T gives the image of x_i).
// Multiplicative over products and degree-preserving.
template <class F>
HomoPoly<F> poly_linear_change(const HomoPoly<F>& p, const Matrix<F>& t, const F& field) {
  check_internal(std::size_t(p.nvars) == t.rows && t.rows == t.cols, "chart shape mismatch");
  if (!matrix_invertible(t, field)) fail(Errc::SingularChart, "substitution matrix is singular");
  int d = p.degree;
  HomoPoly<F> r(p.nvars, d, field);
  if (p.nvars == 3) {
    std::array<std::vector<HomoPoly<F>>, 3> pw;
    for (int i = 0; i < 3; ++i)
      pw[i] = linear_powers(linear_poly3<F>({t.at(i, 0), t.at(i, 1), t.at(i, 2)}, field), d, field);
    auto ez = mono_exps3(d);
    for (std::size_t i = 0; i < ez.size(); ++i) {
      if (field.is_zero(p.coeffs[i])) continue;
      auto term = poly_mul(poly_mul(pw[0][ez[i][0]], pw[1][ez[i][1]], field), pw[2][ez[i][2]], field);
      r = poly_add(r, poly_scale(term, p.coeffs[i], field), field);
    }
  } else {
    std::array<std::vector<HomoPoly<F>>, 2> pw;
    for (int i = 0; i < 2; ++i)
      pw[i] = linear_powers(linear_poly2<F>({t.at(i, 0), t.at(i, 1)}, field), d, field);
    auto ez = mono_exps2(d);
    for (std::size_t i = 0; i < ez.size(); ++i) {
      if (field.is_zero(p.coeffs[i])) continue;
      auto term = poly_mul(pw[0][ez[i][0]], pw[1][ez[i][1]], field);
      r = poly_add(r, poly_scale(term, p.coeffs[i], field), field);
    }
  }
  return r;
}

template <class F>
Matrix<F> matrix_inverse2(const Matrix<F>& t, const F& field) {
  check_internal(t.rows == 2 && t.cols == 2, "expected 2x2 matrix");
  auto det = field.sub(field.mul(t.at(0, 0), t.at(1, 1)), field.mul(t.at(0, 1), t.at(1, 0)));
  if (field.is_zero(det)) fail(Errc::SingularChart, "singular 2x2 chart");
  auto di = field.inv(det);
  Matrix<F> r(2, 2, field);
  r.at(0, 0) = field.mul(t.at(1, 1), di);
  r.at(0, 1) = field.mul(field.neg(t.at(0, 1)), di);
  r.at(1, 0) = field.mul(field.neg(t.at(1, 0)), di);
  r.at(1, 1) = field.mul(t.at(0, 0), di);
  return r;
}

// Coefficient matrix of the substitution x_i -> v_i s + w_i t applied to all
// degree-d monomials in 3 variables: column j holds the 2-variable image of
// the j-th monomial. This is the "drop to the hyperplane chart" workhorse:
// reducing q modulo the chart form is exactly this substitution.
template <class F>
Matrix<F> substitution_3to2_matrix(int d, const std::array<elem_t<F>, 3>& v,
                                   const std::array<elem_t<F>, 3>& w, const F& field) {
  std::array<std::vector<std::vector<elem_t<F>>>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    // (v_i s + w_i t)^k as dense length-(k+1) arrays in the 2-var order
    pw[i].resize(d + 1);
    pw[i][0] = {field.one()};
    for (int k = 1; k <= d; ++k) {
      const auto& prev = pw[i][k - 1];
      std::vector<elem_t<F>> cur(k + 1, field.zero());
      for (int j = 0; j < k; ++j) {
        cur[j] = field.add(cur[j], field.mul(prev[j], v[i]));
        cur[j + 1] = field.add(cur[j + 1], field.mul(prev[j], w[i]));
      }
      pw[i][k] = std::move(cur);
    }
  }
  auto conv = [&](const std::vector<elem_t<F>>& a, const std::vector<elem_t<F>>& b) {
    std::vector<elem_t<F>> r(a.size() + b.size() - 1, field.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (field.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = field.add(r[i + j], field.mul(a[i], b[j]));
    }
    return r;
  };

  auto ez = mono_exps3(d);
  Matrix<F> m(mono_count2(d), mono_count3(d), field);
  for (std::size_t col = 0; col < ez.size(); ++col) {
    auto img = conv(conv(pw[0][ez[col][0]], pw[1][ez[col][1]]), pw[2][ez[col][2]]);
    for (std::size_t row = 0; row < img.size(); ++row) m.at(row, col) = img[row];
  }
  return m;
}

// Coefficient matrix of p -> p∘T for 2-variable degree-d polynomials.
template <class F>
Matrix<F> change2_matrix(const Matrix<F>& t, int d, const F& field) {
  check_internal(t.rows == 2 && t.cols == 2, "expected 2x2 matrix");
  std::array<std::vector<std::vector<elem_t<F>>>, 2> pw;
  for (int i = 0; i < 2; ++i) {
    pw[i].resize(d + 1);
    pw[i][0] = {field.one()};
    for (int k = 1; k <= d; ++k) {
      const auto& prev = pw[i][k - 1];
      std::vector<elem_t<F>> cur(k + 1, field.zero());
      for (int j = 0; j < k; ++j) {
        cur[j] = field.add(cur[j], field.mul(prev[j], t.at(i, 0)));
        cur[j + 1] = field.add(cur[j + 1], field.mul(prev[j], t.at(i, 1)));
      }
      pw[i][k] = std::move(cur);
    }
  }
  auto ez = mono_exps2(d);
  Matrix<F> m(mono_count2(d), mono_count2(d), field);
  for (std::size_t col = 0; col < ez.size(); ++col) {
    const auto& pa = pw[0][ez[col][0]];
    const auto& pb = pw[1][ez[col][1]];
    std::vector<elem_t<F>> img(d + 1, field.zero());
    for (std::size_t i = 0; i < pa.size(); ++i) {
      if (field.is_zero(pa[i])) continue;
      for (std::size_t j = 0; j < pb.size(); ++j)
        img[i + j] = field.add(img[i + j], field.mul(pa[i], pb[j]));
    }
    for (std::size_t row = 0; row < img.size(); ++row) m.at(row, col) = img[row];
  }
  return m;
}

// Functionals on degree-d 2-variable coefficient vectors whose common kernel
// is { p : ell^m | p }. One row per demanded vanishing coefficient.
template <class F>
std::vector<std::vector<elem_t<F>>> divisibility_functionals(const std::array<elem_t<F>, 2>& ell,
                                                             int m, int d, const F& field) {
  check_internal(m >= 1 && d >= 0, "divisibility_functionals: m >= 1, d >= 0");
  if (field.is_zero(ell[0]) && field.is_zero(ell[1]))
    fail(Errc::ZeroForm, "zero linear form in divisibility test");
  Matrix<F> n(2, 2, field);
  n.at(0, 0) = ell[0];
  n.at(0, 1) = ell[1];
  if (!field.is_zero(ell[0])) {
    n.at(1, 0) = field.zero();
    n.at(1, 1) = field.one();
  } else {
    n.at(1, 0) = field.one();
    n.at(1, 1) = field.zero();
  }
  auto cm = change2_matrix(matrix_inverse2(n, field), d, field);
  std::vector<std::vector<elem_t<F>>> rows;
  int count = std::min(m, d + 1);
  rows.reserve(count);
  for (int j = 0; j < count; ++j) rows.push_back(cm.row(mono_index2(d, j)));
  return rows;
}

template <class F>
struct PowerDivisibility {
  bool divisible = false;
  // functionals on the coefficient vector of p, one per demanded vanishing
  std::vector<std::vector<elem_t<F>>> conditions;
};

// Conditions for ell^m | p in two variables. After an invertible change of
// coordinates sending ell to the first coordinate s, the functionals are the
// coefficients of s^0,...,s^(min(m, deg p + 1) - 1); p is divisible iff all
// of them vanish on p.
template <class F>
PowerDivisibility<F> power_divisibility_conditions(const HomoPoly<F>& p,
                                                   const std::array<elem_t<F>, 2>& ell, int m,
                                                   const F& field) {
  check_internal(p.nvars == 2 && m >= 1, "power_divisibility: 2-var polynomial, m >= 1");
  PowerDivisibility<F> out;
  out.conditions = divisibility_functionals<F>(ell, m, p.degree, field);
  out.divisible = true;
  for (const auto& cond : out.conditions) {
    auto acc = field.zero();
    for (std::size_t i = 0; i < cond.size(); ++i)
      acc = field.add(acc, field.mul(cond[i], p.coeffs[i]));
    if (!field.is_zero(acc)) {
      out.divisible = false;
      break;
    }
  }
  return out;
}

}  // namespace arrlog
