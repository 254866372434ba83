#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "arrlog/errors.hpp"
#include "arrlog/fields.hpp"
#include "arrlog/polynomials.hpp"

namespace arrlog {

// Defining linear form of a plane through the origin, normalized so the
// first nonzero coefficient is 1. Normalization makes proportionality
// checks and sorting plain comparisons.
template <class F>
struct LinearForm3 {
  std::array<elem_t<F>, 3> coeffs;

  int leading_index(const F& field) const {
    for (int i = 0; i < 3; ++i)
      if (!field.is_zero(coeffs[i])) return i;
    return -1;
  }
};

template <class F>
LinearForm3<F> normalize_form(std::array<elem_t<F>, 3> c, const F& field) {
  int lead = -1;
  for (int i = 0; i < 3; ++i)
    if (!field.is_zero(c[i])) {
      lead = i;
      break;
    }
  if (lead < 0) fail(Errc::ZeroForm, "linear form is zero");
  auto inv = field.inv(c[lead]);
  for (auto& x : c) x = field.mul(x, inv);
  return LinearForm3<F>{c};
}

template <class F>
int cmp_form(const LinearForm3<F>& a, const LinearForm3<F>& b, const F& field) {
  for (int i = 0; i < 3; ++i) {
    int c = field.cmp(a.coeffs[i], b.coeffs[i]);
    if (c != 0) return c;
  }
  return 0;
}

// Simple central arrangement in K^3: normalized, coefficient-lex sorted,
// pairwise non-proportional forms.
template <class F>
struct Arrangement {
  F field;
  std::vector<LinearForm3<F>> forms;
  std::string name;

  std::size_t size() const { return forms.size(); }
};

template <class F>
Arrangement<F> build_arrangement(const F& field,
                                 const std::vector<std::array<elem_t<F>, 3>>& raw_forms,
                                 std::string name = {}) {
  std::vector<LinearForm3<F>> forms;
  forms.reserve(raw_forms.size());
  for (std::size_t i = 0; i < raw_forms.size(); ++i) {
    LinearForm3<F> f = normalize_form<F>(raw_forms[i], field);
    for (std::size_t j = 0; j < forms.size(); ++j)
      if (cmp_form(forms[j], f, field) == 0)
        fail(Errc::DuplicateHyperplane,
             "forms " + std::to_string(j) + " and " + std::to_string(i) +
                 " define the same hyperplane");
    forms.push_back(std::move(f));
  }
  std::sort(forms.begin(), forms.end(),
            [&](const LinearForm3<F>& a, const LinearForm3<F>& b) { return cmp_form(a, b, field) < 0; });
  return Arrangement<F>{field, std::move(forms), std::move(name)};
}

template <class F>
Arrangement<F> delete_hyperplane(const Arrangement<F>& a, std::size_t h) {
  check_internal(h < a.size(), "hyperplane index out of range");
  Arrangement<F> r = a;
  r.forms.erase(r.forms.begin() + h);
  return r;
}

template <class F>
std::size_t arrangement_rank(const Arrangement<F>& a) {
  Matrix<F> m(a.size(), 3, a.field);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = a.forms[i].coeffs[j];
  return rank(m, a.field);
}

// defining polynomial Q(A)
template <class F>
HomoPoly<F> defining_polynomial(const Arrangement<F>& a) {
  HomoPoly<F> q(3, 0, a.field);
  q.coeffs[0] = a.field.one();
  for (const auto& f : a.forms) q = poly_mul(q, linear_poly3<F>(f.coeffs, a.field), a.field);
  return q;
}

// index of the (normalized) form equal to the given raw triple, or npos
template <class F>
std::size_t find_hyperplane(const Arrangement<F>& a, const std::array<elem_t<F>, 3>& raw) {
  auto f = normalize_form<F>(raw, a.field);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (cmp_form(a.forms[i], f, a.field) == 0) return i;
  return static_cast<std::size_t>(-1);
}

}  // namespace arrlog
