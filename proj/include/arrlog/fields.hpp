#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "arrlog/errors.hpp"

namespace arrlog {

enum class FieldKind { Rationals, Prime };

struct FieldDescriptor {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t characteristic = 0;  // 0 for the rationals, p for F_p

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Exact rational arithmetic. Elements are GMP rationals kept canonical
// (lowest terms, positive denominator); mpq_class arithmetic preserves that
// once inputs are canonical, so the only care point is construction.
// ---------------------------------------------------------------------------
class RationalField {
 public:
  using Element = mpq_class;

  RationalField() = default;

  FieldDescriptor descriptor() const { return {FieldKind::Rationals, 0}; }
  std::uint32_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long n) const { return Element(n); }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) fail(Errc::BadFieldElement, "zero denominator");
    Element e(num, den);
    e.canonicalize();
    return e;
  }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (a == 0) fail(Errc::BadFieldElement, "division by zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  bool is_zero(const Element& a) const { return a == 0; }
  bool eq(const Element& a, const Element& b) const { return a == b; }
  // total order used for canonical sorting: numeric order
  int cmp(const Element& a, const Element& b) const { return ::cmp(a, b); }

  // rough size metric used for pivot selection in exact elimination
  std::size_t size_metric(const Element& a) const {
    return mpz_size(a.get_num().get_mpz_t()) + mpz_size(a.get_den().get_mpz_t());
  }

  std::string to_string(const Element& a) const {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
  }
};

// ---------------------------------------------------------------------------
// Prime field F_p, residues in [0, p). Inverses come from a table for
// p < 2^16 (the corpus hot path) and extended Euclid otherwise.
// ---------------------------------------------------------------------------
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
      fail(Errc::BadFieldElement, "characteristic must be a prime below 2^31, got " + std::to_string(p));
    if (p < (1u << 16)) {
      auto table = std::make_shared<std::vector<std::uint32_t>>(p, 0u);
      for (std::uint32_t a = 1; a < p; ++a) (*table)[a] = euclid_inv(a);
      inv_table_ = std::move(table);
    }
  }

  FieldDescriptor descriptor() const { return {FieldKind::Prime, p_}; }
  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1 % p_; }
  Element from_int(long n) const {
    long r = n % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class n = num % p, d = den % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    Element dd = static_cast<Element>(d.get_ui());
    if (dd == 0) fail(Errc::BadFieldElement, "denominator vanishes modulo " + std::to_string(p_));
    return mul(static_cast<Element>(n.get_ui()), inv(dd));
  }

  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= p_ ? static_cast<Element>(s - p_) : static_cast<Element>(s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const { return static_cast<Element>((std::uint64_t(a) * b) % p_); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) fail(Errc::BadFieldElement, "division by zero");
    if (inv_table_) return (*inv_table_)[a];
    return euclid_inv(a);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool eq(Element a, Element b) const { return a == b; }
  int cmp(Element a, Element b) const { return a < b ? -1 : (a > b ? 1 : 0); }
  std::size_t size_metric(Element) const { return 1; }

  std::string to_string(Element a) const { return std::to_string(a); }

 private:
  Element euclid_inv(Element a) const {
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
  }

  std::uint32_t p_;
  std::shared_ptr<const std::vector<std::uint32_t>> inv_table_;
};

template <class F>
using elem_t = typename F::Element;

}  // namespace arrlog
