#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrlog/corpus.hpp"
#include "arrlog/fields.hpp"
#include "arrlog/linalg.hpp"

using namespace arrlog;

namespace {

// rank oracle by minor expansion: largest k with a nonzero k x k minor
template <class F>
std::size_t rank_by_minors(const Matrix<F>& m, const F& f) {
  std::size_t n = std::min(m.rows, m.cols);
  auto det = [&](const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs,
                 auto&& self) -> elem_t<F> {
    if (rs.size() == 1) return m.at(rs[0], cs[0]);
    auto acc = f.zero();
    for (std::size_t i = 0; i < rs.size(); ++i) {
      std::vector<std::size_t> rsub;
      for (std::size_t k = 0; k < rs.size(); ++k)
        if (k != i) rsub.push_back(rs[k]);
      std::vector<std::size_t> csub(cs.begin() + 1, cs.end());
      auto minor = self(rsub, csub, self);
      auto term = f.mul(m.at(rs[i], cs[0]), minor);
      acc = (i % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
  };
  auto any_nonzero_minor = [&](std::size_t k) {
    std::vector<std::size_t> rs(k), cs(k);
    // iterate all k-subsets of rows and columns
    std::vector<std::size_t> ri(k), ci(k);
    for (std::size_t i = 0; i < k; ++i) ri[i] = i;
    while (true) {
      for (std::size_t i = 0; i < k; ++i) ci[i] = i;
      while (true) {
        if (!f.is_zero(det(ri, ci, det))) return true;
        std::size_t j = k;
        while (j > 0 && ci[j - 1] == m.cols - k + j - 1) --j;
        if (j == 0) break;
        ++ci[j - 1];
        for (std::size_t t = j; t < k; ++t) ci[t] = ci[t - 1] + 1;
      }
      std::size_t j = k;
      while (j > 0 && ri[j - 1] == m.rows - k + j - 1) --j;
      if (j == 0) break;
      ++ri[j - 1];
      for (std::size_t t = j; t < k; ++t) ri[t] = ri[t - 1] + 1;
    }
    return false;
  };
  for (std::size_t k = n; k >= 1; --k)
    if (any_nonzero_minor(k)) return k;
  return 0;
}

template <class F>
Matrix<F> random_matrix(const F& f, std::size_t rows, std::size_t cols, SplitMix64& rng,
                        long bound = 4) {
  Matrix<F> m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = f.from_int(static_cast<long>(rng.below(2 * bound + 1)) - bound);
  return m;
}

}  // namespace

TEST_CASE("rational field canonical form") {
  RationalField q;
  CHECK(q.eq(q.from_fraction(2, 6), q.from_fraction(1, 3)));
  CHECK(q.to_string(q.from_fraction(2, 6)) == "1/3");
  CHECK(q.to_string(q.from_fraction(1, -2)) == "-1/2");
  CHECK(q.to_string(q.from_int(-7)) == "-7");
  CHECK(q.eq(q.add(q.from_fraction(1, 3), q.from_fraction(1, 6)), q.from_fraction(1, 2)));
  CHECK(q.is_zero(q.sub(q.one(), q.one())));
  CHECK_THROWS_AS(q.from_fraction(1, 0), Error);
  CHECK_THROWS_AS(q.inv(q.zero()), Error);
}

TEST_CASE("prime field arithmetic and inverses") {
  PrimeField f5(5);
  CHECK(f5.eq(f5.from_fraction(1, 3), 2));  // 3^{-1} = 2 mod 5
  CHECK(f5.eq(f5.from_int(-1), 4));
  for (std::uint32_t a = 1; a < 5; ++a) CHECK(f5.mul(a, f5.inv(a)) == 1);

  // extended-Euclid path (no table above 2^16)
  PrimeField big(65537);
  CHECK(big.mul(12345, big.inv(12345)) == 1);
  PrimeField mersenne(2147483647u);
  CHECK(mersenne.mul(987654321u, mersenne.inv(987654321u)) == 1);

  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(f5.from_fraction(1, 5), Error);  // denominator vanishes mod 5
}

TEST_CASE("rref basics") {
  RationalField q;
  auto id = Matrix<RationalField>::identity(2, q);
  auto rr = rref(id, q);
  CHECK(rr.rank == 2);
  CHECK(rr.pivots == std::vector<std::size_t>{0, 1});

  Matrix<RationalField> m(2, 2, q);
  m.at(0, 0) = q.from_int(1);
  m.at(0, 1) = q.from_int(2);
  m.at(1, 0) = q.from_int(2);
  m.at(1, 1) = q.from_int(4);
  CHECK(rref(m, q).rank == 1);
}

TEST_CASE("rref rank agrees with the minor-expansion oracle") {
  RationalField q;
  PrimeField f5(5);
  SplitMix64 rng(12345);
  for (int trial = 0; trial < 12; ++trial) {
    auto m = random_matrix(q, 4, 6, rng, 3);
    CHECK(rref(m, q).rank == rank_by_minors(m, q));
  }
  for (int trial = 0; trial < 12; ++trial) {
    auto m = random_matrix(f5, 4, 6, rng, 4);
    CHECK(rref(m, f5).rank == rank_by_minors(m, f5));
  }
}

TEST_CASE("rref is idempotent and canonical") {
  PrimeField f(1009);
  SplitMix64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_matrix(f, 5, 7, rng, 500);
    auto rr = rref(m, f);
    auto rr2 = rref(rr.reduced, f);
    CHECK(rr2.reduced.data == rr.reduced.data);
    CHECK(rr2.rank == rr.rank);
  }
}

TEST_CASE("nullspace") {
  RationalField q;
  Matrix<RationalField> m(1, 3, q);
  m.at(0, 0) = m.at(0, 1) = m.at(0, 2) = q.one();
  auto ns = nullspace(m, q);
  CHECK(ns.size() == 2);  // one equation, three unknowns

  CHECK(nullspace(Matrix<RationalField>::identity(3, q), q).empty());

  // M v = 0 for every output vector; rank + nullity = cols
  PrimeField f(5);
  SplitMix64 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_matrix(f, 4, 7, rng);
    auto basis = nullspace(a, f);
    CHECK(basis.size() + rref(a, f).rank == 7);
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < a.rows; ++i) {
        auto acc = f.zero();
        for (std::size_t j = 0; j < a.cols; ++j) acc = f.add(acc, f.mul(a.at(i, j), v[j]));
        CHECK(f.is_zero(acc));
      }
    }
  }
}

TEST_CASE("quotient_dim") {
  RationalField q;
  std::vector<std::vector<mpq_class>> u = {{q.one(), q.zero()}, {q.zero(), q.one()}};
  CHECK(quotient_dim<RationalField>(u, u, q) == 0);
  CHECK(quotient_dim<RationalField>(u, {}, q) == 2);

  PrimeField f(5);
  SplitMix64 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    auto mu = random_matrix(f, 3, 6, rng);
    auto mw = random_matrix(f, 2, 6, rng);
    std::vector<std::vector<std::uint32_t>> u2, w2;
    for (std::size_t i = 0; i < 3; ++i) u2.push_back(mu.row(i));
    for (std::size_t i = 0; i < 2; ++i) w2.push_back(mw.row(i));
    auto stacked = stack_rows(mu, mw, f);
    CHECK(quotient_dim<PrimeField>(u2, w2, f) == rref(stacked, f).rank - rref(mw, f).rank);
  }
}

TEST_CASE("RowSpace matches batch rank") {
  PrimeField f(1009);
  SplitMix64 rng(5150);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_matrix(f, 6, 9, rng, 800);
    RowSpace<PrimeField> rs(9, f);
    for (std::size_t i = 0; i < m.rows; ++i) rs.insert(m.row(i));
    CHECK(rs.dim() == rref(m, f).rank);
    // every row is contained afterwards
    for (std::size_t i = 0; i < m.rows; ++i) CHECK(rs.contains(m.row(i)));
  }
}

TEST_CASE("matrix inverse") {
  RationalField q;
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 8; ++trial) {
    auto m = random_matrix(q, 3, 3, rng, 3);
    if (rref(m, q).rank < 3) {
      CHECK_THROWS_AS(matrix_inverse(m, q), Error);
      continue;
    }
    auto inv = matrix_inverse(m, q);
    // m * inv = identity
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        auto acc = q.zero();
        for (std::size_t k = 0; k < 3; ++k) acc = q.add(acc, q.mul(m.at(i, k), inv.at(k, j)));
        CHECK(q.eq(acc, i == j ? q.one() : q.zero()));
      }
  }
}
