#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrlog/builtins.hpp"
#include "arrlog/corpus.hpp"
#include "arrlog/lattice.hpp"
#include "arrlog/restriction.hpp"

using namespace arrlog;

namespace {

RationalField Q;

Arrangement<RationalField> rational_builtin(const std::string& name) {
  return builtin_arrangement(find_builtin(name), Q);
}

template <class F>
std::array<elem_t<F>, 3> triple(const F& f, long a, long b, long c) {
  return {f.from_int(a), f.from_int(b), f.from_int(c)};
}

}  // namespace

TEST_CASE("build_arrangement normalizes, sorts and rejects duplicates") {
  auto a = rational_builtin("generic4");
  CHECK(a.size() == 4);
  // sorted coefficient-lex: z, y, x, x+y+z
  CHECK(Q.eq(a.forms[0].coeffs[2], Q.one()));
  CHECK(Q.eq(a.forms[3].coeffs[0], Q.one()));
  CHECK(Q.eq(a.forms[3].coeffs[1], Q.one()));

  CHECK_THROWS_AS(build_arrangement(Q, {triple(Q, 1, 0, 0), triple(Q, 2, 0, 0)}), Error);
  CHECK_THROWS_AS(build_arrangement(Q, {triple(Q, 0, 0, 0)}), Error);

  // x+y and x-y coincide in characteristic 2
  PrimeField f2(2);
  CHECK_THROWS_AS(build_arrangement(f2, {triple(f2, 1, 1, 0), triple(f2, 1, -1, 0)}), Error);
  // a form collapsing to zero over F_5
  PrimeField f5(5);
  CHECK_THROWS_AS(build_arrangement(f5, {triple(f5, 5, 10, 5)}), Error);
}

TEST_CASE("intersection lattice of the generic 4-plane arrangement") {
  auto lat = intersection_lattice(rational_builtin("generic4"));
  CHECK(lat.lines.size() == 6);
  for (const auto& line : lat.lines) {
    CHECK(line.hyperplanes.size() == 2);
    CHECK(line.mu == 1);
  }
  CHECK(lat.rank == 3);
  CHECK(lat.origin_mu == -3);
}

TEST_CASE("single plane lattice") {
  auto a = build_arrangement(Q, {triple(Q, 1, 0, 0)});
  auto lat = intersection_lattice(a);
  CHECK(lat.lines.empty());
  CHECK(lat.rank == 1);
  CHECK_FALSE(lat.has_origin);
}

TEST_CASE("Moebius recursion on the 7-plane arrangement") {
  auto a = rational_builtin("ex433");
  auto lat = intersection_lattice(a);
  long long sum = 0;
  std::size_t pairs = 0;
  for (const auto& line : lat.lines) {
    // pencil recursion: mu(X) = |A_X| - 1
    CHECK(line.mu == static_cast<long long>(line.hyperplanes.size()) - 1);
    sum += line.mu;
    pairs += line.hyperplanes.size() * (line.hyperplanes.size() - 1) / 2;
  }
  CHECK(pairs == 21);  // every pair of planes in exactly one line
  CHECK(sum == 16);    // forces chi = t^3 - 7t^2 + 16t - 10 below
  CHECK(lat.origin_mu == -(1 - 7 + sum));
}

TEST_CASE("characteristic polynomials of the paper fixtures") {
  auto cp4 = char_poly(rational_builtin("generic4"));
  CHECK(cp4.b1 == 3);
  CHECK(cp4.b2 == 3);
  CHECK(cp4.chi == std::array<long long, 4>{1, -4, 6, -3});

  auto cp433 = char_poly(rational_builtin("ex433"));
  CHECK(cp433.b1 == 6);
  CHECK(cp433.b2 == 10);

  auto cp45 = char_poly(rational_builtin("ex45"));
  CHECK(cp45.b1 == 7);
  CHECK(cp45.b2 == 11);

  CHECK_THROWS_AS(char_poly(Arrangement<RationalField>{Q, {}, ""}), Error);
}

TEST_CASE("non-essential arrangements get a factor of t") {
  auto a = build_arrangement(Q, {triple(Q, 1, 0, 0), triple(Q, 0, 1, 0), triple(Q, 1, 1, 0)});
  auto cp = char_poly(a);
  // chi = t(t-1)(t-2)
  CHECK(cp.chi == std::array<long long, 4>{1, -3, 2, 0});
  CHECK(cp.b1 == 2);
  CHECK(cp.b2 == 0);

  auto single = build_arrangement(Q, {triple(Q, 1, 2, 3)});
  auto cps = char_poly(single);
  CHECK(cps.chi == std::array<long long, 4>{1, -1, 0, 0});
}

TEST_CASE("LP invariants of the fixtures") {
  auto g4 = rational_builtin("generic4");
  for (std::size_t h = 0; h < g4.size(); ++h) CHECK(lp_invariant(g4, h) == 1);

  auto e433 = rational_builtin("ex433");
  auto hz = find_hyperplane(e433, triple(Q, 0, 0, 1));
  CHECK(lp_invariant(e433, hz) == 2);

  auto e45 = rational_builtin("ex45");
  auto hx = find_hyperplane(e45, triple(Q, 1, 0, 0));
  CHECK(lp_invariant(e45, hx) == 1);

  auto single = build_arrangement(Q, {triple(Q, 1, 0, 0)});
  CHECK_THROWS_AS(lp_invariant(single, 0), Error);
}

TEST_CASE("Euler restriction charts and lines") {
  auto g4 = rational_builtin("generic4");
  auto hx = find_hyperplane(g4, triple(Q, 1, 0, 0));
  auto res = euler_restriction(g4, hx);
  REQUIRE(res.lines.size() == 3);
  // normalized sorted: (0,1)=t, (1,0)=s, (1,1)=s+t  [s,t are the chart images of y,z]
  CHECK(Q.eq(res.lines[0][0], Q.zero()));
  CHECK(Q.eq(res.lines[0][1], Q.one()));
  CHECK(Q.eq(res.lines[1][0], Q.one()));
  CHECK(Q.eq(res.lines[1][1], Q.zero()));
  CHECK(Q.eq(res.lines[2][0], Q.one()));
  CHECK(Q.eq(res.lines[2][1], Q.one()));
  // chart sends alpha_H to the first coordinate
  CHECK(matrix_invertible(res.chart, Q));

  auto e45 = rational_builtin("ex45");
  CHECK(euler_restriction(e45, find_hyperplane(e45, triple(Q, 1, 0, 0))).lines.size() == 3);

  auto e433 = rational_builtin("ex433");
  auto resz = euler_restriction(e433, find_hyperplane(e433, triple(Q, 0, 0, 1)));
  REQUIRE(resz.lines.size() == 3);  // x, y, x-y in the chart's coordinates
}

TEST_CASE("Ziegler multiplicities") {
  auto g4 = rational_builtin("generic4");
  for (std::size_t h = 0; h < g4.size(); ++h)
    CHECK(ziegler_multiplicity(g4, h) == std::vector<int>{1, 1, 1});

  auto e433 = rational_builtin("ex433");
  auto hz = find_hyperplane(e433, triple(Q, 0, 0, 1));
  CHECK(ziegler_multiplicity(e433, hz) == std::vector<int>{2, 2, 2});

  auto e45 = rational_builtin("ex45");
  auto hx = find_hyperplane(e45, triple(Q, 1, 0, 0));
  CHECK(ziegler_multiplicity(e45, hx) == std::vector<int>{1, 1, 5});
}

TEST_CASE("chi0 evaluation symmetry and restriction invariants") {
  for (const auto& name : {"generic4", "ex433", "ex45", "ss7", "braidA3", "boolean"}) {
    auto a = rational_builtin(name);
    auto cp = char_poly(a);
    for (long long sv = -3; sv <= 10; ++sv) CHECK(cp.chi0_eval(sv) == cp.chi0_eval(cp.b1 - sv));
    for (std::size_t h = 0; h < a.size(); ++h) {
      auto m = ziegler_multiplicity(a, h);
      long long total = 0;
      for (int x : m) total += x;
      CHECK(total == static_cast<long long>(a.size()) - 1);
      CHECK(euler_restriction(a, h).lines.size() >= 1);
      CHECK(lp_invariant(a, h) >= 0);
    }
  }
}

TEST_CASE("lattice invariants over a random corpus sample") {
  CorpusSpec spec;
  spec.seed = 314159;
  spec.count = 25;
  spec.max_planes = 7;
  spec.bound = 3;
  PrimeField f(1009);
  for (std::uint64_t i = 0; i < spec.count; ++i) {
    auto a = random_arrangement(f, spec, i);
    auto lat = intersection_lattice(a);
    std::size_t pairs = 0;
    for (const auto& line : lat.lines) {
      CHECK(line.mu == static_cast<long long>(line.hyperplanes.size()) - 1);
      pairs += line.hyperplanes.size() * (line.hyperplanes.size() - 1) / 2;
    }
    CHECK(pairs == a.size() * (a.size() - 1) / 2);
    auto cp = char_poly(a);
    CHECK(cp.chi[0] + cp.chi[1] + cp.chi[2] + cp.chi[3] == 0);  // chi(1) = 0
    for (std::size_t h = 0; h < a.size(); ++h) CHECK(lp_invariant(a, h) >= 0);
  }
}
