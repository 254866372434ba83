#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrlog/builtins.hpp"
#include "arrlog/cokernel.hpp"
#include "arrlog/logmod.hpp"
#include "arrlog/presentation.hpp"
#include "arrlog/session.hpp"

#include "oracles.hpp"

using namespace arrlog;
using namespace arrlog::testing;

namespace {

RationalField Q;

Arrangement<RationalField> rational_builtin(const std::string& name) {
  return builtin_arrangement(find_builtin(name), Q);
}

long long h3(long long e) { return e < 0 ? 0 : (e + 1) * (e + 2) / 2; }

}  // namespace

TEST_CASE("D(A) pieces of the fixtures") {
  auto g4 = rational_builtin("generic4");
  CHECK(d_piece(g4, 0).dim() == 0);  // essential: no constant fields
  CHECK(d_piece(g4, 1).dim() == 1);  // only the Euler field

  auto boolean = rational_builtin("boolean");
  CHECK(d_piece(boolean, 1).dim() == 3);  // x dx, y dy, z dz
  CHECK(d_piece(boolean, 0).dim() == 0);

  // every emitted basis element is logarithmic (independent division oracle)
  for (const auto& name : {"generic4", "ex433", "braidA3"}) {
    auto a = rational_builtin(name);
    for (int d = 0; d <= 3; ++d) {
      auto piece = d_piece(a, d);
      for (const auto& v : piece.basis)
        CHECK(derivation_membership_oracle(a, derivation3_from_vector<RationalField>(d, v, Q)));
    }
  }
}

TEST_CASE("Euler decomposition per degree") {
  // dim D(A)_d = dim S_(d-1) + dim D_H(A)_d for every H
  for (const auto& name : {"generic4", "ex433", "boolean", "braidA3"}) {
    auto a = rational_builtin(name);
    for (int d = 0; d <= 4; ++d) {
      long long dd = static_cast<long long>(d_piece(a, d).dim());
      for (std::size_t h = 0; h < a.size(); ++h)
        CHECK(dd == h3(d - 1) + static_cast<long long>(dh_piece(a, h, d).dim()));
    }
  }
}

TEST_CASE("D_H pieces") {
  auto boolean = rational_builtin("boolean");
  auto hx = find_hyperplane(boolean, {Q.one(), Q.zero(), Q.zero()});
  CHECK(dh_piece(boolean, hx, 1).dim() == 2);  // y dy, z dz

  auto g4 = rational_builtin("generic4");
  for (std::size_t h = 0; h < g4.size(); ++h) CHECK(dh_piece(g4, h, 1).dim() == 0);

  // theta(alpha_H) = 0 exactly on every emitted element
  auto e433 = rational_builtin("ex433");
  for (std::size_t h = 0; h < e433.size(); ++h) {
    auto piece = dh_piece(e433, h, 3);
    for (const auto& v : piece.basis) {
      auto th = derivation3_from_vector<RationalField>(3, v, Q);
      CHECK(apply_to_form(th, e433.forms[h].coeffs, Q).is_zero(Q));
      CHECK(derivation_membership_oracle(e433, th));
    }
  }
}

TEST_CASE("D^2 pieces") {
  auto boolean = rational_builtin("boolean");
  CHECK(d2_piece(boolean, 2).dim() == 3);  // xy d1^d2, xz d1^d3, yz d2^d3
  // free with exp (1,1,1): D^2 = wedge^2 D has generator degrees {2,2,2}
  for (int d = 0; d <= 5; ++d)
    CHECK(static_cast<long long>(d2_piece(boolean, d).dim()) == 3 * h3(d - 2));

  // membership oracle on a non-free example
  auto g4 = rational_builtin("generic4");
  for (int d = 0; d <= 3; ++d) {
    auto piece = d2_piece(g4, d);
    for (const auto& v : piece.basis)
      CHECK(biderivation_membership_oracle(g4, biderivation3_from_vector<RationalField>(d, v, Q)));
  }

  // 2-variable analogue: D^2(A^H)_d = Q(A^H) S_(d-n), dimension max(0, d-n+1)
  std::vector<std::array<mpq_class, 2>> lines = {{Q.zero(), Q.one()},
                                                 {Q.one(), Q.zero()},
                                                 {Q.one(), Q.one()}};
  for (int d = 0; d <= 6; ++d) {
    auto piece = d2_restriction_piece<RationalField>(lines, d, Q);
    CHECK(static_cast<long long>(piece.dim()) == std::max(0, d - 3 + 1));
    for (const auto& v : piece.basis) {
      HomoPoly<RationalField> p(2, d, Q);
      p.coeffs = v;
      for (const auto& line : lines) CHECK(divisible_by_power_oracle(p, line, 1, Q));
    }
  }
}

TEST_CASE("multiarrangement pieces and exponents") {
  // single line with multiplicity m: exponents (0, m)
  for (int m = 1; m <= 4; ++m) {
    MultiArrangement2<RationalField> ma{Q, {{Q.one(), Q.zero()}}, {m}};
    auto e = multi_exponents(ma);
    CHECK(e.d1 == 0);
    CHECK(e.d2 == m);
  }
  {
    // single line, multiplicity 2, degree 1: first component forced to zero
    MultiArrangement2<RationalField> ma{Q, {{Q.one(), Q.zero()}}, {2}};
    CHECK(dm_piece(ma, 1).dim() == 2);
  }

  // Ziegler data of ex433 at H: z = 0 has exponents (3,3)
  auto e433 = rational_builtin("ex433");
  Session<RationalField> s(e433);
  auto hz = find_hyperplane(e433, {Q.zero(), Q.zero(), Q.one()});
  auto zg = s.ziegler(hz);
  CHECK(zg.mult == std::vector<int>{2, 2, 2});
  for (int d = 0; d <= 2; ++d) CHECK(dm_piece(zg, d).dim() == 0);
  CHECK(dm_piece(zg, 3).dim() == 2);
  auto e = multi_exponents(zg);
  CHECK(e.d1 == 3);
  CHECK(e.d2 == 3);

  // braid A3 restriction: lines {s, t, s-t} with m = (2,2,1) gives (2,3)
  auto braid = rational_builtin("braidA3");
  Session<RationalField> sb(braid);
  auto hx = find_hyperplane(braid, {Q.one(), Q.zero(), Q.zero()});
  auto zb = sb.ziegler(hx);
  {
    long long total = 0;
    for (int m : zb.mult) total += m;
    CHECK(total == 5);
  }
  auto eb = multi_exponents(zb);
  CHECK(eb.d1 == 2);
  CHECK(eb.d2 == 3);
  // brute-force cross-check of the Hilbert pattern
  for (int d = 0; d <= 7; ++d) {
    long long expect = std::max(0, d - 2 + 1) + std::max(0, d - 3 + 1);
    CHECK(static_cast<long long>(dm_piece(zb, d).dim()) == expect);
  }

  // emitted dm basis elements satisfy the power conditions (division oracle)
  for (int d = 2; d <= 4; ++d) {
    auto piece = dm_piece(zb, d);
    for (const auto& v : piece.basis) {
      auto th = derivation2_from_vector<RationalField>(d, v, Q);
      for (std::size_t x = 0; x < zb.size(); ++x) {
        auto val = poly_add(poly_scale(th.comp[0], zb.lines[x][0], Q),
                            poly_scale(th.comp[1], zb.lines[x][1], Q), Q);
        CHECK(divisible_by_power_oracle(val, zb.lines[x], zb.mult[x], Q));
      }
    }
  }
}

TEST_CASE("Saito's criterion") {
  auto boolean = rational_builtin("boolean");
  auto diag = [&](int i) {
    Derivation3<RationalField> th;
    th.degree = 1;
    for (int k = 0; k < 3; ++k) th.comp[k] = HomoPoly<RationalField>(3, 1, Q);
    th.comp[i].coeffs[i] = Q.one();
    return th;
  };
  auto r = saito_check(boolean, {diag(0), diag(1), diag(2)});
  CHECK(r.is_basis);
  REQUIRE(r.scalar.has_value());
  CHECK(Q.eq(*r.scalar, Q.one()));

  // two proportional derivations: determinant vanishes
  auto r2 = saito_check(boolean, {diag(0), diag(0), diag(2)});
  CHECK_FALSE(r2.is_basis);

  // a non-logarithmic derivation is rejected
  Derivation3<RationalField> bad;
  bad.degree = 1;
  for (int k = 0; k < 3; ++k) bad.comp[k] = HomoPoly<RationalField>(3, 1, Q);
  bad.comp[1].coeffs[0] = Q.one();  // x d/dy, not tangent to y = 0
  CHECK_THROWS_AS(saito_check(boolean, {bad, diag(1), diag(2)}), Error);

  // ex433 plus x - y = 0 is free with exponents (1,3,4); a searched basis passes
  auto e433 = rational_builtin("ex433");
  std::vector<std::array<mpq_class, 3>> raw;
  for (const auto& fm : e433.forms) raw.push_back(fm.coeffs);
  raw.push_back({Q.one(), Q.from_int(-1), Q.zero()});
  auto extended = build_arrangement(Q, raw);
  Session<RationalField> se(extended);
  auto cert = freeness(se, /*search_saito_basis=*/true);
  CHECK(cert.free);
  CHECK(cert.a == 3);
  CHECK(cert.b == 4);
  REQUIRE(cert.saito_basis.has_value());
  auto sr = saito_check(extended, *cert.saito_basis);
  CHECK(sr.is_basis);
}

TEST_CASE("free Hilbert consistency and Terao factorization") {
  for (const auto& name : {"boolean", "braidA3", "ss7"}) {
    auto a = rational_builtin(name);
    Session<RationalField> s(a);
    auto cert = freeness(s);
    REQUIRE(cert.free);
    for (int d = 0; d <= 7; ++d)
      CHECK(static_cast<long long>(s.d_basis(d).dim()) ==
            h3(d - 1) + h3(d - cert.a) + h3(d - cert.b));
    // chi(A;t) = (t-1)(t-a)(t-b)
    auto cp = s.charpoly();
    CHECK(cp.b1 == cert.a + cert.b);
    CHECK(cp.b2 == cert.a * cert.b);
  }
}

TEST_CASE("restriction exponents (1, |A^H|-1)") {
  for (const auto& name : {"generic4", "ex433", "ex45"}) {
    auto a = rational_builtin(name);
    Session<RationalField> s(a);
    for (std::size_t h = 0; h < a.size(); ++h) {
      long long n = static_cast<long long>(s.restriction(h).lines.size()) - 1;
      for (long long d = 0; d <= n + 2; ++d) {
        long long expect = (d >= 1 ? d : 0) + (d >= n ? d - n + 1 : 0);
        CHECK(static_cast<long long>(s.target_rho(h, static_cast<int>(d)).dim()) == expect);
      }
    }
  }
}

TEST_CASE("multiplicity increment lemma on random 2-multiarrangements") {
  SplitMix64 rng(20240913);
  PrimeField f(1009);
  for (int trial = 0; trial < 60; ++trial) {
    int nlines = 1 + static_cast<int>(rng.below(5));
    std::vector<std::array<std::uint32_t, 2>> lines;
    while (static_cast<int>(lines.size()) < nlines) {
      std::array<std::uint32_t, 2> cand = {f.from_int(static_cast<long>(rng.below(7)) - 3),
                                           f.from_int(static_cast<long>(rng.below(7)) - 3)};
      if (f.is_zero(cand[0]) && f.is_zero(cand[1])) continue;
      auto norm = normalize_form2<PrimeField>(cand, f);
      bool dup = false;
      for (const auto& known : lines) dup = dup || cmp_form2<PrimeField>(known, norm, f) == 0;
      if (!dup) lines.push_back(norm);
    }
    std::vector<int> mult;
    for (int i = 0; i < nlines; ++i) mult.push_back(1 + static_cast<int>(rng.below(4)));
    MultiArrangement2<PrimeField> ma{f, lines, mult};
    auto base = multi_exponents(ma);
    for (int x = 0; x < nlines; ++x) {
      auto bumped = ma;
      bumped.mult[x] += 1;
      auto e = multi_exponents(bumped);
      bool incremented = (e.d1 == base.d1 + 1 && e.d2 == base.d2) ||
                         (e.d1 == base.d1 && e.d2 == base.d2 + 1);
      CHECK(incremented);
    }
  }
}

TEST_CASE("minimal generators and first syzygies") {
  {
    auto a = rational_builtin("ex433");
    Session<RationalField> s(a);
    GeneratorSet<RationalField> gens;
    auto rep = presentation(s, std::nullopt, &gens);
    CHECK(rep.generator_degrees == std::vector<long long>{1, 3, 4, 4});
    CHECK(rep.relation_degrees == std::vector<long long>{5});
    REQUIRE(rep.level.has_value());
    CHECK(*rep.level == 4);
    // generator representatives are honest module elements
    for (const auto& g : gens.gens)
      CHECK(derivation_membership_oracle(
          a, derivation3_from_vector<RationalField>(g.first, g.second, Q)));
  }
  {
    auto a = rational_builtin("ex45");
    Session<RationalField> s(a);
    auto rep = presentation(s);
    CHECK(rep.generator_degrees == std::vector<long long>{1, 2, 6, 6});
    CHECK(rep.relation_degrees == std::vector<long long>{7});
  }
  for (const auto& name : {"boolean", "braidA3", "ss7"}) {
    auto a = rational_builtin(name);
    Session<RationalField> s(a);
    auto rep = presentation(s);
    CHECK(rep.free_shape());
    CHECK(rep.generator_degrees.size() == 3);
    CHECK(rep.generator_degrees[0] == 1);
  }
  {
    auto a = rational_builtin("ex433");
    Session<RationalField> s(a);
    CHECK_THROWS_AS(presentation(s, 5), Error);  // cap below |A|+1
  }
  {
    // spec-shaped wrappers
    auto a = rational_builtin("ex433");
    Session<RationalField> s(a);
    auto [degrees, reps] = minimal_generators(s);
    CHECK(degrees == std::vector<long long>{1, 3, 4, 4});
    CHECK(reps.size() == 4);
    CHECK(first_syzygies(s) == std::vector<long long>{5});
  }
}

TEST_CASE("Hilbert pattern violation is loud") {
  // an inconsistent "multiarrangement" cannot arise through the public API,
  // so corrupt one directly: duplicate lines make the module non-reflexive
  // bookkeeping fail the degree-sum assertion
  MultiArrangement2<RationalField> broken{Q,
                                          {{Q.one(), Q.zero()}, {Q.one(), Q.zero()}},
                                          {1, 1}};
  // theta(u) in (u) twice is just theta(u) in (u): actual exponents (0,1)
  // but |m| = 2 forces d1+d2 = 2 and the pattern check trips
  CHECK_THROWS_AS(multi_exponents(broken), Error);
}
