#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrlog/arrlog.hpp"

using namespace arrlog;

namespace {

RationalField Q;

}  // namespace

TEST_CASE("parse_input accepts the documented format") {
  auto in = parse_input(R"({"field":{"type":"rational"},
                            "forms":[[1,0,0],[0,1,0],[0,0,1],[1,1,1]],
                            "name":"g4"})");
  CHECK(in.field.kind == FieldKind::Rationals);
  CHECK(in.name == "g4");
  auto a = arrangement_from_input(in, Q);
  CHECK(a.size() == 4);
  auto ref = builtin_arrangement(find_builtin("generic4"), Q);
  for (std::size_t i = 0; i < 4; ++i) CHECK(cmp_form(a.forms[i], ref.forms[i], Q) == 0);
}

TEST_CASE("fraction coefficients, including over prime fields") {
  auto in = parse_input(R"({"field":{"type":"prime","p":5},
                            "forms":[["1/3",1,0],[0,0,1]]})");
  PrimeField f5(5);
  auto a = arrangement_from_input(in, f5);
  // 1/3 = 2 mod 5; normalized form divides by the leading 2: (1, 3, 0)
  auto h = find_hyperplane(a, {f5.from_int(2), f5.one(), f5.zero()});
  CHECK(h != static_cast<std::size_t>(-1));

  auto in2 = parse_input(R"({"field":{"type":"rational"},"forms":[["1/2","-3/4",2]]})");
  auto a2 = arrangement_from_input(in2, Q);
  CHECK(Q.eq(a2.forms[0].coeffs[1], Q.from_fraction(-3, 2)));  // normalized by 1/2

  // denominator divisible by p
  auto in3 = parse_input(R"({"field":{"type":"prime","p":5},"forms":[["1/5",0,0]]})");
  PrimeField f(5);
  CHECK_THROWS_AS(arrangement_from_input(in3, f), Error);
}

TEST_CASE("parse errors carry positions and kinds") {
  CHECK_THROWS_AS(parse_input("{not json"), Error);
  CHECK_THROWS_AS(parse_input(R"({"forms":[[1,0,0]]})"), Error);          // missing field
  CHECK_THROWS_AS(parse_input(R"({"field":{"type":"real"},"forms":[]})"), Error);
  CHECK_THROWS_AS(parse_input(R"({"field":{"type":"prime","p":6},"forms":[]})"), Error);
  CHECK_THROWS_AS(parse_input(R"({"field":{"type":"rational"},"forms":[[1,0]]})"), Error);
  CHECK_THROWS_AS(parse_input(R"({"field":{"type":"rational"},"forms":[["x",0,0]]})"), Error);

  auto dup = parse_input(R"({"field":{"type":"rational"},"forms":[[1,0,0],[2,0,0]]})");
  try {
    arrangement_from_input(dup, Q);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateHyperplane);
    CHECK(std::string(e.what()).find("0") != std::string::npos);
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
}

TEST_CASE("round trip: parse(render(A)) = A") {
  for (const auto& def : builtin_registry()) {
    with_field(def.field, [&](auto field) {
      using F = decltype(field);
      auto a = builtin_arrangement(def, field);
      auto text = render_arrangement(a);
      auto in = parse_input(text);
      CHECK(in.field == def.field);
      auto back = arrangement_from_input(in, field);
      REQUIRE(back.size() == a.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(cmp_form(back.forms[i], a.forms[i], field) == 0);
    });
  }
  // corpus arrangements too
  CorpusSpec spec;
  spec.seed = 11;
  spec.count = 6;
  spec.max_planes = 6;
  spec.bound = 3;
  for (std::uint64_t i = 0; i < spec.count; ++i) {
    auto a = random_arrangement(Q, spec, i);
    auto back = arrangement_from_input(parse_input(render_arrangement(a)), Q);
    REQUIRE(back.size() == a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
      CHECK(cmp_form(back.forms[k], a.forms[k], Q) == 0);
  }
}

TEST_CASE("canonical serialization is byte-stable") {
  auto a = builtin_arrangement(find_builtin("generic4"), Q);
  CHECK(render_arrangement(a) == render_arrangement(a));

  Session<RationalField> s1(a), s2(a);
  auto r1 = analyze(s1, std::nullopt, true);
  auto r2 = analyze(s2, std::nullopt, true);
  CHECK(report_json(s1, r1).dump(1) == report_json(s2, r2).dump(1));
}

TEST_CASE("polynomial strings") {
  auto cp = char_poly(builtin_arrangement(find_builtin("ex45"), Q));
  CHECK(chi_string(cp) == "t^3 - 8t^2 + 18t - 11");
  CHECK(chi0_string(cp) == "t^2 - 7t + 11");
  auto cp4 = char_poly(builtin_arrangement(find_builtin("generic4"), Q));
  CHECK(chi0_string(cp4) == "t^2 - 3t + 3");
  CHECK(poly_string({1, 0, -1}, "t") == "t^2 - 1");
  CHECK(poly_string({-1, 1}, "t") == "-t + 1");
  CHECK(poly_string({0}, "t") == "0");
}

TEST_CASE("builtin registry") {
  CHECK(find_builtin("ex433").forms.size() == 7);
  CHECK(find_builtin("ex45").forms.size() == 8);
  CHECK(find_builtin("pentagon_f11").forms.size() == 11);
  CHECK_THROWS_AS(find_builtin("nope"), Error);

  auto cp = char_poly(builtin_arrangement(find_builtin("ex45"), Q));
  CHECK(cp.b1 == 7);
}

TEST_CASE("pentagon fixture has the pentagonal lattice and is free (1,5,5)") {
  PrimeField f11(11);
  auto a = builtin_arrangement(find_builtin("pentagon_f11"), f11);
  auto lat = intersection_lattice(a);
  // 5 vertices on 4 lines each, 5 infinity points on 3, 10 double points
  std::size_t quads = 0, triples = 0, doubles = 0;
  for (const auto& line : lat.lines) {
    if (line.hyperplanes.size() == 4) ++quads;
    else if (line.hyperplanes.size() == 3) ++triples;
    else if (line.hyperplanes.size() == 2) ++doubles;
    else CHECK(false);
  }
  CHECK(quads == 5);
  CHECK(triples == 5);
  CHECK(doubles == 10);
  CHECK(lat.lines.size() == 20);

  auto cp = char_poly(a);
  CHECK(cp.b1 == 10);
  CHECK(cp.b2 == 25);

  Session<PrimeField> s(a);
  auto cert = freeness(s);
  CHECK(cert.free);
  CHECK(cert.a == 5);
  CHECK(cert.b == 5);
  for (std::size_t h = 0; h < a.size(); ++h)
    CHECK(s.restriction(h).lines.size() == 5);
}

TEST_CASE("random arrangements are deterministic and valid") {
  CorpusSpec spec;
  spec.seed = 20250101;
  spec.count = 10;
  spec.max_planes = 8;
  spec.bound = 3;

  for (std::uint64_t i = 0; i < 5; ++i) {
    auto a1 = random_arrangement(Q, spec, i);
    auto a2 = random_arrangement(Q, spec, i);
    REQUIRE(a1.size() == a2.size());
    for (std::size_t k = 0; k < a1.size(); ++k)
      CHECK(cmp_form(a1.forms[k], a2.forms[k], Q) == 0);
    CHECK(a1.size() >= 3);
    CHECK(a1.size() <= 8);
    // pairwise non-proportional by construction; normalized + sorted
    for (std::size_t k = 1; k < a1.size(); ++k)
      CHECK(cmp_form(a1.forms[k - 1], a1.forms[k], Q) < 0);
  }

  // a box too small for the requested plane count eventually exhausts
  CorpusSpec tiny;
  tiny.seed = 7;
  tiny.count = 50;
  tiny.max_planes = 40;
  tiny.bound = 1;  // only 13 distinct normalized rational forms exist
  bool exhausted = false;
  for (std::uint64_t i = 0; i < 50 && !exhausted; ++i) {
    try {
      random_arrangement(Q, tiny, i);
    } catch (const Error& e) {
      exhausted = e.code() == Errc::GenerationExhausted;
    }
  }
  CHECK(exhausted);
}

TEST_CASE("mini corpus verification passes and is reproducible") {
  {
    CorpusSpec spec;
    spec.seed = 99;
    spec.count = 6;
    spec.max_planes = 6;
    spec.bound = 2;
    spec.field = {FieldKind::Rationals, 0};
    auto r1 = run_corpus(Q, spec, 2);
    CHECK(r1.pass);
    auto r2 = run_corpus(Q, spec, 1);  // thread count must not affect the report
    CHECK(r1.report.dump(1) == r2.report.dump(1));
  }
  {
    CorpusSpec spec;
    spec.seed = 1234;
    spec.count = 20;
    spec.max_planes = 7;
    spec.bound = 3;
    spec.field = {FieldKind::Prime, 1009};
    PrimeField f(1009);
    auto r = run_corpus(f, spec, 2);
    CHECK(r.pass);
    CHECK(r.failed == 0);
  }
}

TEST_CASE("analysis report content") {
  auto a = builtin_arrangement(find_builtin("ex433"), Q);
  Session<RationalField> s(a);
  auto res = analyze(s, std::nullopt, true);
  auto j = report_json(s, res);
  CHECK(j["charpoly"]["b1"] == 6);
  CHECK(j["charpoly"]["b2"] == 10);
  CHECK(j["freeness"]["free"] == false);
  CHECK(j["presentation"]["generators"] == std::vector<long long>{1, 3, 4, 4});
  CHECK(j["presentation"]["relations"] == std::vector<long long>{5});
  CHECK(j["all_pass"] == true);
  auto hz = find_hyperplane(a, {Q.zero(), Q.zero(), Q.one()});
  CHECK(j["hyperplanes"][hz]["lp"] == 2);
  CHECK(j["hyperplanes"][hz]["coker_rho"]["total"] == 2);
  CHECK(j["hyperplanes"][hz]["coker_pi"]["total"] == 1);
  CHECK(j["hyperplanes"][hz]["multiplicity"] == std::vector<int>{2, 2, 2});

  auto human = report_human(s, res);
  CHECK(human.find("NOT FREE") != std::string::npos);
  CHECK(human.find("t^2 - 6t + 10") != std::string::npos);
}
