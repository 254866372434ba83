#pragma once

#include <array>
#include <string>
#include <vector>

#include "arrlog/arrangement.hpp"
#include "arrlog/errors.hpp"
#include "arrlog/fields.hpp"

namespace arrlog {

// Expected values pinned for `verify --builtin`: a mutation of any one of
// them must flip the verification exit code. -1 marks "not pinned".
struct BuiltinExpectations {
  long long b1 = -1, b2 = -1;
  int free_verdict = -1;  // 1 free, 0 not free
  long long exp_a = -1, exp_b = -1;
  std::vector<long long> generators;  // empty = not pinned
  std::vector<long long> relations;
  bool relations_pinned = false;

  struct HyperplanePin {
    std::array<long, 3> form;
    long long lines = -1, lp = -1, coker_rho = -1, coker_pi = -1, d1 = -1, d2 = -1;
  };
  std::vector<HyperplanePin> hyperplane_pins;
};

struct BuiltinDef {
  std::string name;
  FieldDescriptor field;
  std::vector<std::array<long, 3>> forms;
  BuiltinExpectations expect;
  std::string note;
};

inline const std::vector<BuiltinDef>& builtin_registry() {
  static const std::vector<BuiltinDef> defs = [] {
    std::vector<BuiltinDef> v;

    {
      BuiltinDef d;
      d.name = "generic4";
      d.field = {FieldKind::Rationals, 0};
      d.forms = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
      d.note = "generic arrangement of four planes, xyz(x+y+z)";
      d.expect.b1 = 3;
      d.expect.b2 = 3;
      d.expect.free_verdict = 0;
      d.expect.hyperplane_pins = {{{1, 0, 0}, 3, 1, 0, 1, 1, 2}};
      v.push_back(std::move(d));
    }
    {
      BuiltinDef d;
      d.name = "ex433";
      d.field = {FieldKind::Rationals, 0};
      d.forms = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, -1}, {0, 1, -1}, {1, -1, 1}, {1, -1, -1}};
      d.note = "seven planes xyz(x-z)(y-z)(x-y+z)(x-y-z)";
      d.expect.b1 = 6;
      d.expect.b2 = 10;
      d.expect.free_verdict = 0;
      d.expect.generators = {1, 3, 4, 4};
      d.expect.relations = {5};
      d.expect.relations_pinned = true;
      d.expect.hyperplane_pins = {{{0, 0, 1}, 3, 2, 2, 1, 3, 3}};
      v.push_back(std::move(d));
    }
    {
      BuiltinDef d;
      d.name = "ex45";
      d.field = {FieldKind::Rationals, 0};
      d.forms = {{1, 0, 0},  {0, 0, 1}, {0, 1, -1}, {1, -1, 0},
                 {1, 1, 0},  {1, -2, 0}, {1, 2, 0},  {1, -3, 0}};
      d.note = "eight planes xz(y-z)(x^2-y^2)(x^2-4y^2)(x-3y), nearly free";
      d.expect.b1 = 7;
      d.expect.b2 = 11;
      d.expect.free_verdict = 0;
      d.expect.generators = {1, 2, 6, 6};
      d.expect.relations = {7};
      d.expect.relations_pinned = true;
      d.expect.hyperplane_pins = {{{1, 0, 0}, 3, 1, -1, 1, 2, 5}};
      v.push_back(std::move(d));
    }
    {
      BuiltinDef d;
      d.name = "boolean";
      d.field = {FieldKind::Rationals, 0};
      d.forms = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
      d.note = "coordinate planes xyz";
      d.expect.b1 = 2;
      d.expect.b2 = 1;
      d.expect.free_verdict = 1;
      d.expect.exp_a = 1;
      d.expect.exp_b = 1;
      d.expect.generators = {1, 1, 1};
      d.expect.relations_pinned = true;
      v.push_back(std::move(d));
    }
    {
      BuiltinDef d;
      d.name = "braidA3";
      d.field = {FieldKind::Rationals, 0};
      d.forms = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}};
      d.note = "essentialized braid arrangement, xyz(x-y)(x-z)(y-z)";
      d.expect.b1 = 5;
      d.expect.b2 = 6;
      d.expect.free_verdict = 1;
      d.expect.exp_a = 2;
      d.expect.exp_b = 3;
      d.expect.generators = {1, 2, 3};
      d.expect.relations_pinned = true;
      v.push_back(std::move(d));
    }
    {
      BuiltinDef d;
      d.name = "ss7";
      d.field = {FieldKind::Rationals, 0};
      d.forms = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, -1, 0}, {1, 0, 1}, {1, 0, -1}};
      d.note = "supersolvable seven planes xyz(x+y)(x-y)(x+z)(x-z)";
      d.expect.b1 = 6;
      d.expect.b2 = 9;
      d.expect.free_verdict = 1;
      d.expect.exp_a = 3;
      d.expect.exp_b = 3;
      d.expect.generators = {1, 3, 3};
      d.expect.relations_pinned = true;
      d.expect.hyperplane_pins = {{{1, 0, 0}, 2, 4, 4, 0, 3, 3}};
      v.push_back(std::move(d));
    }
    {
      // Cone over the edges and diagonals of the regular pentagon, realized
      // over F_11 where 4^2 = 16 = 5, so sqrt(5) = 4. Vertices of the
      // pentagon after rescaling y by 1/sin 72 land in Q(sqrt 5):
      //   P0 = (1, 0)
      //   P1 = ((s5-1)/4,  1)          = (9, 1)   mod 11
      //   P2 = (-(s5+1)/4, (s5-1)/2)   = (7, 7)
      //   P3 = (-(s5+1)/4, -(s5-1)/2)  = (7, 4)
      //   P4 = ((s5-1)/4, -1)          = (9, 10)
      // Edges P0P1..P4P0 and diagonals P0P2, P1P3, P2P4, P3P0, P4P1 are coned
      // through the origin, plus the plane at infinity z = 0.
      BuiltinDef d;
      d.name = "pentagon_f11";
      d.field = {FieldKind::Prime, 11};
      d.forms = {
          {0, 0, 1},    // infinity
          {1, 0, 2},    // diagonal P4P1 (x = 9)
          {1, 0, 4},    // edge P2P3 (x = 7)
          {1, 3, 5},    // diagonal P2P4
          {1, 3, 10},   // edge P0P1
          {1, 4, 9},    // edge P1P2
          {1, 4, 10},   // diagonal P3P0
          {1, 7, 9},    // edge P3P4
          {1, 7, 10},   // diagonal P0P2
          {1, 8, 5},    // diagonal P1P3
          {1, 8, 10},   // edge P4P0
      };
      d.note = "cone over the regular pentagon's edges and diagonals over F_11 (sqrt 5 = 4)";
      d.expect.b1 = 10;
      d.expect.b2 = 25;
      d.expect.free_verdict = 1;
      d.expect.exp_a = 5;
      d.expect.exp_b = 5;
      d.expect.generators = {1, 5, 5};
      d.expect.relations_pinned = true;
      d.expect.hyperplane_pins = {{{0, 0, 1}, 5, 1, 1, 0, 5, 5}};
      v.push_back(std::move(d));
    }
    return v;
  }();
  return defs;
}

inline const BuiltinDef& find_builtin(const std::string& name) {
  for (const auto& d : builtin_registry())
    if (d.name == name) return d;
  fail(Errc::UnknownName, "unknown builtin arrangement: " + name);
}

template <class F>
Arrangement<F> builtin_arrangement(const BuiltinDef& def, const F& field) {
  std::vector<std::array<elem_t<F>, 3>> raw;
  for (const auto& t : def.forms)
    raw.push_back({field.from_int(t[0]), field.from_int(t[1]), field.from_int(t[2])});
  return build_arrangement(field, raw, def.name);
}

}  // namespace arrlog
