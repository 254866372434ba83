#pragma once

#include <atomic>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arrlog/builtins.hpp"
#include "arrlog/corpus.hpp"
#include "arrlog/verdicts.hpp"

namespace arrlog {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Input documents
// ---------------------------------------------------------------------------

struct ParsedInput {
  FieldDescriptor field;
  std::string name;
  std::vector<std::array<mpq_class, 3>> coeffs;  // exact, field-independent
};

inline mpq_class parse_coefficient(const json& j, const std::string& where) {
  if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    try {
      mpq_class q(s);
      q.canonicalize();
      return q;
    } catch (const std::exception&) {
      fail(Errc::ParseError, where + ": cannot parse coefficient '" + s + "'");
    }
  }
  fail(Errc::ParseError, where + ": coefficient must be an integer or a \"p/q\" string");
}

inline ParsedInput parse_input(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, std::string("input is not valid JSON at byte ") +
                               std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail(Errc::ParseError, "input document must be a JSON object");

  ParsedInput in;
  if (!doc.contains("field") || !doc["field"].is_object())
    fail(Errc::ParseError, "missing \"field\" object");
  const auto& fj = doc["field"];
  std::string type = fj.value("type", "");
  if (type == "rational") {
    in.field = {FieldKind::Rationals, 0};
  } else if (type == "prime") {
    if (!fj.contains("p") || !fj["p"].is_number_integer())
      fail(Errc::ParseError, "prime field needs an integer \"p\"");
    long long p = fj["p"].get<long long>();
    if (p < 2 || p >= (1LL << 31) || !is_prime_u32(static_cast<std::uint64_t>(p)))
      fail(Errc::BadFieldElement, "field characteristic must be a prime below 2^31");
    in.field = {FieldKind::Prime, static_cast<std::uint32_t>(p)};
  } else {
    fail(Errc::ParseError, "field type must be \"rational\" or \"prime\"");
  }

  in.name = doc.value("name", "");
  if (!doc.contains("forms") || !doc["forms"].is_array())
    fail(Errc::ParseError, "missing \"forms\" array");
  std::size_t idx = 0;
  for (const auto& fj2 : doc["forms"]) {
    std::string where = "forms[" + std::to_string(idx) + "]";
    if (!fj2.is_array() || fj2.size() != 3)
      fail(Errc::ParseError, where + ": each form is a triple of coefficients");
    std::array<mpq_class, 3> t;
    for (int k = 0; k < 3; ++k) t[k] = parse_coefficient(fj2[k], where);
    in.coeffs.push_back(std::move(t));
    ++idx;
  }
  return in;
}

template <class F>
Arrangement<F> arrangement_from_input(const ParsedInput& in, const F& field) {
  std::vector<std::array<elem_t<F>, 3>> raw;
  raw.reserve(in.coeffs.size());
  for (const auto& t : in.coeffs)
    raw.push_back({field.from_fraction(t[0].get_num(), t[0].get_den()),
                   field.from_fraction(t[1].get_num(), t[1].get_den()),
                   field.from_fraction(t[2].get_num(), t[2].get_den())});
  return build_arrangement(field, raw, in.name);
}

// field-descriptor dispatch into a generic callable
template <class Fn>
decltype(auto) with_field(const FieldDescriptor& fd, Fn&& fn) {
  if (fd.kind == FieldKind::Rationals) return fn(RationalField{});
  return fn(PrimeField{fd.characteristic});
}

inline json field_json(const FieldDescriptor& fd) {
  if (fd.kind == FieldKind::Rationals) return json{{"type", "rational"}};
  return json{{"type", "prime"}, {"p", fd.characteristic}};
}

template <class F>
json arrangement_json(const Arrangement<F>& a) {
  json forms = json::array();
  for (const auto& f : a.forms) {
    json t = json::array();
    for (int k = 0; k < 3; ++k) t.push_back(a.field.to_string(f.coeffs[k]));
    forms.push_back(std::move(t));
  }
  json out{{"field", field_json(a.field.descriptor())}, {"forms", std::move(forms)}};
  if (!a.name.empty()) out["name"] = a.name;
  return out;
}

// canonical input document for round trips
template <class F>
std::string render_arrangement(const Arrangement<F>& a) {
  return arrangement_json(a).dump(1) + "\n";
}

// ---------------------------------------------------------------------------
// Polynomial and table formatting
// ---------------------------------------------------------------------------

inline std::string poly_string(const std::vector<long long>& desc_coeffs, const std::string& var) {
  // descending powers, leading entry first
  std::ostringstream os;
  int deg = static_cast<int>(desc_coeffs.size()) - 1;
  bool first = true;
  for (std::size_t i = 0; i < desc_coeffs.size(); ++i) {
    long long c = desc_coeffs[i];
    int p = deg - static_cast<int>(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long a = c < 0 ? -c : c;
    if (a != 1 || p == 0) os << a;
    if (p >= 1) {
      os << var;
      if (p >= 2) os << "^" << p;
    }
  }
  if (first) os << "0";
  return os.str();
}

inline std::string chi_string(const CharPoly& cp) {
  return poly_string({cp.chi[0], cp.chi[1], cp.chi[2], cp.chi[3]}, "t");
}
inline std::string chi0_string(const CharPoly& cp) {
  return poly_string({1, -cp.b1, cp.b2}, "t");
}

template <class F>
std::string form_string(const std::array<elem_t<F>, 3>& c, const F& field,
                        const std::array<const char*, 3>& vars = {"x", "y", "z"}) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 3; ++i) {
    if (field.is_zero(c[i])) continue;
    std::string cs = field.to_string(c[i]);
    if (first) {
      if (cs == "1") os << vars[i];
      else if (cs == "-1") os << "-" << vars[i];
      else os << cs << "*" << vars[i];
      first = false;
    } else {
      bool neg = !cs.empty() && cs[0] == '-';
      std::string abs = neg ? cs.substr(1) : cs;
      os << (neg ? " - " : " + ");
      if (abs == "1") os << vars[i];
      else os << abs << "*" << vars[i];
    }
  }
  if (first) os << "0";
  return os.str();
}

template <class F>
std::string form2_string(const std::array<elem_t<F>, 2>& c, const F& field) {
  std::array<elem_t<F>, 3> padded = {c[0], c[1], field.zero()};
  return form_string<F>(padded, field, {"u", "v", "?"});
}

// ---------------------------------------------------------------------------
// Report documents
// ---------------------------------------------------------------------------

inline const char* status_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "?";
}

inline json verdicts_json(const VerdictReport& v) {
  json out = json::object();
  for (const auto& c : v.checks)
    out[c.name] = json{{"status", status_string(c.status)}, {"detail", c.detail}};
  return out;
}

inline json coker_json(const CokernelReport& r) {
  json per = json::array();
  for (const auto& pd : r.per_degree) per.push_back(json::array({pd.first, pd.second}));
  return json{{"total", r.total},
              {"per_degree", std::move(per)},
              {"certificate_degree", r.certificate_degree},
              {"stabilized", r.stabilized}};
}

template <class F>
json report_json(Session<F>& s, const AnalysisResult<F>& res) {
  const F& f = s.field();
  json out;
  out["arrangement"] = arrangement_json(s.arr());
  out["charpoly"] = json{{"chi", {res.cp.chi[0], res.cp.chi[1], res.cp.chi[2], res.cp.chi[3]}},
                         {"b1", res.cp.b1},
                         {"b2", res.cp.b2},
                         {"chi_text", chi_string(res.cp)},
                         {"chi0_text", chi0_string(res.cp)}};

  json hyps = json::array();
  for (const auto& ha : res.per_h) {
    json lines = json::array();
    for (const auto& line : ha.lines) {
      json t = json::array();
      t.push_back(f.to_string(line[0]));
      t.push_back(f.to_string(line[1]));
      lines.push_back(std::move(t));
    }
    json form = json::array();
    for (int k = 0; k < 3; ++k) form.push_back(f.to_string(s.arr().forms[ha.h].coeffs[k]));
    hyps.push_back(json{{"index", ha.h},
                        {"form", std::move(form)},
                        {"restriction_size", ha.restriction_size},
                        {"lines", std::move(lines)},
                        {"multiplicity", ha.mult},
                        {"lp", ha.lp},
                        {"exponents", {ha.exp.d1, ha.exp.d2}},
                        {"yoshinaga", ha.yoshinaga},
                        {"coker_rho", coker_json(ha.rho)},
                        {"coker_pi", coker_json(ha.pi)},
                        {"coker_rho2", coker_json(ha.rho2)}});
  }
  out["hyperplanes"] = std::move(hyps);

  json fr{{"free", res.free_cert.free}, {"b2", res.free_cert.b2}};
  if (res.free_cert.free) fr["exponents"] = {1, res.free_cert.a, res.free_cert.b};
  json perh = json::array();
  for (const auto& c : res.free_cert.checked)
    perh.push_back(json{{"h", c.h}, {"d1", c.d1}, {"d2", c.d2}});
  fr["ziegler_exponents"] = std::move(perh);
  out["freeness"] = std::move(fr);

  if (res.pres) {
    json p{{"generators", res.pres->generator_degrees},
           {"relations", res.pres->relation_degrees},
           {"cap", res.pres->cap}};
    if (res.pres->level) p["level"] = *res.pres->level;
    out["presentation"] = std::move(p);
  }
  out["verdicts"] = verdicts_json(res.verdicts);
  out["all_pass"] = res.verdicts.all_pass();
  return out;
}

template <class F>
std::string report_human(Session<F>& s, const AnalysisResult<F>& res) {
  const F& f = s.field();
  std::ostringstream os;
  const auto& a = s.arr();
  os << "arrangement";
  if (!a.name.empty()) os << " \"" << a.name << "\"";
  os << ": " << a.size() << " planes over ";
  if (f.characteristic() == 0) os << "Q";
  else os << "F_" << f.characteristic();
  os << "\n";
  for (std::size_t h = 0; h < a.size(); ++h)
    os << "  H" << h << ": " << form_string<F>(a.forms[h].coeffs, f) << "\n";
  os << "chi(A;t)  = " << chi_string(res.cp) << "\n";
  os << "chi0(A;t) = " << chi0_string(res.cp) << "\n\n";

  os << "H   |A^H|  m^H               LP   exp(A^H,m^H)  coker(rho,pi,rho2)  yoshinaga\n";
  for (const auto& ha : res.per_h) {
    std::ostringstream mh;
    mh << "(";
    for (std::size_t i = 0; i < ha.mult.size(); ++i) mh << (i ? "," : "") << ha.mult[i];
    mh << ")";
    std::ostringstream ex;
    ex << "(" << ha.exp.d1 << "," << ha.exp.d2 << ")";
    std::ostringstream ck;
    ck << "(" << ha.rho.total << "," << ha.pi.total << "," << ha.rho2.total << ")";
    os << ha.h << "   " << ha.restriction_size << "      ";
    std::string ms = mh.str();
    os << ms << std::string(ms.size() < 18 ? 18 - ms.size() : 1, ' ');
    os << ha.lp << "    " << ex.str() << "         " << ck.str() << "             "
       << ha.yoshinaga << "\n";
  }
  os << "\nfreeness: ";
  if (res.free_cert.free)
    os << "FREE with exp(A) = (1," << res.free_cert.a << "," << res.free_cert.b << ")";
  else
    os << "NOT FREE (chi0(0) = " << res.free_cert.b2 << " vs d1*d2)";
  os << "\n";
  if (res.pres) {
    os << "presentation: generators {";
    for (std::size_t i = 0; i < res.pres->generator_degrees.size(); ++i)
      os << (i ? "," : "") << res.pres->generator_degrees[i];
    os << "}, relations {";
    for (std::size_t i = 0; i < res.pres->relation_degrees.size(); ++i)
      os << (i ? "," : "") << res.pres->relation_degrees[i];
    os << "}\n";
  }
  os << "\nverdicts:\n";
  for (const auto& c : res.verdicts.checks)
    os << "  [" << status_string(c.status) << "] " << c.name << ": " << c.detail << "\n";
  os << (res.verdicts.all_pass() ? "all checks passed\n" : "CHECKS FAILED\n");
  return os.str();
}

// ---------------------------------------------------------------------------
// Builtin pins: `verify --builtin` compares computed values against the
// registry's expected data, so any mutation of a pinned value fails loudly.
// ---------------------------------------------------------------------------

template <class F>
std::vector<CheckResult> check_builtin_pins(Session<F>& s, const AnalysisResult<F>& res,
                                            const BuiltinDef& def) {
  std::vector<CheckResult> out;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    out.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
  };
  const auto& e = def.expect;
  if (e.b1 >= 0)
    add("pin_charpoly", res.cp.b1 == e.b1 && res.cp.b2 == e.b2,
        "chi0 = " + chi0_string(res.cp) + " vs pinned t^2-" + std::to_string(e.b1) + "t+" +
            std::to_string(e.b2));
  if (e.free_verdict >= 0) {
    bool ok = res.free_cert.free == (e.free_verdict == 1);
    if (ok && res.free_cert.free && e.exp_a >= 0)
      ok = res.free_cert.a == e.exp_a && res.free_cert.b == e.exp_b;
    add("pin_freeness", ok,
        std::string("computed ") + (res.free_cert.free ? "free" : "not free"));
  }
  if (!e.generators.empty()) {
    bool ok = res.pres && res.pres->generator_degrees == e.generators &&
              (!e.relations_pinned || res.pres->relation_degrees == e.relations);
    add("pin_presentation", ok, "generator/relation degrees vs pinned");
  }
  for (const auto& pin : e.hyperplane_pins) {
    const F& f = s.field();
    std::array<elem_t<F>, 3> raw = {f.from_int(pin.form[0]), f.from_int(pin.form[1]),
                                    f.from_int(pin.form[2])};
    std::size_t h = find_hyperplane(s.arr(), raw);
    if (h == static_cast<std::size_t>(-1)) {
      add("pin_hyperplane", false, "pinned hyperplane not present");
      continue;
    }
    const auto& ha = res.per_h[h];
    bool ok = true;
    std::ostringstream os;
    auto cmp = [&](const char* what, long long got, long long want) {
      if (want >= 0 && got != want) {
        ok = false;
        os << what << " " << got << " != " << want << "; ";
      }
    };
    cmp("|A^H|", ha.restriction_size, pin.lines);
    cmp("LP", ha.lp, pin.lp);
    cmp("coker rho", ha.rho.total, pin.coker_rho);
    cmp("coker pi", ha.pi.total, pin.coker_pi);
    cmp("d1", ha.exp.d1, pin.d1);
    cmp("d2", ha.exp.d2, pin.d2);
    add("pin_h" + std::to_string(h), ok, ok ? "pinned values match" : os.str());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpus runner: verifies every arrangement of a seeded corpus, in parallel,
// with the report assembled in index order.
// ---------------------------------------------------------------------------

struct CorpusResult {
  json report;
  bool pass = false;
  bool internal_error = false;  // e.g. StabilizationNotReached inside a worker
  bool input_error = false;     // e.g. GenerationExhausted for the given spec
  std::uint64_t failed = 0;
};

template <class F>
CorpusResult run_corpus(const F& field, const CorpusSpec& spec, unsigned jobs = 0) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, 32);

  struct Entry {
    json j;
    bool pass = false;
    bool internal = false;
    bool input = false;
  };
  std::vector<Entry> entries(spec.count);
  std::atomic<std::uint64_t> cursor{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&]() {
      while (true) {
        std::uint64_t i = cursor.fetch_add(1);
        if (i >= spec.count) break;
        Entry e;
        try {
          auto a = random_arrangement(field, spec, i);
          Session<F> s(std::move(a));
          auto res = analyze(s, std::nullopt, /*with_presentation=*/false);
          json failures = json::array();
          for (const auto& c : res.verdicts.checks)
            if (c.status == CheckStatus::Fail)
              failures.push_back(json{{"name", c.name}, {"detail", c.detail}});
          e.pass = res.verdicts.all_pass();
          e.j = json{{"index", i},
                     {"planes", s.size()},
                     {"forms", arrangement_json(s.arr())["forms"]},
                     {"all_pass", e.pass}};
          if (!failures.empty()) e.j["failures"] = std::move(failures);
        } catch (const Error& err) {
          e.pass = false;
          e.internal = err.internal();
          e.input = !err.internal();
          e.j = json{{"index", i},
                     {"all_pass", false},
                     {"error", json{{"kind", errc_name(err.code())}, {"message", err.what()}}}};
        }
        entries[i] = std::move(e);
      }
    });
  }
  for (auto& th : pool) th.join();

  CorpusResult out;
  json results = json::array();
  for (auto& e : entries) {
    if (!e.pass) ++out.failed;
    out.internal_error = out.internal_error || e.internal;
    out.input_error = out.input_error || e.input;
    results.push_back(std::move(e.j));
  }
  out.pass = out.failed == 0;
  out.report = json{{"corpus", json{{"seed", std::to_string(spec.seed)},
                                    {"count", spec.count},
                                    {"max_planes", spec.max_planes},
                                    {"bound", spec.bound},
                                    {"field", field_json(spec.field)},
                                    {"prng", "splitmix64"}}},
                    {"results", std::move(results)},
                    {"failed_count", out.failed},
                    {"pass", out.pass}};
  return out;
}

}  // namespace arrlog
