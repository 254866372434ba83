// arrlog: exact analysis of logarithmic derivation modules of plane
// arrangements in K^3 and of their Euler/Ziegler restriction maps.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arrlog/arrlog.hpp"

namespace {

using namespace arrlog;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

struct SourceOptions {
  std::string file;
  std::string builtin;
};

ParsedInput load_input(const SourceOptions& src) {
  if (!src.builtin.empty()) {
    const auto& def = find_builtin(src.builtin);
    ParsedInput in;
    in.field = def.field;
    in.name = def.name;
    for (const auto& t : def.forms)
      in.coeffs.push_back({mpq_class(t[0]), mpq_class(t[1]), mpq_class(t[2])});
    return in;
  }
  std::ifstream is(src.file);
  if (!is) fail(Errc::ParseError, "cannot open input file: " + src.file);
  std::stringstream buf;
  buf << is.rdbuf();
  return parse_input(buf.str());
}

struct CorpusArg {
  CorpusSpec spec;
};

CorpusSpec parse_corpus_arg(const std::string& text) {
  CorpusSpec spec;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() < 4 || parts.size() > 5)
    fail(Errc::ParseError, "--corpus expects SEED,COUNT,MAX_PLANES,BOUND[,FIELD]");
  try {
    spec.seed = std::stoull(parts[0]);
    spec.count = std::stoull(parts[1]);
    spec.max_planes = std::stoi(parts[2]);
    spec.bound = std::stoi(parts[3]);
  } catch (const std::exception&) {
    fail(Errc::ParseError, "--corpus numeric fields could not be parsed");
  }
  spec.field = {FieldKind::Rationals, 0};
  if (parts.size() == 5) {
    const std::string& fs = parts[4];
    if (fs == "q" || fs == "rational") {
      spec.field = {FieldKind::Rationals, 0};
    } else if (!fs.empty() && fs[0] == 'p') {
      long long p = 0;
      try {
        p = std::stoll(fs.substr(1));
      } catch (const std::exception&) {
        fail(Errc::ParseError, "bad corpus field spec: " + fs);
      }
      if (p < 2 || p >= (1LL << 31) || !is_prime_u32(static_cast<std::uint64_t>(p)))
        fail(Errc::BadFieldElement, "corpus field characteristic must be a prime below 2^31");
      spec.field = {FieldKind::Prime, static_cast<std::uint32_t>(p)};
    } else {
      fail(Errc::ParseError, "corpus field spec must be 'q' or 'p<prime>'");
    }
  }
  return spec;
}

int cmd_analyze(const SourceOptions& src, std::optional<long long> cap, std::optional<long long> hyp,
                bool as_json) {
  auto in = load_input(src);
  return with_field(in.field, [&](auto field) {
    using F = decltype(field);
    Session<F> s(arrangement_from_input(in, field));
    auto res = analyze(s, cap, /*with_presentation=*/true);
    if (hyp && (*hyp < 0 || static_cast<std::size_t>(*hyp) >= s.size()))
      fail(Errc::ParseError, "--hyperplane index out of range");
    if (as_json) {
      auto j = report_json(s, res);
      if (hyp) {
        json filtered = json::array();
        filtered.push_back(j["hyperplanes"][static_cast<std::size_t>(*hyp)]);
        j["hyperplanes"] = std::move(filtered);
      }
      std::cout << j.dump(1) << "\n";
    } else {
      if (hyp) {
        auto copy = res;
        copy.per_h = {res.per_h[static_cast<std::size_t>(*hyp)]};
        std::cout << report_human(s, copy);
      } else {
        std::cout << report_human(s, res);
      }
    }
    return res.verdicts.all_pass() ? kExitOk : kExitVerifyFailed;
  });
}

int cmd_charpoly(const SourceOptions& src) {
  auto in = load_input(src);
  return with_field(in.field, [&](auto field) {
    auto a = arrangement_from_input(in, field);
    auto cp = char_poly(a);
    std::cout << "chi(A;t) = " << chi_string(cp) << "\n";
    std::cout << "chi0(A;t) = " << chi0_string(cp) << "\n";
    return kExitOk;
  });
}

int cmd_coker(const SourceOptions& src, const std::string& map, long long hyp,
              std::optional<long long> cap, bool as_json) {
  auto in = load_input(src);
  MapKind kind;
  if (map == "rho") kind = MapKind::Rho;
  else if (map == "pi") kind = MapKind::Pi;
  else if (map == "rho2") kind = MapKind::Rho2;
  else fail(Errc::ParseError, "--map must be rho, pi or rho2");

  return with_field(in.field, [&](auto field) {
    using F = decltype(field);
    Session<F> s(arrangement_from_input(in, field));
    if (hyp < 0 || static_cast<std::size_t>(hyp) >= s.size())
      fail(Errc::ParseError, "--hyperplane index out of range");
    auto rep = coker_report(s, kind, static_cast<std::size_t>(hyp), cap);
    if (as_json) {
      json j = coker_json(rep);
      j["map"] = map_kind_name(kind);
      j["hyperplane"] = hyp;
      j["lp"] = rep.lp;
      std::cout << j.dump(1) << "\n";
    } else {
      std::cout << "coker " << map_kind_name(kind) << " at H" << hyp << ": total " << rep.total
                << ", LP " << rep.lp << "\n";
      std::cout << "per degree:";
      for (const auto& pd : rep.per_degree) std::cout << " " << pd.first << ":" << pd.second;
      std::cout << "\nstabilized at degree " << rep.certificate_degree << "\n";
    }
    return kExitOk;
  });
}

int cmd_freeness(const SourceOptions& src, bool saito) {
  auto in = load_input(src);
  return with_field(in.field, [&](auto field) {
    using F = decltype(field);
    Session<F> s(arrangement_from_input(in, field));
    auto cert = freeness(s, saito);
    if (cert.free) {
      std::cout << "FREE with exp(A) = (1," << cert.a << "," << cert.b << ")\n";
      if (saito) {
        if (cert.saito_basis)
          std::cout << "Saito basis found in degrees (1," << cert.a << "," << cert.b << ")\n";
        else
          std::cout << "no Saito basis found among low-degree basis pairs\n";
      }
    } else {
      std::cout << "NOT FREE: chi0(A;0) = " << cert.b2 << " but Ziegler exponents give";
      for (const auto& c : cert.checked)
        std::cout << " H" << c.h << ":(" << c.d1 << "," << c.d2 << ")";
      std::cout << "\n";
    }
    return kExitOk;
  });
}

int cmd_presentation(const SourceOptions& src, std::optional<long long> cap) {
  auto in = load_input(src);
  return with_field(in.field, [&](auto field) {
    using F = decltype(field);
    Session<F> s(arrangement_from_input(in, field));
    auto rep = presentation(s, cap);
    std::cout << "generators {";
    for (std::size_t i = 0; i < rep.generator_degrees.size(); ++i)
      std::cout << (i ? "," : "") << rep.generator_degrees[i];
    std::cout << "}, relations {";
    for (std::size_t i = 0; i < rep.relation_degrees.size(); ++i)
      std::cout << (i ? "," : "") << rep.relation_degrees[i];
    std::cout << "}\n";
    if (rep.level) std::cout << "level " << *rep.level << "\n";
    return kExitOk;
  });
}

int cmd_verify(const SourceOptions& src, const std::string& corpus_arg, std::optional<long long> cap,
               bool as_json, unsigned jobs) {
  if (!corpus_arg.empty()) {
    auto spec = parse_corpus_arg(corpus_arg);
    return with_field(spec.field, [&](auto field) {
      auto result = run_corpus(field, spec, jobs);
      if (as_json) {
        std::cout << result.report.dump(1) << "\n";
      } else {
        std::cout << "corpus seed " << spec.seed << ": " << spec.count << " arrangements over ";
        if (spec.field.kind == FieldKind::Rationals) std::cout << "Q";
        else std::cout << "F_" << spec.field.characteristic;
        std::cout << ", " << result.failed << " failures\n";
        for (const auto& r : result.report["results"])
          if (r["all_pass"] == false) std::cout << "  FAILED index " << r["index"] << "\n";
        std::cout << (result.pass ? "all checks passed\n" : "CHECKS FAILED\n");
      }
      if (result.internal_error) return kExitInternalError;
      if (result.input_error) return kExitInputError;
      return result.pass ? kExitOk : kExitVerifyFailed;
    });
  }

  auto in = load_input(src);
  return with_field(in.field, [&](auto field) {
    using F = decltype(field);
    Session<F> s(arrangement_from_input(in, field));
    bool is_builtin = !src.builtin.empty();
    auto res = analyze(s, cap, /*with_presentation=*/is_builtin);
    bool pass = res.verdicts.all_pass();

    std::vector<CheckResult> pins;
    if (is_builtin) {
      pins = check_builtin_pins(s, res, find_builtin(src.builtin));
      for (const auto& p : pins) pass = pass && p.status != CheckStatus::Fail;
    }
    if (as_json) {
      auto j = report_json(s, res);
      if (!pins.empty()) {
        json pj = json::object();
        for (const auto& p : pins)
          pj[p.name] = json{{"status", status_string(p.status)}, {"detail", p.detail}};
        j["pins"] = std::move(pj);
      }
      j["all_pass"] = pass;
      std::cout << j.dump(1) << "\n";
    } else {
      std::cout << report_human(s, res);
      for (const auto& p : pins)
        std::cout << "  [" << status_string(p.status) << "] " << p.name << ": " << p.detail << "\n";
      if (!pass) std::cout << "VERIFICATION FAILED\n";
    }
    return pass ? kExitOk : kExitVerifyFailed;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact restriction-map analysis of central plane arrangements in K^3"};
  app.require_subcommand(1);

  SourceOptions src;
  std::optional<long long> cap;
  std::optional<long long> hyp;
  bool as_json = false;
  bool saito = false;
  std::string map = "rho";
  long long hyp_required = -1;
  std::string corpus_arg;
  unsigned jobs = 0;

  auto add_source = [&](CLI::App* cmd, bool file_required) {
    auto* f = cmd->add_option("file", src.file, "arrangement input file (JSON)");
    cmd->add_option("--builtin", src.builtin, "builtin arrangement name");
    if (file_required) f->check(CLI::ExistingFile);
  };

  auto* a_analyze = app.add_subcommand("analyze", "full report for one arrangement");
  add_source(a_analyze, false);
  a_analyze->add_option("--hyperplane", hyp, "restrict the per-hyperplane section to one index");
  a_analyze->add_option("--cap", cap, "stabilization/presentation degree cap");
  a_analyze->add_flag("--json", as_json, "canonical JSON report");

  auto* a_charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
  add_source(a_charpoly, false);

  auto* a_coker = app.add_subcommand("coker", "cokernel of one restriction map");
  add_source(a_coker, false);
  a_coker->add_option("--map", map, "rho | pi | rho2")->required();
  a_coker->add_option("--hyperplane", hyp_required, "hyperplane index")->required();
  a_coker->add_option("--cap", cap, "stabilization degree cap");
  a_coker->add_flag("--json", as_json, "canonical JSON report");

  auto* a_free = app.add_subcommand("freeness", "freeness certificate");
  add_source(a_free, false);
  a_free->add_flag("--saito", saito, "search for an explicit Saito basis");

  auto* a_pres = app.add_subcommand("presentation", "minimal generators and first syzygies");
  add_source(a_pres, false);
  a_pres->add_option("--cap", cap, "degree cap");

  auto* a_verify = app.add_subcommand("verify", "verify all theorems on an input");
  add_source(a_verify, false);
  a_verify->add_option("--corpus", corpus_arg, "SEED,COUNT,MAX_PLANES,BOUND[,FIELD]");
  a_verify->add_option("--cap", cap, "stabilization degree cap");
  a_verify->add_flag("--json", as_json, "canonical JSON report");
  a_verify->add_option("--jobs", jobs, "worker threads for corpus verification");

  auto* a_list = app.add_subcommand("list-builtins", "list builtin arrangements");

  CLI11_PARSE(app, argc, argv);

  try {
    if (a_analyze->parsed()) {
      if (src.file.empty() && src.builtin.empty())
        fail(Errc::ParseError, "need an input file or --builtin");
      return cmd_analyze(src, cap, hyp, as_json);
    }
    if (a_charpoly->parsed()) {
      if (src.file.empty() && src.builtin.empty())
        fail(Errc::ParseError, "need an input file or --builtin");
      return cmd_charpoly(src);
    }
    if (a_coker->parsed()) {
      if (src.file.empty() && src.builtin.empty())
        fail(Errc::ParseError, "need an input file or --builtin");
      return cmd_coker(src, map, hyp_required, cap, as_json);
    }
    if (a_free->parsed()) {
      if (src.file.empty() && src.builtin.empty())
        fail(Errc::ParseError, "need an input file or --builtin");
      return cmd_freeness(src, saito);
    }
    if (a_pres->parsed()) {
      if (src.file.empty() && src.builtin.empty())
        fail(Errc::ParseError, "need an input file or --builtin");
      return cmd_presentation(src, cap);
    }
    if (a_verify->parsed()) {
      if (corpus_arg.empty() && src.file.empty() && src.builtin.empty())
        fail(Errc::ParseError, "need an input file, --builtin or --corpus");
      return cmd_verify(src, corpus_arg, cap, as_json, jobs);
    }
    if (a_list->parsed()) {
      for (const auto& d : builtin_registry()) {
        std::cout << d.name << "  (" << d.forms.size() << " planes, ";
        if (d.field.kind == FieldKind::Rationals) std::cout << "Q";
        else std::cout << "F_" << d.field.characteristic;
        std::cout << "): " << d.note << "\n";
      }
      return kExitOk;
    }
  } catch (const arrlog::Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return e.internal() ? kExitInternalError : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInputError;
}
