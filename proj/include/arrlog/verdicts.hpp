#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arrlog/cokernel.hpp"
#include "arrlog/presentation.hpp"
#include "arrlog/session.hpp"

namespace arrlog {

enum class CheckStatus { Pass, Fail, NotApplicable };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // the numbers compared; on failure both sides of the violated relation
};

struct VerdictReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

// coefficients of x^n (1-x^(a-n))(1-x^(b-n))/(1-x)^2 as degree -> dimension;
// identically zero when n is one of the exponents
inline std::vector<long long> free_coker_series(long long a, long long b, long long n) {
  std::vector<long long> coeff;
  if (n == a || n == b) return coeff;
  long long la = a - n, lb = b - n;  // n < min(a,b) by the root condition
  coeff.assign(static_cast<std::size_t>(n + la + lb - 1), 0);
  for (long long i = 0; i < la; ++i)
    for (long long j = 0; j < lb; ++j) coeff[static_cast<std::size_t>(n + i + j)] += 1;
  return coeff;
}

template <class F>
struct HyperplaneAnalysis {
  std::size_t h = 0;
  std::vector<std::array<elem_t<F>, 2>> lines;
  std::vector<int> mult;
  long long restriction_size = 0;
  long long lp = 0;
  ExponentPair exp;
  CokernelReport rho, pi, rho2;
  long long yoshinaga = 0;  // b2 - d1 d2
};

template <class F>
struct AnalysisResult {
  CharPoly cp;
  FreenessCertificate<F> free_cert;
  std::vector<HyperplaneAnalysis<F>> per_h;
  std::optional<PresentationReport> pres;
  VerdictReport verdicts;
};

namespace detail {

inline std::string fmt_pair(long long a, long long b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace detail

// Runs every theorem check on one arrangement and aggregates the full
// per-hyperplane data used by reports. |A| >= 2 required.
template <class F>
AnalysisResult<F> analyze(Session<F>& s, std::optional<long long> cap = std::nullopt,
                          bool with_presentation = true, bool saito_search = false) {
  if (s.size() < 2) fail(Errc::EmptyRestriction, "analysis needs |A| >= 2");
  AnalysisResult<F> res;
  res.cp = s.charpoly();
  res.free_cert = freeness(s, saito_search);
  const long long planes = static_cast<long long>(s.size());
  const long long b1 = res.cp.b1, b2 = res.cp.b2;

  for (std::size_t h = 0; h < s.size(); ++h) {
    HyperplaneAnalysis<F> ha;
    ha.h = h;
    ha.lines = s.restriction(h).lines;
    ha.mult = s.multiplicity(h);
    ha.restriction_size = static_cast<long long>(ha.lines.size());
    ha.lp = s.lp(h);
    ha.exp = s.exponents(h);
    ha.rho = coker_report(s, MapKind::Rho, h, cap);
    ha.pi = coker_report(s, MapKind::Pi, h, cap);
    ha.rho2 = coker_report(s, MapKind::Rho2, h, cap);
    ha.yoshinaga = b2 - ha.exp.d1 * ha.exp.d2;
    res.per_h.push_back(std::move(ha));
  }

  auto& checks = res.verdicts.checks;
  auto add = [&](const std::string& name, CheckStatus st, const std::string& detail) {
    checks.push_back({name, st, detail});
  };
  auto add_bool = [&](const std::string& name, bool ok, const std::string& detail) {
    add(name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail);
  };

  // Thm 1.4(1): dim coker rho <= LP for every H
  {
    bool ok = true;
    std::ostringstream os;
    for (const auto& ha : res.per_h) {
      if (ha.rho.total > ha.lp) {
        ok = false;
        os << "H" << ha.h << ": coker rho " << ha.rho.total << " > LP " << ha.lp << "; ";
      }
    }
    add_bool("thm14_bound", ok, ok ? "coker rho <= LP for all H" : os.str());
  }

  // Thm 1.4(2): free case equality and Hilbert series
  if (!res.free_cert.free) {
    add("thm14_equality_if_free", CheckStatus::NotApplicable, "arrangement is not free");
  } else {
    bool ok = true;
    std::ostringstream os;
    for (const auto& ha : res.per_h) {
      auto series =
          free_coker_series(res.free_cert.a, res.free_cert.b, ha.restriction_size - 1);
      long long expect_total = 0;
      for (auto c : series) expect_total += c;
      bool here = ha.rho.total == ha.lp && expect_total == ha.lp;
      for (std::size_t i = 0; i < ha.rho.per_degree.size() && here; ++i) {
        long long want = i < series.size() ? series[i] : 0;
        here = ha.rho.per_degree[i].second == want;
      }
      // degrees past the certificate are zero, so the series must be exhausted
      if (here && series.size() > ha.rho.per_degree.size()) here = false;
      if (!here) {
        ok = false;
        os << "H" << ha.h << ": profile mismatch vs series; ";
      }
    }
    add_bool("thm14_equality_if_free", ok,
             ok ? "coker rho matches the free-case Hilbert series for all H" : os.str());
  }

  // Thm 2.2: Terao factorization
  if (!res.free_cert.free) {
    add("thm22_factorization", CheckStatus::NotApplicable, "arrangement is not free");
  } else {
    long long a = res.free_cert.a, b = res.free_cert.b;
    bool ok = b1 == a + b && b2 == a * b;
    add_bool("thm22_factorization", ok,
             "chi0 = (t-" + std::to_string(a) + ")(t-" + std::to_string(b) + ") vs t^2-" +
                 std::to_string(b1) + "t+" + std::to_string(b2));
  }

  // Thm 2.3: |A^H|-1 never lies strictly between the roots of chi0
  // (equivalently LP >= 0), and hitting a root forces freeness.
  {
    bool ok = true;
    std::ostringstream os;
    long long disc = b1 * b1 - 4 * b2;
    for (const auto& ha : res.per_h) {
      long long n = ha.restriction_size - 1;
      if (ha.lp < 0) {
        ok = false;
        os << "H" << ha.h << ": LP " << ha.lp << " < 0; ";
      }
      if (disc >= 0) {
        bool le_alpha = (b1 - 2 * n) >= 0 && (b1 - 2 * n) * (b1 - 2 * n) >= disc;
        bool ge_beta = (2 * n - b1) >= 0 && (2 * n - b1) * (2 * n - b1) >= disc;
        if (!le_alpha && !ge_beta) {
          ok = false;
          os << "H" << ha.h << ": |A^H|-1 = " << n << " lies strictly between the roots; ";
        }
      }
      if (res.cp.chi0_eval(n) == 0 && !res.free_cert.free) {
        ok = false;
        os << "H" << ha.h << ": |A^H|-1 = " << n << " is a root but A is not free; ";
      }
    }
    add_bool("thm23_roots", ok,
             ok ? "|A^H|-1 <= alpha or >= beta; LP >= 0; root hit only when free" : os.str());
  }

  // Thm 2.4: Ziegler surjectivity in the free case
  if (!res.free_cert.free) {
    add("thm24_surjective_if_free", CheckStatus::NotApplicable, "arrangement is not free");
  } else {
    bool ok = true;
    std::ostringstream os;
    for (const auto& ha : res.per_h) {
      bool here = ha.pi.total == 0 && ha.exp.d1 == res.free_cert.a && ha.exp.d2 == res.free_cert.b;
      if (!here) {
        ok = false;
        os << "H" << ha.h << ": coker pi " << ha.pi.total << ", exp "
           << detail::fmt_pair(ha.exp.d1, ha.exp.d2) << "; ";
      }
    }
    add_bool("thm24_surjective_if_free", ok,
             ok ? "pi surjective with exp(A^H,m^H) = (a,b) for all H" : os.str());
  }

  // Thm 2.5: direct cokernel equals b2 - d1 d2; zero iff free
  {
    bool ok = true;
    std::ostringstream os;
    for (const auto& ha : res.per_h) {
      bool here = ha.pi.total == ha.yoshinaga && (ha.yoshinaga == 0) == res.free_cert.free;
      if (!here) {
        ok = false;
        os << "H" << ha.h << ": direct " << ha.pi.total << " vs formula " << ha.yoshinaga << "; ";
      }
    }
    add_bool("thm25_yoshinaga", ok,
             ok ? "dim coker pi = chi0(0) - d1 d2 for all H, zero iff free" : os.str());
  }

  // Thm 2.6: free deletion forces rho surjective
  {
    bool any = false, ok = true;
    std::ostringstream os;
    for (const auto& ha : res.per_h) {
      if (!deletion_is_free(s.arr(), ha.h)) continue;
      any = true;
      if (ha.rho.total != 0) {
        ok = false;
        os << "H" << ha.h << ": deletion free but coker rho = " << ha.rho.total << "; ";
      }
    }
    if (!any)
      add("thm26_fst", CheckStatus::NotApplicable, "no hyperplane has a free deletion");
    else
      add_bool("thm26_fst", ok, ok ? "rho surjective whenever the deletion is free" : os.str());
  }

  // Thm 3.5: second Euler restriction bound; totals agree with coker rho
  {
    bool ok = true;
    std::ostringstream os;
    for (const auto& ha : res.per_h) {
      bool here = ha.rho2.total <= ha.lp && ha.rho2.total == ha.rho.total;
      if (res.free_cert.free) here = here && ha.rho2.total == ha.lp;
      if (!here) {
        ok = false;
        os << "H" << ha.h << ": coker rho2 " << ha.rho2.total << ", coker rho " << ha.rho.total
           << ", LP " << ha.lp << "; ";
      }
    }
    add_bool("thm35_d2", ok,
             ok ? "coker rho2 <= LP and total equals coker rho (= LP when free)" : os.str());
  }

  // Thm 4.1: chi0(|A^H|-1) = chi0(|A|-|A^H|) >= dim coker pi >= 0
  {
    bool ok = true;
    std::ostringstream os;
    for (const auto& ha : res.per_h) {
      long long mirror = res.cp.chi0_eval(planes - ha.restriction_size);
      bool here = ha.lp == mirror && ha.lp >= ha.pi.total && ha.pi.total == ha.yoshinaga &&
                  ha.pi.total >= 0;
      if (!here) {
        ok = false;
        os << "H" << ha.h << ": LP " << ha.lp << ", chi0(|A|-|A^H|) " << mirror << ", coker pi "
           << ha.pi.total << "; ";
      }
    }
    add_bool("thm41_chain", ok, ok ? "LP = chi0(|A|-|A^H|) >= coker pi = b2 - d1 d2 >= 0" : os.str());
  }

  // Prop 4.2: dim coker pi = chi0(d1) = chi0(d2)
  {
    bool ok = true;
    std::ostringstream os;
    for (const auto& ha : res.per_h) {
      long long c1 = res.cp.chi0_eval(ha.exp.d1), c2 = res.cp.chi0_eval(ha.exp.d2);
      if (ha.pi.total != c1 || ha.pi.total != c2) {
        ok = false;
        os << "H" << ha.h << ": coker pi " << ha.pi.total << " vs chi0(d1) " << c1 << ", chi0(d2) "
           << c2 << "; ";
      }
    }
    add_bool("prop42_values", ok, ok ? "coker pi = chi0(d1) = chi0(d2) for all H" : os.str());
  }

  // Cor 4.4: LP = 1 for some H forces free or nearly free
  {
    bool applicable = false;
    for (const auto& ha : res.per_h) applicable = applicable || ha.lp == 1;
    if (!applicable) {
      add("cor44_shape", CheckStatus::NotApplicable, "no hyperplane has LP = 1");
    } else {
      if (!res.pres) res.pres = presentation(s, cap);
      const auto& g = res.pres->generator_degrees;
      const auto& r = res.pres->relation_degrees;
      bool ok;
      std::string shape;
      if (res.free_cert.free) {
        ok = res.pres->free_shape() &&
             g == std::vector<long long>{1, res.free_cert.a, res.free_cert.b};
        shape = "free";
      } else {
        // nearly free: generators (1, a, b, b), single relation at b+1
        ok = g.size() == 4 && r.size() == 1 && g[0] == 1 && g[2] == g[3] && r[0] == g[3] + 1 &&
             g[1] <= g[2];
        shape = "nearly free";
      }
      std::ostringstream os;
      os << shape << ": generators {";
      for (auto x : g) os << x << " ";
      os << "}, relations {";
      for (auto x : r) os << x << " ";
      os << "}";
      add_bool("cor44_shape", ok, os.str());
    }
  }

  // Euler / Ziegler exact sequences, per degree up to each certificate;
  // deletion sessions are shared with the Thm 2.6 check above
  {
    bool euler_ok = true, ziegler_ok = true;
    std::ostringstream eos, zos;
    for (const auto& ha : res.per_h) {
      Session<F> del(delete_hyperplane(s.arr(), ha.h));
      for (std::size_t i = 0; i < ha.rho.per_degree.size(); ++i) {
        int d = ha.rho.per_degree[i].first;
        long long ker = static_cast<long long>(s.d_basis(d).dim()) - ha.rho.image_ranks[i];
        long long expect = d >= 1 ? static_cast<long long>(del.d_basis(d - 1).dim()) : 0;
        if (ker != expect) {
          euler_ok = false;
          eos << "H" << ha.h << " deg " << d << ": ker " << ker << " vs " << expect << "; ";
        }
      }
      for (std::size_t i = 0; i < ha.pi.per_degree.size(); ++i) {
        int d = ha.pi.per_degree[i].first;
        long long ker = static_cast<long long>(s.dh_basis(ha.h, d).dim()) - ha.pi.image_ranks[i];
        long long expect = d >= 1 ? static_cast<long long>(s.dh_basis(ha.h, d - 1).dim()) : 0;
        if (ker != expect) {
          ziegler_ok = false;
          zos << "H" << ha.h << " deg " << d << ": ker " << ker << " vs " << expect << "; ";
        }
      }
    }
    add_bool("euler_kernel_identity", euler_ok,
             euler_ok ? "dim ker rho_d = dim D(A\\H)_(d-1) at every computed degree" : eos.str());
    add_bool("ziegler_kernel_identity", ziegler_ok,
             ziegler_ok ? "dim ker pi_d = dim D_H(A)_(d-1) at every computed degree" : zos.str());
  }

  // exp(A^H) = (1, |A^H|-1), checked against the restricted module dimensions
  {
    bool ok = true;
    std::ostringstream os;
    for (const auto& ha : res.per_h) {
      long long n = ha.restriction_size - 1;
      for (long long d = 0; d <= n + 2; ++d) {
        long long expect = (d - 1 >= 0 ? d : 0) + (d - n >= 0 ? d - n + 1 : 0);
        long long got = static_cast<long long>(s.target_rho(ha.h, static_cast<int>(d)).dim());
        if (got != expect) {
          ok = false;
          os << "H" << ha.h << " deg " << d << ": dim " << got << " vs " << expect << "; ";
        }
      }
    }
    add_bool("restriction_exponents", ok, ok ? "exp(A^H) = (1, |A^H|-1) for all H" : os.str());
  }

  // Saito degree sum for the Ziegler restriction
  {
    bool ok = true;
    std::ostringstream os;
    for (const auto& ha : res.per_h)
      if (ha.exp.d1 + ha.exp.d2 != planes - 1) {
        ok = false;
        os << "H" << ha.h << ": " << detail::fmt_pair(ha.exp.d1, ha.exp.d2) << "; ";
      }
    add_bool("exponent_sum", ok, ok ? "d1 + d2 = |A| - 1 for all H" : os.str());
  }

  // multiplicity increment lemma on the derived 2-multiarrangements
  {
    bool ok = true;
    std::ostringstream os;
    for (const auto& ha : res.per_h) {
      auto base = s.ziegler(ha.h);
      for (std::size_t x = 0; x < base.size() && ok; ++x) {
        auto bumped = base;
        bumped.mult[x] += 1;
        auto e = multi_exponents(bumped);
        bool here = (e.d1 == ha.exp.d1 + 1 && e.d2 == ha.exp.d2) ||
                    (e.d1 == ha.exp.d1 && e.d2 == ha.exp.d2 + 1);
        if (!here) {
          ok = false;
          os << "H" << ha.h << " line " << x << ": " << detail::fmt_pair(ha.exp.d1, ha.exp.d2)
             << " -> " << detail::fmt_pair(e.d1, e.d2) << "; ";
        }
      }
    }
    add_bool("lemma29_increment", ok,
             ok ? "exp(m + delta_X) increments one exponent for every line" : os.str());
  }

  // stabilization certificates (reaching this point means none failed fatally)
  {
    std::ostringstream os;
    os << "certificates at degrees";
    for (const auto& ha : res.per_h)
      os << " H" << ha.h << ":(" << ha.rho.certificate_degree << "," << ha.pi.certificate_degree
         << "," << ha.rho2.certificate_degree << ")";
    add("stabilization_certificates", CheckStatus::Pass, os.str());
  }

  if (with_presentation && !res.pres) res.pres = presentation(s, cap);
  return res;
}

template <class F>
VerdictReport verify_theorems(Session<F>& s, std::optional<long long> cap = std::nullopt) {
  return analyze(s, cap, /*with_presentation=*/false).verdicts;
}

}  // namespace arrlog
