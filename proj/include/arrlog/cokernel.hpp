#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "arrlog/errors.hpp"
#include "arrlog/linalg.hpp"
#include "arrlog/session.hpp"

namespace arrlog {

enum class MapKind { Rho, Pi, Rho2 };

inline const char* map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::Rho: return "rho";
    case MapKind::Pi: return "pi";
    case MapKind::Rho2: return "rho2";
  }
  return "?";
}

// project one ambient D(A)_d vector through the chart of H: keep the two
// surviving components and reduce them modulo alpha_H
template <class F>
std::vector<elem_t<F>> project_derivation(Session<F>& s, std::size_t h, int d,
                                          const std::vector<elem_t<F>>& vec) {
  const F& f = s.field();
  const auto& red = s.reductions(d)[h];
  const auto& res = s.restriction(h);
  std::size_t n = mono_count3(d), m = mono_count2(d);
  std::vector<elem_t<F>> out(2 * m, f.zero());
  for (int part = 0; part < 2; ++part) {
    std::size_t block = static_cast<std::size_t>(part == 0 ? res.kept0 : res.kept1) * n;
    for (std::size_t i = 0; i < m; ++i) {
      auto acc = f.zero();
      for (std::size_t j = 0; j < n; ++j) acc = f.add(acc, f.mul(red.at(i, j), vec[block + j]));
      out[part * m + i] = acc;
    }
  }
  return out;
}

// project one ambient D^2(A)_d vector: the surviving bivector component is
// p_{kl} for the kept coordinate pair (k,l), reduced modulo alpha_H
template <class F>
std::vector<elem_t<F>> project_biderivation(Session<F>& s, std::size_t h, int d,
                                            const std::vector<elem_t<F>>& vec) {
  const F& f = s.field();
  const auto& red = s.reductions(d)[h];
  const auto& res = s.restriction(h);
  std::size_t n = mono_count3(d), m = mono_count2(d);
  int comp;
  if (res.kept0 == 0 && res.kept1 == 1) comp = 0;
  else if (res.kept0 == 0 && res.kept1 == 2) comp = 1;
  else comp = 2;
  std::size_t block = static_cast<std::size_t>(comp) * n;
  std::vector<elem_t<F>> out(m, f.zero());
  for (std::size_t i = 0; i < m; ++i) {
    auto acc = f.zero();
    for (std::size_t j = 0; j < n; ++j) acc = f.add(acc, f.mul(red.at(i, j), vec[block + j]));
    out[i] = acc;
  }
  return out;
}

template <class F>
std::vector<std::vector<elem_t<F>>> rho_image(Session<F>& s, std::size_t h, int d) {
  std::vector<std::vector<elem_t<F>>> out;
  for (const auto& v : s.d_basis(d).basis) out.push_back(project_derivation(s, h, d, v));
  return out;
}

template <class F>
std::vector<std::vector<elem_t<F>>> pi_image(Session<F>& s, std::size_t h, int d) {
  std::vector<std::vector<elem_t<F>>> out;
  for (const auto& v : s.dh_basis(h, d).basis) out.push_back(project_derivation(s, h, d, v));
  return out;
}

template <class F>
std::vector<std::vector<elem_t<F>>> rho2_image(Session<F>& s, std::size_t h, int d) {
  std::vector<std::vector<elem_t<F>>> out;
  for (const auto& v : s.d2_basis(d).basis) out.push_back(project_biderivation(s, h, d, v));
  return out;
}

struct CokernelReport {
  MapKind kind = MapKind::Rho;
  std::size_t h = 0;
  std::vector<std::pair<int, long long>> per_degree;
  long long total = 0;
  int certificate_degree = 0;
  bool stabilized = false;
  long long lp = 0;
  std::vector<long long> image_ranks;  // aligned with per_degree
};

namespace detail {

template <class F>
long long coker_dim_at(Session<F>& s, MapKind kind, std::size_t h, int d,
                       long long* image_rank = nullptr) {
  const F& f = s.field();
  const GradedPieceBasis<F>* target = nullptr;
  std::vector<std::vector<elem_t<F>>> image;
  switch (kind) {
    case MapKind::Rho:
      target = &s.target_rho(h, d);
      image = rho_image(s, h, d);
      break;
    case MapKind::Pi:
      target = &s.target_pi(h, d);
      image = pi_image(s, h, d);
      break;
    case MapKind::Rho2:
      target = &s.target_rho2(h, d);
      image = rho2_image(s, h, d);
      break;
  }
  RowSpace<F> span(target->ambient, f);
  for (auto& v : image) span.insert(std::move(v));
  if (image_rank) *image_rank = static_cast<long long>(span.dim());
  long long fresh = 0;
  for (const auto& v : target->basis)
    if (span.insert(v)) ++fresh;
  return fresh;
}

}  // namespace detail

// Per-degree cokernel dimensions with a stabilization certificate. The image
// of each map is closed under multiplication by the 2-variable ring, and the
// target is free; once the image fills a degree at or above the target's top
// generator degree, every higher degree is filled too. The first such full
// degree is the certificate; one extra degree is re-verified explicitly.
template <class F>
CokernelReport coker_report(Session<F>& s, MapKind kind, std::size_t h,
                            std::optional<long long> cap_opt = std::nullopt) {
  if (s.size() < 2) fail(Errc::EmptyRestriction, "cokernel report needs |A| >= 2");
  long long cap = cap_opt.value_or(default_cap(s.size()));
  long long n_lines = static_cast<long long>(s.restriction(h).lines.size());

  long long threshold = 0;
  switch (kind) {
    case MapKind::Rho: threshold = std::max(1LL, n_lines - 1); break;
    case MapKind::Pi: threshold = s.exponents(h).d2; break;
    case MapKind::Rho2: threshold = n_lines; break;
  }

  CokernelReport rep;
  rep.kind = kind;
  rep.h = h;
  rep.lp = s.lp(h);
  long long certificate = -1;
  for (long long d = 0; d <= cap; ++d) {
    long long rank_d = 0;
    long long c = detail::coker_dim_at(s, kind, h, static_cast<int>(d), &rank_d);
    rep.per_degree.emplace_back(static_cast<int>(d), c);
    rep.image_ranks.push_back(rank_d);
    rep.total += c;
    if (d >= threshold && c == 0) {
      certificate = d;
      break;
    }
  }
  if (certificate < 0)
    fail(Errc::StabilizationNotReached,
         std::string("cokernel of ") + map_kind_name(kind) + " did not stabilize below cap " +
             std::to_string(cap));
  // belt and suspenders for the generation argument
  check_internal(detail::coker_dim_at(s, kind, h, static_cast<int>(certificate) + 1) == 0,
                 "stabilization certificate failed re-verification");
  rep.certificate_degree = static_cast<int>(certificate);
  rep.stabilized = true;
  return rep;
}

// ---------------------------------------------------------------------------
// Freeness via the Ziegler-exponent criterion: A is free with exponents
// (1,d1,d2) iff chi0(A;0) = d1 d2. Checked for every hyperplane; verdicts
// must agree.
// ---------------------------------------------------------------------------
template <class F>
struct FreenessCertificate {
  bool free = false;
  long long a = 0, b = 0;  // exponents (1,a,b) when free
  long long b2 = 0;
  struct PerH {
    std::size_t h;
    long long d1, d2;
  };
  std::vector<PerH> checked;
  std::optional<std::array<Derivation3<F>, 3>> saito_basis;
};

template <class F>
FreenessCertificate<F> freeness(Session<F>& s, bool search_saito_basis = false) {
  if (s.size() < 2) fail(Errc::EmptyRestriction, "freeness needs |A| >= 2");
  FreenessCertificate<F> cert;
  cert.b2 = s.charpoly().b2;
  std::optional<bool> verdict;
  for (std::size_t h = 0; h < s.size(); ++h) {
    auto e = s.exponents(h);
    cert.checked.push_back({h, e.d1, e.d2});
    bool free_here = (cert.b2 == e.d1 * e.d2);
    if (!verdict) {
      verdict = free_here;
    } else if (*verdict != free_here) {
      fail(Errc::InconsistentVerdicts, "freeness verdict differs across hyperplanes");
    }
    if (free_here) {
      if (cert.checked.size() > 1 && cert.free &&
          (cert.a != e.d1 || cert.b != e.d2))
        fail(Errc::InconsistentVerdicts, "free exponents differ across hyperplanes");
      cert.free = true;
      cert.a = e.d1;
      cert.b = e.d2;
    }
  }
  cert.free = *verdict;

  if (cert.free && search_saito_basis) {
    const F& f = s.field();
    auto theta_e = euler_derivation(f);
    const auto& ba = s.d_basis(static_cast<int>(cert.a)).basis;
    const auto& bb = s.d_basis(static_cast<int>(cert.b)).basis;
    for (std::size_t i = 0; i < ba.size() && !cert.saito_basis; ++i) {
      for (std::size_t j = 0; j < bb.size() && !cert.saito_basis; ++j) {
        std::array<Derivation3<F>, 3> triple = {
            theta_e, derivation3_from_vector<F>(static_cast<int>(cert.a), ba[i], f),
            derivation3_from_vector<F>(static_cast<int>(cert.b), bb[j], f)};
        if (saito_check(s.arr(), triple).is_basis) cert.saito_basis = triple;
      }
    }
  }
  return cert;
}

// dim coker pi = chi0(A;0) - d1 d2, cross-checked against the directly
// computed cokernel total.
template <class F>
long long yoshinaga_dim(Session<F>& s, std::size_t h) {
  auto e = s.exponents(h);
  long long predicted = s.charpoly().b2 - e.d1 * e.d2;
  auto rep = coker_report(s, MapKind::Pi, h);
  check_internal(rep.total == predicted,
                 "Yoshinaga cross-check failed: direct " + std::to_string(rep.total) +
                     " vs formula " + std::to_string(predicted));
  return predicted;
}

// deletion freeness helper: a one- or zero-plane arrangement is free
template <class F>
bool deletion_is_free(const Arrangement<F>& a, std::size_t h) {
  auto del = delete_hyperplane(a, h);
  if (del.size() <= 1) return true;
  Session<F> s(del);
  auto e = s.exponents(0);
  return s.charpoly().b2 == e.d1 * e.d2;
}

}  // namespace arrlog
