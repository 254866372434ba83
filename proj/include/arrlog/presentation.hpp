#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "arrlog/errors.hpp"
#include "arrlog/linalg.hpp"
#include "arrlog/session.hpp"

namespace arrlog {

struct PresentationReport {
  std::vector<long long> generator_degrees;  // sorted multiset
  std::vector<long long> relation_degrees;   // sorted multiset
  long long cap = 0;
  std::optional<long long> level;  // relation degree - 1 for single-relation modules

  bool free_shape() const { return relation_degrees.empty() && generator_degrees.size() == 3; }
};

template <class F>
struct GeneratorSet {
  // (degree, ambient coefficient vector of D(A)_degree)
  std::vector<std::pair<int, std::vector<elem_t<F>>>> gens;
  long long certified_through = -1;
};

namespace detail {

// multiply an ambient derivation vector (3 blocks of dim S_d) by a monomial
template <class F>
std::vector<elem_t<F>> shift_derivation_vector(const std::vector<elem_t<F>>& v, int d,
                                               const std::array<int, 3>& mono, const F& field) {
  int dd = d + mono[0] + mono[1] + mono[2];
  std::size_t n = mono_count3(d), m = mono_count3(dd);
  std::vector<elem_t<F>> out(3 * m, field.zero());
  auto ez = mono_exps3(d);
  for (int b = 0; b < 3; ++b)
    for (std::size_t i = 0; i < n; ++i) {
      if (field.is_zero(v[b * n + i])) continue;
      out[b * m + mono_index3(dd, ez[i][0] + mono[0], ez[i][1] + mono[1])] = v[b * n + i];
    }
  return out;
}

inline long long hilb3(long long e) { return e < 0 ? 0 : (e + 1) * (e + 2) / 2; }

}  // namespace detail

// Minimal generators and first syzygies of D(A), found degree by degree.
// D(A) is reflexive over three variables, so pdim <= 1: the syzygy module is
// free and both generator and relation degrees are bounded by the regularity
// of D(A), which is at most |A|. The loop therefore runs to |A|+1 and the
// rank/degree-sum/Hilbert bookkeeping is asserted afterwards.
template <class F>
PresentationReport presentation(Session<F>& s, std::optional<long long> cap_opt = std::nullopt,
                                GeneratorSet<F>* out_gens = nullptr) {
  const F& f = s.field();
  long long planes = static_cast<long long>(s.size());
  check_internal(planes >= 1, "presentation needs a nonempty arrangement");
  long long cap = cap_opt.value_or(default_cap(s.size()));
  if (cap < 1) fail(Errc::CapTooSmall, "presentation cap must be >= 1");
  long long dstop = planes + 1;
  if (cap < dstop)
    fail(Errc::CapTooSmall, "presentation needs cap >= |A|+1 = " + std::to_string(dstop) +
                                ", got " + std::to_string(cap));

  PresentationReport rep;
  rep.cap = cap;
  GeneratorSet<F> gens;
  // kernel basis of the evaluation map at the previous degree, in free-module
  // coordinates over the generators known at that time
  std::vector<std::vector<elem_t<F>>> prev_kernel;
  int prev_kernel_degree = -1;
  std::size_t prev_gen_count = 0;

  for (int d = 0; d <= dstop; ++d) {
    const auto& dd = s.d_basis(d);

    // new generators: complete S_1 * D_(d-1) inside D_d
    RowSpace<F> span(dd.ambient, f);
    if (d >= 1) {
      for (const auto& w : s.d_basis(d - 1).basis)
        for (int t = 0; t < 3; ++t) {
          std::array<int, 3> mono{0, 0, 0};
          mono[t] = 1;
          span.insert(detail::shift_derivation_vector<F>(w, d - 1, mono, f));
        }
    }
    for (const auto& v : dd.basis)
      if (!span.contains(v)) {
        span.insert(v);
        gens.gens.emplace_back(d, v);
        rep.generator_degrees.push_back(d);
      }

    // evaluation map from the free module on the current generators
    struct Block {
      int gen_degree;
      std::size_t offset;
      std::size_t count;
    };
    std::vector<Block> blocks;
    std::size_t free_dim = 0;
    for (const auto& g : gens.gens) {
      std::size_t cnt = g.first <= d ? mono_count3(d - g.first) : 0;
      blocks.push_back({g.first, free_dim, cnt});
      free_dim += cnt;
    }
    Matrix<F> eval(dd.ambient, free_dim, f);
    for (std::size_t gi = 0; gi < gens.gens.size(); ++gi) {
      if (blocks[gi].count == 0) continue;
      auto ez = mono_exps3(d - gens.gens[gi].first);
      for (std::size_t mi = 0; mi < ez.size(); ++mi) {
        auto col = detail::shift_derivation_vector<F>(gens.gens[gi].second, gens.gens[gi].first,
                                                      ez[mi], f);
        for (std::size_t r = 0; r < dd.ambient; ++r) eval.at(r, blocks[gi].offset + mi) = col[r];
      }
    }
    auto kernel = nullspace(eval, f);

    // minimal relations: kernel elements outside S_1 * (previous kernel)
    RowSpace<F> kspan(free_dim, f);
    if (prev_kernel_degree == d - 1) {
      for (const auto& u : prev_kernel) {
        for (int t = 0; t < 3; ++t) {
          std::array<int, 3> mono{0, 0, 0};
          mono[t] = 1;
          // re-embed blockwise: old blocks cover the first prev_gen_count gens
          std::vector<elem_t<F>> lifted(free_dim, f.zero());
          std::size_t old_off = 0;
          for (std::size_t gi = 0; gi < prev_gen_count; ++gi) {
            int gd = gens.gens[gi].first;
            std::size_t old_cnt = gd <= d - 1 ? mono_count3(d - 1 - gd) : 0;
            if (old_cnt > 0) {
              auto ezo = mono_exps3(d - 1 - gd);
              for (std::size_t i = 0; i < old_cnt; ++i) {
                if (f.is_zero(u[old_off + i])) continue;
                std::size_t target = mono_index3(d - gd, ezo[i][0] + mono[0], ezo[i][1] + mono[1]);
                lifted[blocks[gi].offset + target] = f.add(lifted[blocks[gi].offset + target],
                                                           u[old_off + i]);
              }
            }
            old_off += old_cnt;
          }
          kspan.insert(std::move(lifted));
        }
      }
    }
    for (const auto& u : kernel)
      if (!kspan.contains(u)) {
        kspan.insert(u);
        rep.relation_degrees.push_back(d);
      }

    prev_kernel = std::move(kernel);
    prev_kernel_degree = d;
    prev_gen_count = gens.gens.size();
  }

  std::sort(rep.generator_degrees.begin(), rep.generator_degrees.end());
  std::sort(rep.relation_degrees.begin(), rep.relation_degrees.end());

  // rank, first Chern degree sum, and Hilbert-function closure
  long long gsum = 0, rsum = 0;
  for (auto g : rep.generator_degrees) gsum += g;
  for (auto r : rep.relation_degrees) rsum += r;
  bool ok = rep.generator_degrees.size() == rep.relation_degrees.size() + 3 &&
            gsum - rsum == planes;
  if (ok) {
    long long predicted = 0;
    for (auto g : rep.generator_degrees) predicted += detail::hilb3(dstop - g);
    for (auto r : rep.relation_degrees) predicted -= detail::hilb3(dstop - r);
    ok = predicted == static_cast<long long>(s.d_basis(static_cast<int>(dstop)).dim());
  }
  if (!ok)
    fail(Errc::CapTooSmall,
         "presentation bookkeeping did not close by degree " + std::to_string(dstop));

  if (rep.relation_degrees.size() == 1) rep.level = rep.relation_degrees.front() - 1;
  gens.certified_through = dstop;
  if (out_gens) *out_gens = std::move(gens);
  return rep;
}

// spec-shaped wrappers
template <class F>
std::pair<std::vector<long long>, std::vector<Derivation3<F>>> minimal_generators(
    Session<F>& s, std::optional<long long> cap = std::nullopt) {
  GeneratorSet<F> gens;
  auto rep = presentation(s, cap, &gens);
  std::vector<Derivation3<F>> reps;
  for (const auto& g : gens.gens)
    reps.push_back(derivation3_from_vector<F>(g.first, g.second, s.field()));
  return {rep.generator_degrees, std::move(reps)};
}

template <class F>
std::vector<long long> first_syzygies(Session<F>& s, std::optional<long long> cap = std::nullopt) {
  return presentation(s, cap).relation_degrees;
}

}  // namespace arrlog
