#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "arrlog/arrangement.hpp"
#include "arrlog/lattice.hpp"
#include "arrlog/logmod.hpp"
#include "arrlog/restriction.hpp"

namespace arrlog {

// default degree cap for stabilization and presentation searches
constexpr long long default_cap(std::size_t planes) { return 2 * static_cast<long long>(planes) + 4; }

// Memoized per-arrangement computations. Graded pieces and reduction tables
// are shared across the per-hyperplane loops of cokernel reports, which is
// where nearly all the elimination time goes. A session is owned by one
// worker; it is not internally synchronized.
template <class F>
class Session {
 public:
  explicit Session(Arrangement<F> a) : a_(std::move(a)) {}

  const Arrangement<F>& arr() const { return a_; }
  const F& field() const { return a_.field; }
  std::size_t size() const { return a_.size(); }

  const CharPoly& charpoly() {
    if (!charpoly_) charpoly_ = char_poly(a_);
    return *charpoly_;
  }

  const std::vector<Matrix<F>>& reductions(int d) {
    auto it = reductions_.find(d);
    if (it == reductions_.end())
      it = reductions_.emplace(d, detail::reduction_matrices(a_, d)).first;
    return it->second;
  }

  const GradedPieceBasis<F>& d_basis(int d) {
    auto it = d_.find(d);
    if (it == d_.end()) it = d_.emplace(d, d_piece(a_, d, &reductions(d))).first;
    return it->second;
  }

  const GradedPieceBasis<F>& d2_basis(int d) {
    auto it = d2_.find(d);
    if (it == d2_.end()) it = d2_.emplace(d, d2_piece(a_, d, &reductions(d))).first;
    return it->second;
  }

  const GradedPieceBasis<F>& dh_basis(std::size_t h, int d) {
    auto key = std::make_pair(h, d);
    auto it = dh_.find(key);
    if (it == dh_.end()) it = dh_.emplace(key, dh_piece(a_, h, d, &reductions(d))).first;
    return it->second;
  }

  const RestrictedArrangement<F>& restriction(std::size_t h) {
    ensure_restriction(h);
    return restrictions_.at(h).restricted;
  }

  const std::vector<int>& multiplicity(std::size_t h) {
    ensure_restriction(h);
    return restrictions_.at(h).mult;
  }

  MultiArrangement2<F> ziegler(std::size_t h) {
    ensure_restriction(h);
    const auto& data = restrictions_.at(h);
    return MultiArrangement2<F>{a_.field, data.restricted.lines, data.mult};
  }

  ExponentPair exponents(std::size_t h) {
    auto it = exponents_.find(h);
    if (it == exponents_.end()) it = exponents_.emplace(h, multi_exponents(ziegler(h))).first;
    return it->second;
  }

  long long lp(std::size_t h) {
    long long n = static_cast<long long>(restriction(h).lines.size()) - 1;
    long long v = charpoly().chi0_eval(n);
    if (v < 0)
      fail(Errc::NegativeLP, "LP invariant is negative: chi0(" + std::to_string(n) +
                                 ") = " + std::to_string(v));
    return v;
  }

  // target module pieces for the three restriction maps
  const GradedPieceBasis<F>& target_rho(std::size_t h, int d) {
    auto key = std::make_pair(h, d);
    auto it = target_rho_.find(key);
    if (it == target_rho_.end()) {
      MultiArrangement2<F> simple{a_.field, restriction(h).lines,
                                  std::vector<int>(restriction(h).lines.size(), 1)};
      auto piece = dm_piece(simple, d);
      piece.tag = ModuleTag::DRestriction;
      it = target_rho_.emplace(key, std::move(piece)).first;
    }
    return it->second;
  }

  const GradedPieceBasis<F>& target_pi(std::size_t h, int d) {
    auto key = std::make_pair(h, d);
    auto it = target_pi_.find(key);
    if (it == target_pi_.end()) it = target_pi_.emplace(key, dm_piece(ziegler(h), d)).first;
    return it->second;
  }

  const GradedPieceBasis<F>& target_rho2(std::size_t h, int d) {
    auto key = std::make_pair(h, d);
    auto it = target_rho2_.find(key);
    if (it == target_rho2_.end())
      it = target_rho2_.emplace(key, d2_restriction_piece<F>(restriction(h).lines, d, a_.field)).first;
    return it->second;
  }

 private:
  void ensure_restriction(std::size_t h) {
    if (!restrictions_.count(h)) restrictions_.emplace(h, detail::restrict_with_multiplicity(a_, h));
  }

  Arrangement<F> a_;
  std::optional<CharPoly> charpoly_;
  std::map<int, std::vector<Matrix<F>>> reductions_;
  std::map<int, GradedPieceBasis<F>> d_;
  std::map<int, GradedPieceBasis<F>> d2_;
  std::map<std::pair<std::size_t, int>, GradedPieceBasis<F>> dh_;
  std::map<std::size_t, detail::RestrictionData<F>> restrictions_;
  std::map<std::size_t, ExponentPair> exponents_;
  std::map<std::pair<std::size_t, int>, GradedPieceBasis<F>> target_rho_, target_pi_, target_rho2_;
};

}  // namespace arrlog
