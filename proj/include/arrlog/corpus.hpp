#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrlog/arrangement.hpp"
#include "arrlog/errors.hpp"
#include "arrlog/fields.hpp"

namespace arrlog {

// SplitMix64: the documented corpus PRNG. Identical CorpusSpec values must
// reproduce corpora bit for bit across platforms and implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform draw from [0, bound)
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

struct CorpusSpec {
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  int max_planes = 8;
  int bound = 3;  // coefficients drawn from -bound..bound
  FieldDescriptor field;
};

// per-arrangement stream: first SplitMix64 output of the seed, xored with a
// golden-ratio multiple of (index+1)
inline std::uint64_t corpus_stream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed);
  return g.next() ^ (0x9E3779B97F4A7C15ULL * (index + 1));
}

template <class F>
Arrangement<F> random_arrangement(const F& field, const CorpusSpec& spec, std::uint64_t index) {
  if (spec.max_planes < 3 || spec.bound < 1)
    fail(Errc::GenerationExhausted, "corpus spec needs max_planes >= 3 and bound >= 1");
  SplitMix64 rng(corpus_stream_seed(spec.seed, index));
  int target = spec.max_planes == 3
                   ? 3
                   : 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.max_planes - 2)));

  std::vector<LinearForm3<F>> accepted;
  std::vector<std::array<elem_t<F>, 3>> raw;
  long long attempts = 0;
  const long long max_attempts = 400 + 400LL * target;
  while (static_cast<int>(accepted.size()) < target) {
    if (++attempts > max_attempts)
      fail(Errc::GenerationExhausted, "coefficient box too small for " + std::to_string(target) +
                                          " distinct hyperplanes");
    std::array<elem_t<F>, 3> cand;
    bool zero = true;
    for (int j = 0; j < 3; ++j) {
      long v = static_cast<long>(rng.below(2 * static_cast<std::uint64_t>(spec.bound) + 1)) -
               spec.bound;
      cand[j] = field.from_int(v);
      zero = zero && field.is_zero(cand[j]);
    }
    if (zero) continue;
    auto norm = normalize_form<F>(cand, field);
    bool dup = false;
    for (const auto& f : accepted)
      if (cmp_form(f, norm, field) == 0) {
        dup = true;
        break;
      }
    if (dup) continue;
    accepted.push_back(norm);
    raw.push_back(cand);
  }
  return build_arrangement(field, raw, "corpus-" + std::to_string(index));
}

}  // namespace arrlog
