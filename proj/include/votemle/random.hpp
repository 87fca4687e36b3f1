#pragma once

#include <cstdint>

#include "votemle/core.hpp"
#include "votemle/rules.hpp"

namespace votemle {

// splitmix64: tiny, portable, and identical on every platform, so seeded
// runs are reproducible byte for byte.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw in [0, n); modulo bias is irrelevant at these sizes.
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  uint64_t state_;
};

Ranking random_ranking(int m, SplitMix64& rng);

// n i.i.d. uniform rankings over default labels, merged into a profile.
Profile random_profile(int m, long long n, SplitMix64& rng);

// Nonincreasing vector with entries in [0, max_entry], not all equal unless forced.
ScoreVector random_score_vector(int m, long long max_entry, SplitMix64& rng);

// Antisymmetric graph with even weights drawn from {-2k..2k} for k = max_weight/2.
MarginGraph random_even_margin_graph(int m, long long max_weight, SplitMix64& rng);

}  // namespace votemle
