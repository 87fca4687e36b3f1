#include "votemle/random.hpp"

#include <algorithm>
#include <numeric>

namespace votemle {

Ranking random_ranking(int m, SplitMix64& rng) {
  std::vector<int> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  for (int i = m - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<uint64_t>(i + 1)));
    std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
  }
  return Ranking(std::move(order));
}

Profile random_profile(int m, long long n, SplitMix64& rng) {
  std::vector<VoteGroup> groups;
  for (long long v = 0; v < n; ++v) groups.push_back({random_ranking(m, rng), 1});
  return Profile(CandidateSet(default_labels(m)), std::move(groups)).canonical();
}

ScoreVector random_score_vector(int m, long long max_entry, SplitMix64& rng) {
  std::vector<long long> a(static_cast<size_t>(m));
  for (auto& v : a) v = rng.range(0, max_entry);
  std::sort(a.rbegin(), a.rend());
  return ScoreVector(std::move(a));
}

MarginGraph random_even_margin_graph(int m, long long max_weight, SplitMix64& rng) {
  const long long k = max_weight / 2;
  MarginGraph g(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      g.set_weight(a, b, 2 * rng.range(-k, k));
    }
  }
  return g;
}

}  // namespace votemle
