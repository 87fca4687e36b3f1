#include "votemle/consistency.hpp"

#include <algorithm>
#include <functional>

#include "votemle/random.hpp"

namespace votemle {

namespace {

Outcome outcome_at(const RuleOutcome& out, OutcomeLevel level) {
  if (level == OutcomeLevel::Winner) return Outcome::winner(out.winner);
  return Outcome::ranking(out.strict);
}

}  // namespace

std::optional<ViolationCertificate> check_violation(const RuleSpec& rule, OutcomeLevel level,
                                                    const Profile& v1, const Profile& v2) {
  if (!(v1.candidates() == v2.candidates()))
    throw std::invalid_argument("check_violation: candidate sets differ");
  Profile combined = Profile::combine(v1, v2);

  RuleOutcome o1 = rule.apply(v1);
  RuleOutcome o2 = rule.apply(v2);
  RuleOutcome oc = rule.apply(combined);

  ViolationCertificate cert{v1,
                            v2,
                            level,
                            outcome_at(o1, level),
                            outcome_at(o2, level),
                            outcome_at(oc, level),
                            outcome_strict_at(o1, level),
                            outcome_strict_at(o2, level),
                            outcome_strict_at(oc, level)};

  if (!cert.strict_v1 || !cert.strict_v2 || !cert.strict_combined) return std::nullopt;
  if (rule.kind() == RuleSpec::Kind::RankedPairs) {
    // The lock order must not depend on sort tie-breaking in any of the three
    // elections.
    if (!ranked_pairs_tie_free(pairwise_matrix(v1)) || !ranked_pairs_tie_free(pairwise_matrix(v2)) ||
        !ranked_pairs_tie_free(pairwise_matrix(combined))) {
      return std::nullopt;
    }
  }
  if (!outcomes_equal_at(o1, o2, level)) return std::nullopt;
  if (outcomes_equal_at(o1, oc, level)) return std::nullopt;
  return cert;
}

namespace {

// All profiles over m candidates with 1..max_votes votes, as multisets of
// rankings in lexicographic order.
std::vector<Profile> enumerate_profiles(int m, long long max_votes, long long cap) {
  std::vector<Ranking> rankings = all_rankings(m);
  const int r = static_cast<int>(rankings.size());
  CandidateSet cs(default_labels(m));
  std::vector<Profile> out;
  std::vector<int> chosen;
  std::function<void(int, long long)> rec = [&](int start, long long remaining) {
    if (static_cast<long long>(out.size()) > cap)
      throw std::invalid_argument("search: exhaustive profile space too large, lower --max-votes");
    if (remaining == 0) {
      std::vector<VoteGroup> groups;
      for (size_t i = 0; i < chosen.size();) {
        size_t j = i;
        while (j < chosen.size() && chosen[j] == chosen[i]) ++j;
        groups.push_back({rankings[static_cast<size_t>(chosen[i])], static_cast<long long>(j - i)});
        i = j;
      }
      out.push_back(Profile(cs, std::move(groups)));
      return;
    }
    for (int i = start; i < r; ++i) {
      chosen.push_back(i);
      rec(i, remaining - 1);
      chosen.pop_back();
    }
  };
  for (long long k = 1; k <= max_votes; ++k) rec(0, k);
  return out;
}

std::vector<int> alignment_permutation(const RuleOutcome& out, OutcomeLevel level, int m) {
  std::vector<int> sigma(static_cast<size_t>(m));
  if (level == OutcomeLevel::Ranking) {
    for (int pos = 0; pos < m; ++pos) sigma[static_cast<size_t>(out.strict.at(pos))] = pos;
  } else {
    for (int c = 0; c < m; ++c) sigma[static_cast<size_t>(c)] = c;
    sigma[static_cast<size_t>(out.winner)] = 0;
    sigma[0] = out.winner;
  }
  return sigma;
}

bool outcome_is_canonical(const RuleOutcome& out, OutcomeLevel level) {
  if (level == OutcomeLevel::Winner) return out.winner == 0;
  return out.strict == Ranking::identity(out.strict.size());
}

MarginGraph relabel_graph(const MarginGraph& g, const std::vector<int>& sigma) {
  const int m = g.num_candidates();
  MarginGraph out(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      out.set_weight(sigma[static_cast<size_t>(a)], sigma[static_cast<size_t>(b)], g.weight(a, b));
    }
  }
  return out;
}

// Ranked pairs only certifies when every pairwise value is distinct, which a
// uniform draw almost never hits; draw distinct magnitudes when the weight
// budget allows it.
MarginGraph sample_graph(int m, long long max_weight, bool distinct_magnitudes, SplitMix64& rng) {
  const long long k = max_weight / 2;
  const int pairs = m * (m - 1) / 2;
  if (!distinct_magnitudes || k < pairs) return random_even_margin_graph(m, max_weight, rng);
  std::vector<long long> magnitudes(static_cast<size_t>(k));
  for (long long i = 0; i < k; ++i) magnitudes[static_cast<size_t>(i)] = 2 * (i + 1);
  for (size_t i = magnitudes.size(); i-- > 1;) {
    size_t j = static_cast<size_t>(rng.below(i + 1));
    std::swap(magnitudes[i], magnitudes[j]);
  }
  MarginGraph g(m);
  int idx = 0;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      long long w = magnitudes[static_cast<size_t>(idx++)];
      if (rng.below(2) == 1) w = -w;
      g.set_weight(a, b, w);
    }
  }
  return g;
}

SearchResult search_margin_space(const RuleSpec& rule, const SearchOptions& options) {
  if (!rule.margin_determined())
    throw std::invalid_argument("search: margin strategy requires a margin-determined rule");
  if (options.exhaustive)
    throw std::invalid_argument("search: exhaustive enumeration is profile-space only");
  const bool needs_distinct = rule.kind() == RuleSpec::Kind::RankedPairs;
  const int m = options.num_candidates;
  SearchResult result;
  SplitMix64 rng(options.seed);
  std::vector<MarginGraph> pool;

  while (result.steps < options.budget) {
    ++result.steps;
    MarginGraph g = sample_graph(m, options.max_weight, needs_distinct, rng);
    if (needs_distinct && !ranked_pairs_tie_free(g)) continue;
    RuleOutcome out = rule.apply_on_margins(g);
    if (!outcome_strict_at(out, options.level)) continue;
    MarginGraph aligned = relabel_graph(g, alignment_permutation(out, options.level, m));
    RuleOutcome aligned_out = rule.apply_on_margins(aligned);
    if (!outcome_strict_at(aligned_out, options.level) ||
        !outcome_is_canonical(aligned_out, options.level)) {
      continue;
    }
    for (const MarginGraph& other : pool) {
      if (result.steps >= options.budget) break;
      ++result.steps;
      MarginGraph combined = MarginGraph::sum(other, aligned);
      if (needs_distinct && !ranked_pairs_tie_free(combined)) continue;
      RuleOutcome combined_out = rule.apply_on_margins(combined);
      if (!outcome_strict_at(combined_out, options.level)) continue;
      if (outcomes_equal_at(combined_out, aligned_out, options.level)) continue;
      auto cert = check_violation(rule, options.level, realize_margin_graph(other),
                                  realize_margin_graph(aligned));
      if (cert) {
        result.certificate = std::move(cert);
        return result;
      }
    }
    pool.push_back(std::move(aligned));
  }
  return result;
}

SearchResult search_profile_space(const RuleSpec& rule, const SearchOptions& options) {
  const int m = options.num_candidates;
  SearchResult result;

  if (options.exhaustive) {
    std::vector<Profile> profiles = enumerate_profiles(m, options.max_votes, 100000);
    std::vector<RuleOutcome> outcomes;
    std::vector<bool> usable(profiles.size(), false);
    outcomes.reserve(profiles.size());
    for (size_t i = 0; i < profiles.size(); ++i) {
      outcomes.push_back(rule.apply(profiles[i]));
      usable[i] = outcome_strict_at(outcomes.back(), options.level);
    }
    bool truncated = false;
    for (size_t i = 0; i < profiles.size() && !truncated; ++i) {
      if (!usable[i]) continue;
      for (size_t j = i; j < profiles.size(); ++j) {
        if (result.steps >= options.budget) {
          truncated = true;
          break;
        }
        ++result.steps;
        if (!usable[j]) continue;
        if (!outcomes_equal_at(outcomes[i], outcomes[j], options.level)) continue;
        auto cert = check_violation(rule, options.level, profiles[i], profiles[j]);
        if (cert) {
          result.certificate = std::move(cert);
          return result;
        }
      }
    }
    result.exhausted_space = !truncated;
    return result;
  }

  SplitMix64 rng(options.seed);
  std::vector<Profile> pool;
  while (result.steps < options.budget) {
    ++result.steps;
    long long n = rng.range(1, options.max_votes);
    Profile p = random_profile(m, n, rng);
    RuleOutcome out = rule.apply(p);
    if (!outcome_strict_at(out, options.level)) continue;
    Profile aligned = relabel_profile(p, alignment_permutation(out, options.level, m));
    RuleOutcome aligned_out = rule.apply(aligned);
    if (!outcome_strict_at(aligned_out, options.level) ||
        !outcome_is_canonical(aligned_out, options.level)) {
      continue;
    }
    for (const Profile& other : pool) {
      if (result.steps >= options.budget) break;
      ++result.steps;
      auto cert = check_violation(rule, options.level, other, aligned);
      if (cert) {
        result.certificate = std::move(cert);
        return result;
      }
    }
    if (pool.size() < 4096) pool.push_back(std::move(aligned));
  }
  return result;
}

}  // namespace

SearchResult search_violation(const RuleSpec& rule, const SearchOptions& options) {
  if (options.num_candidates < 2) throw std::invalid_argument("search: need at least two candidates");
  if (options.strategy == SearchStrategy::Margins) return search_margin_space(rule, options);
  return search_profile_space(rule, options);
}

std::vector<Fixture> builtin_fixtures() {
  std::vector<Fixture> out;

  Profile bucklin_v1 = parse_profile(
      "candidates: a,b,c,d,e\n"
      "2: a>b>c>d>e\n"
      "1: b>a>c>d>e\n");
  Profile bucklin_v2 = parse_profile(
      "candidates: a,b,c,d,e\n"
      "2: b>d>a>c>e\n"
      "1: c>e>a>b>d\n"
      "1: c>a>b>d>e\n");
  out.push_back(Fixture{"bucklin-ranking",
                        RuleSpec::bucklin(),
                        OutcomeLevel::Ranking,
                        bucklin_v1,
                        bucklin_v2,
                        Outcome::ranking(Ranking({0, 1, 2, 3, 4})),
                        Outcome::ranking(Ranking({0, 1, 2, 3, 4})),
                        Outcome::ranking(Ranking({1, 0, 2, 3, 4}))});

  Profile stv_v1 = parse_profile(
      "candidates: a,b,c\n"
      "3: c>a>b\n"
      "4: a>b>c\n"
      "6: b>a>c\n");
  Profile stv_v2 = parse_profile(
      "candidates: a,b,c\n"
      "3: b>a>c\n"
      "4: a>c>b\n"
      "6: c>a>b\n");
  out.push_back(Fixture{"stv-winner",
                        RuleSpec::stv(),
                        OutcomeLevel::Winner,
                        stv_v1,
                        stv_v2,
                        Outcome::winner(0),
                        Outcome::winner(0),
                        Outcome::winner(2)});

  return out;
}

namespace {

std::string render_outcome(const CandidateSet& cs, const Outcome& o) {
  if (o.is_winner()) return cs.name(o.winner_index());
  return render_ranking(cs, o.ranking());
}

}  // namespace

std::string render_certificate(const ViolationCertificate& cert, const std::string& rule_name) {
  const auto& cs = cert.v1.candidates();
  std::string out;
  out += "rule: " + rule_name + "\n";
  out += std::string("level: ") + (cert.level == OutcomeLevel::Winner ? "winner" : "ranking") + "\n";
  out += "outcome on profile 1: " + render_outcome(cs, cert.outcome_v1) + "\n";
  out += "outcome on profile 2: " + render_outcome(cs, cert.outcome_v2) + "\n";
  out += "outcome on combined:  " + render_outcome(cs, cert.outcome_combined) + "\n";
  out += "profile 1:\n" + render_profile(cert.v1);
  out += "profile 2:\n" + render_profile(cert.v2);
  return out;
}

}  // namespace votemle
