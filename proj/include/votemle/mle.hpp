#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "votemle/noise.hpp"
#include "votemle/random.hpp"

namespace votemle {

struct WinnerMle {
  std::vector<int> winners;              // argmax set, ascending
  std::vector<Likelihood> per_candidate; // likelihood of each candidate as winner
};

struct RankingMle {
  std::vector<Ranking> rankings;  // argmax set, lexicographic
  Likelihood best;
};

// Exhaustive argmax over winners; model must support winner outcomes.
WinnerMle mle_winners_detailed(const NoiseModel& model, const Profile& p);
std::vector<int> mle_winners(const NoiseModel& model, const Profile& p);

// Exhaustive argmax over all m! rankings; model must support ranking outcomes.
RankingMle mle_rankings_detailed(const NoiseModel& model, const Profile& p,
                                 int bound = kEnumerationBound);
std::vector<Ranking> mle_rankings(const NoiseModel& model, const Profile& p,
                                  int bound = kEnumerationBound);

// Which theorem-backed pairing the equivalence harness exercises.
enum class EquivalencePairing {
  ScoringWinnerVsTopScores,   // winner MLE vs. max-score candidates
  ScoringRankingVsScoreOrder, // ranking MLE vs. all score-sorted orders
  StvLexVsStv,                // ranking MLE vs. the STV ranking
  CondorcetVsKemeny,          // ranking MLE vs. the Kemeny set
};

struct ProfileBounds {
  int m_min = 2;
  int m_max = 5;
  long long n_min = 1;
  long long n_max = 7;
};

struct EquivalenceReport {
  long long trials = 0;
  long long passes = 0;
  long long failures = 0;
  long long skipped = 0;  // tied-elimination profiles under the stv pairing
  std::optional<Profile> first_failure;
  std::string detail;

  bool all_passed() const { return failures == 0; }
};

struct EquivalenceConfig {
  EquivalencePairing pairing;
  long long trials = 100;
  ProfileBounds bounds;
  uint64_t seed = 1;
  // Scoring pairings: preset alphas are used when empty, plus one random
  // nonincreasing vector per trial. When set, only this alpha is used.
  std::optional<std::vector<long long>> fixed_alpha;
  std::optional<Rational> condorcet_p;  // defaults to 3/5
};

// Seeded random-profile comparison of the exhaustive MLE against the rule
// each noise model was built around. Failures capture the first offending
// profile; stv trials with tied eliminations are skipped, not failed.
EquivalenceReport mle_equivalence_report(const EquivalenceConfig& config);

// Candidates with maximal total score; the rule-side oracle for the winner pairing.
std::vector<int> top_score_candidates(const Profile& p, const ScoreVector& alpha);

// All rankings listing candidates in nonincreasing score order (every tie order);
// the rule-side oracle for the ranking pairing.
std::vector<Ranking> score_sorted_orders(const Profile& p, const ScoreVector& alpha,
                                         int bound = kEnumerationBound);

}  // namespace votemle
