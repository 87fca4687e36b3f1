#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "votemle/core.hpp"

namespace votemle {

// Nonincreasing integer score vector; alpha[r] is awarded for rank r+1.
class ScoreVector {
 public:
  explicit ScoreVector(std::vector<long long> alpha);

  static ScoreVector plurality(int m);
  static ScoreVector borda(int m);
  static ScoreVector veto(int m);

  int size() const { return static_cast<int>(alpha_.size()); }
  long long at(int rank0) const { return alpha_.at(static_cast<size_t>(rank0)); }
  const std::vector<long long>& values() const { return alpha_; }

  bool operator==(const ScoreVector& other) const { return alpha_ == other.alpha_; }

 private:
  std::vector<long long> alpha_;
};

// Tie-faithful weak order plus the index-tie-broken strict ranking.
struct RuleOutcome {
  WeakOrder weak;
  Ranking strict;
  int winner;
};

RuleOutcome make_outcome(WeakOrder weak);

enum class OutcomeLevel { Winner, Ranking };

bool outcome_strict_at(const RuleOutcome& o, OutcomeLevel level);
bool outcomes_equal_at(const RuleOutcome& a, const RuleOutcome& b, OutcomeLevel level);

RuleOutcome scoring(const Profile& p, const ScoreVector& alpha);

struct StvResult {
  RuleOutcome outcome;
  std::vector<int> elimination_order;  // first eliminated first
  bool strict_eliminations;            // no round had a tied minimum
};

StvResult stv_detailed(const Profile& p);
RuleOutcome stv(const Profile& p);

RuleOutcome bucklin(const Profile& p);
RuleOutcome maximin(const Profile& p);
RuleOutcome copeland(const Profile& p);
RuleOutcome ranked_pairs(const Profile& p);

// Margin-determined evaluations used by the margin-space search.
RuleOutcome maximin_on_margins(const MarginGraph& g);
RuleOutcome copeland_on_margins(const MarginGraph& g);
RuleOutcome ranked_pairs_on_margins(const MarginGraph& g);

// All pairwise counts distinct, so the ranked-pairs lock order does not
// depend on how sorting ties would be broken.
bool ranked_pairs_tie_free(const PairwiseMatrix& pm);
bool ranked_pairs_tie_free(const MarginGraph& g);

struct KemenyResult {
  std::vector<Ranking> optimal;  // lexicographic order
  long long agreement;           // total pairwise agreement of the optima
};

// Exhaustive Kemeny: rankings maximizing total pairwise agreement.
KemenyResult kemeny(const Profile& p, int bound = kEnumerationBound);

using RuleFn = std::function<RuleOutcome(const Profile&)>;

// Picks the winner with winner_rule, then ranks the others by rest_rule on
// the profile with the winner deleted from every vote.
RuleOutcome hybrid(const Profile& p, const RuleFn& winner_rule, const RuleFn& rest_rule);

// Builds a rule from its surface name (plurality, borda, veto, scoring, stv,
// bucklin, maximin, copeland, ranked-pairs, hybrid). scoring requires alpha;
// hybrid requires the two component names.
class RuleSpec;
RuleSpec make_rule(const std::string& name,
                   const std::optional<std::vector<long long>>& alpha = std::nullopt,
                   const std::optional<std::string>& winner_rule = std::nullopt,
                   const std::optional<std::string>& rest_rule = std::nullopt);

// Value-type description of a rule, used by the CLI and the search harness.
class RuleSpec {
 public:
  enum class Kind { Plurality, Borda, Veto, Scoring, Stv, Bucklin, Maximin, Copeland, RankedPairs, Hybrid };

  static RuleSpec plurality() { return RuleSpec(Kind::Plurality); }
  static RuleSpec borda() { return RuleSpec(Kind::Borda); }
  static RuleSpec veto() { return RuleSpec(Kind::Veto); }
  static RuleSpec scoring(std::vector<long long> alpha);
  static RuleSpec stv() { return RuleSpec(Kind::Stv); }
  static RuleSpec bucklin() { return RuleSpec(Kind::Bucklin); }
  static RuleSpec maximin() { return RuleSpec(Kind::Maximin); }
  static RuleSpec copeland() { return RuleSpec(Kind::Copeland); }
  static RuleSpec ranked_pairs() { return RuleSpec(Kind::RankedPairs); }
  static RuleSpec hybrid(RuleSpec winner_rule, RuleSpec rest_rule);

  Kind kind() const { return kind_; }
  std::string name() const;

  RuleOutcome apply(const Profile& p) const;
  ScoreVector alpha_for(int m) const;  // scoring kinds only

  bool margin_determined() const {
    return kind_ == Kind::Maximin || kind_ == Kind::Copeland || kind_ == Kind::RankedPairs;
  }
  RuleOutcome apply_on_margins(const MarginGraph& g) const;

  // Per-candidate scores for reporting; empty for rules without a natural score.
  std::vector<std::string> score_labels(const Profile& p) const;

 private:
  explicit RuleSpec(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::optional<std::vector<long long>> explicit_alpha_;
  std::shared_ptr<const RuleSpec> winner_rule_;
  std::shared_ptr<const RuleSpec> rest_rule_;
};

}  // namespace votemle
