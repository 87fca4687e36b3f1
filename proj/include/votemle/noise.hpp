#pragma once

#include <string>
#include <variant>
#include <vector>

#include "votemle/core.hpp"
#include "votemle/rational.hpp"
#include "votemle/rules.hpp"

namespace votemle {

// Hypothesized correct outcome: a winner or a full ranking.
class Outcome {
 public:
  static Outcome winner(int candidate) { return Outcome(candidate); }
  static Outcome ranking(Ranking r) { return Outcome(std::move(r)); }

  bool is_winner() const { return std::holds_alternative<int>(v_); }
  int winner_index() const { return std::get<int>(v_); }
  const Ranking& ranking() const { return std::get<Ranking>(v_); }

  bool operator==(const Outcome& other) const { return v_ == other.v_; }

 private:
  explicit Outcome(int w) : v_(w) {}
  explicit Outcome(Ranking r) : v_(std::move(r)) {}
  std::variant<int, Ranking> v_;
};

// Exactly comparable likelihood value. Exact likelihoods are rationals;
// lexicographic likelihoods are exponent vectors (e_1..e_m) where smaller is
// more likely, compared on (e_m, ..., e_1). The two kinds never mix.
class Likelihood {
 public:
  static Likelihood exact(Rational value);
  static Likelihood lex(std::vector<long long> exponents);

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& exact_value() const { return std::get<Rational>(v_); }
  const std::vector<long long>& exponents() const { return std::get<std::vector<long long>>(v_); }

  // Combines i.i.d. factors: multiplies rationals, adds exponent vectors.
  friend Likelihood operator*(const Likelihood& a, const Likelihood& b);

  // >0 when this outcome is more likely than other.
  int compare(const Likelihood& other) const;
  bool operator==(const Likelihood& other) const;

  std::string to_string() const;

 private:
  explicit Likelihood(Rational r) : v_(std::move(r)) {}
  explicit Likelihood(std::vector<long long> e) : v_(std::move(e)) {}
  std::variant<Rational, std::vector<long long>> v_;
};

// Conditional vote distribution families. Scoring-winner weights a vote
// 2^(points of the true winner); scoring-ranking weights it
// prod_i (m+1-i)^(points of the i-th true candidate); stv-lex tracks, per
// true position, whether everything a vote ranks above that candidate sits
// below it in the true ranking; condorcet(p) weights each correctly ordered
// pair p and each inverted pair 1-p.
class NoiseModel {
 public:
  enum class Kind { ScoringWinner, ScoringRanking, StvLex, Condorcet };

  static NoiseModel scoring_winner(ScoreVector alpha);
  static NoiseModel scoring_ranking(ScoreVector alpha);
  static NoiseModel stv_lex();
  static NoiseModel condorcet(Rational p);  // requires 1/2 < p < 1

  Kind kind() const { return kind_; }
  const ScoreVector& alpha() const;
  const Rational& p() const;

  bool supports_winner_outcomes() const { return kind_ == Kind::ScoringWinner; }
  bool supports_ranking_outcomes() const { return kind_ != Kind::ScoringWinner; }
  bool supports(const Outcome& outcome) const {
    return outcome.is_winner() ? supports_winner_outcomes() : supports_ranking_outcomes();
  }

  std::string name() const;

 private:
  explicit NoiseModel(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::vector<ScoreVector> alpha_;  // empty or one element
  std::vector<Rational> p_;         // empty or one element
};

// Unnormalized weight of a single vote given the hypothesized outcome.
Likelihood vote_weight(const NoiseModel& model, const Outcome& outcome, const Ranking& vote);

// Sum of vote_weight over all m! votes; defined for exact models only and
// independent of the particular outcome.
Likelihood normalizer(const NoiseModel& model, const Outcome& outcome, int m,
                      int bound = kEnumerationBound);

// Product (exact) or multiplicity-weighted sum (lex) over the profile.
Likelihood profile_likelihood(const NoiseModel& model, const Outcome& outcome, const Profile& p);

}  // namespace votemle
