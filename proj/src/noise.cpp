#include "votemle/noise.hpp"

#include <algorithm>

namespace votemle {

Likelihood Likelihood::exact(Rational value) {
  if (value.num().signum() < 0) throw std::invalid_argument("Likelihood: negative weight");
  return Likelihood(std::move(value));
}

Likelihood Likelihood::lex(std::vector<long long> exponents) {
  for (long long e : exponents) {
    if (e < 0) throw std::invalid_argument("Likelihood: negative exponent");
  }
  return Likelihood(std::move(exponents));
}

Likelihood operator*(const Likelihood& a, const Likelihood& b) {
  if (a.is_exact() != b.is_exact()) throw std::invalid_argument("Likelihood: mixed kinds");
  if (a.is_exact()) return Likelihood(a.exact_value() * b.exact_value());
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  if (ea.size() != eb.size()) throw std::invalid_argument("Likelihood: exponent length mismatch");
  std::vector<long long> out(ea.size());
  for (size_t i = 0; i < ea.size(); ++i) out[i] = ea[i] + eb[i];
  return Likelihood(std::move(out));
}

int Likelihood::compare(const Likelihood& other) const {
  if (is_exact() != other.is_exact()) throw std::invalid_argument("Likelihood: mixed kinds");
  if (is_exact()) return exact_value().compare(other.exact_value());
  const auto& ea = exponents();
  const auto& eb = other.exponents();
  if (ea.size() != eb.size()) throw std::invalid_argument("Likelihood: exponent length mismatch");
  // Fewer of the most-dominated factors wins; scan e_m down to e_1.
  for (size_t i = ea.size(); i-- > 0;) {
    if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
  }
  return 0;
}

bool Likelihood::operator==(const Likelihood& other) const {
  return is_exact() == other.is_exact() && compare(other) == 0;
}

std::string Likelihood::to_string() const {
  if (is_exact()) return exact_value().to_string();
  std::string out = "(";
  const auto& e = exponents();
  for (size_t i = 0; i < e.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(e[i]);
  }
  return out + ")";
}

NoiseModel NoiseModel::scoring_winner(ScoreVector alpha) {
  NoiseModel m(Kind::ScoringWinner);
  m.alpha_.push_back(std::move(alpha));
  return m;
}

NoiseModel NoiseModel::scoring_ranking(ScoreVector alpha) {
  NoiseModel m(Kind::ScoringRanking);
  m.alpha_.push_back(std::move(alpha));
  return m;
}

NoiseModel NoiseModel::stv_lex() { return NoiseModel(Kind::StvLex); }

NoiseModel NoiseModel::condorcet(Rational p) {
  if (p.compare(Rational(1, 2)) <= 0 || p.compare(Rational(1)) >= 0)
    throw std::invalid_argument("condorcet: p must satisfy 1/2 < p < 1");
  NoiseModel m(Kind::Condorcet);
  m.p_.push_back(std::move(p));
  return m;
}

const ScoreVector& NoiseModel::alpha() const {
  if (alpha_.empty()) throw std::invalid_argument("NoiseModel: no score vector");
  return alpha_.front();
}

const Rational& NoiseModel::p() const {
  if (p_.empty()) throw std::invalid_argument("NoiseModel: no probability parameter");
  return p_.front();
}

std::string NoiseModel::name() const {
  switch (kind_) {
    case Kind::ScoringWinner:
      return "scoring-winner";
    case Kind::ScoringRanking:
      return "scoring-ranking";
    case Kind::StvLex:
      return "stv-lex";
    case Kind::Condorcet:
      return "condorcet(" + p().to_string() + ")";
  }
  throw std::logic_error("NoiseModel::name: unreachable");
}

namespace {

void require_support(const NoiseModel& model, const Outcome& outcome) {
  if (!model.supports(outcome))
    throw std::invalid_argument("noise: outcome kind incompatible with " + model.name());
}

}  // namespace

Likelihood vote_weight(const NoiseModel& model, const Outcome& outcome, const Ranking& vote) {
  require_support(model, outcome);
  const int m = vote.size();
  switch (model.kind()) {
    case NoiseModel::Kind::ScoringWinner: {
      if (model.alpha().size() != m) throw std::invalid_argument("noise: score vector length mismatch");
      int w = outcome.winner_index();
      if (w < 0 || w >= m) throw std::invalid_argument("noise: winner index out of range");
      long long points = model.alpha().at(vote.position_of(w));
      return Likelihood::exact(Rational::pow(Rational(2), points));
    }
    case NoiseModel::Kind::ScoringRanking: {
      if (model.alpha().size() != m) throw std::invalid_argument("noise: score vector length mismatch");
      const Ranking& truth = outcome.ranking();
      if (truth.size() != m) throw std::invalid_argument("noise: outcome size mismatch");
      Rational weight(1);
      for (int i = 0; i < m; ++i) {
        long long points = model.alpha().at(vote.position_of(truth.at(i)));
        weight = weight * Rational::pow(Rational(m - i), points);
      }
      return Likelihood::exact(weight);
    }
    case NoiseModel::Kind::StvLex: {
      const Ranking& truth = outcome.ranking();
      if (truth.size() != m) throw std::invalid_argument("noise: outcome size mismatch");
      std::vector<long long> e(static_cast<size_t>(m), 0);
      for (int i = 0; i < m; ++i) {
        int c = truth.at(i);
        // delta = 1 iff everything the vote ranks above c sits below c in
        // the true ranking.
        bool delta = true;
        for (int pos = 0; pos < vote.position_of(c); ++pos) {
          if (truth.position_of(vote.at(pos)) <= i) {
            delta = false;
            break;
          }
        }
        if (delta) e[static_cast<size_t>(i)] = 1;
      }
      return Likelihood::lex(std::move(e));
    }
    case NoiseModel::Kind::Condorcet: {
      const Ranking& truth = outcome.ranking();
      if (truth.size() != m) throw std::invalid_argument("noise: outcome size mismatch");
      long long agreements = 0;
      long long pairs = 0;
      for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
          ++pairs;
          if (vote.prefers(a, b) == truth.prefers(a, b)) ++agreements;
        }
      }
      Rational q = Rational(1) - model.p();
      return Likelihood::exact(Rational::pow(model.p(), agreements) *
                               Rational::pow(q, pairs - agreements));
    }
  }
  throw std::logic_error("vote_weight: unreachable");
}

Likelihood normalizer(const NoiseModel& model, const Outcome& outcome, int m, int bound) {
  require_support(model, outcome);
  if (model.kind() == NoiseModel::Kind::StvLex)
    throw std::invalid_argument("normalizer: stv-lex has no finite normalizer");
  Rational total(0);
  for (const Ranking& vote : all_rankings(m, bound)) {
    total = total + vote_weight(model, outcome, vote).exact_value();
  }
  return Likelihood::exact(total);
}

Likelihood profile_likelihood(const NoiseModel& model, const Outcome& outcome, const Profile& p) {
  require_support(model, outcome);
  if (model.kind() == NoiseModel::Kind::StvLex) {
    std::vector<long long> total(static_cast<size_t>(p.num_candidates()), 0);
    for (const auto& g : p.groups()) {
      Likelihood w = vote_weight(model, outcome, g.ranking);
      const auto& e = w.exponents();
      for (size_t i = 0; i < e.size(); ++i) total[i] += e[i] * g.count;
    }
    return Likelihood::lex(std::move(total));
  }
  Rational total(1);
  for (const auto& g : p.groups()) {
    Rational w = vote_weight(model, outcome, g.ranking).exact_value();
    total = total * Rational::pow(w, g.count);
  }
  return Likelihood::exact(total);
}

}  // namespace votemle
