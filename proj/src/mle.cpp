#include "votemle/mle.hpp"

#include <algorithm>

namespace votemle {

WinnerMle mle_winners_detailed(const NoiseModel& model, const Profile& p) {
  if (!model.supports_winner_outcomes())
    throw std::invalid_argument("mle_winners: model does not rank winners");
  const int m = p.num_candidates();
  WinnerMle out;
  out.per_candidate.reserve(static_cast<size_t>(m));
  for (int c = 0; c < m; ++c) {
    out.per_candidate.push_back(profile_likelihood(model, Outcome::winner(c), p));
  }
  for (int c = 0; c < m; ++c) {
    int cmp = out.winners.empty() ? 1 : out.per_candidate[static_cast<size_t>(c)].compare(
                                            out.per_candidate[static_cast<size_t>(out.winners.front())]);
    if (cmp > 0) out.winners.clear();
    if (cmp >= 0) out.winners.push_back(c);
  }
  return out;
}

std::vector<int> mle_winners(const NoiseModel& model, const Profile& p) {
  return mle_winners_detailed(model, p).winners;
}

RankingMle mle_rankings_detailed(const NoiseModel& model, const Profile& p, int bound) {
  if (!model.supports_ranking_outcomes())
    throw std::invalid_argument("mle_rankings: model does not rank rankings");
  const int m = p.num_candidates();
  std::optional<Likelihood> best;
  std::vector<Ranking> argmax;
  for (const Ranking& r : all_rankings(m, bound)) {
    Likelihood l = profile_likelihood(model, Outcome::ranking(r), p);
    int cmp = best ? l.compare(*best) : 1;
    if (cmp > 0) {
      best = l;
      argmax.clear();
    }
    if (cmp >= 0) argmax.push_back(r);
  }
  return RankingMle{std::move(argmax), *best};
}

std::vector<Ranking> mle_rankings(const NoiseModel& model, const Profile& p, int bound) {
  return mle_rankings_detailed(model, p, bound).rankings;
}

std::vector<int> top_score_candidates(const Profile& p, const ScoreVector& alpha) {
  const int m = p.num_candidates();
  if (alpha.size() != m) throw std::invalid_argument("top_score_candidates: length mismatch");
  std::vector<long long> score(static_cast<size_t>(m), 0);
  for (const auto& g : p.groups()) {
    for (int pos = 0; pos < m; ++pos) score[static_cast<size_t>(g.ranking.at(pos))] += g.count * alpha.at(pos);
  }
  long long best = *std::max_element(score.begin(), score.end());
  std::vector<int> out;
  for (int c = 0; c < m; ++c) {
    if (score[static_cast<size_t>(c)] == best) out.push_back(c);
  }
  return out;
}

std::vector<Ranking> score_sorted_orders(const Profile& p, const ScoreVector& alpha, int bound) {
  const int m = p.num_candidates();
  if (alpha.size() != m) throw std::invalid_argument("score_sorted_orders: length mismatch");
  std::vector<long long> score(static_cast<size_t>(m), 0);
  for (const auto& g : p.groups()) {
    for (int pos = 0; pos < m; ++pos) score[static_cast<size_t>(g.ranking.at(pos))] += g.count * alpha.at(pos);
  }
  std::vector<Ranking> out;
  for (const Ranking& r : all_rankings(m, bound)) {
    bool sorted = true;
    for (int i = 0; i + 1 < m; ++i) {
      if (score[static_cast<size_t>(r.at(i))] < score[static_cast<size_t>(r.at(i + 1))]) {
        sorted = false;
        break;
      }
    }
    if (sorted) out.push_back(r);
  }
  return out;
}

namespace {

std::string describe_profile(const Profile& p) { return render_profile(p); }

bool same_ranking_set(const std::vector<Ranking>& a, const std::vector<Ranking>& b) {
  if (a.size() != b.size()) return false;
  std::vector<Ranking> sa = a;
  std::vector<Ranking> sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

}  // namespace

EquivalenceReport mle_equivalence_report(const EquivalenceConfig& config) {
  EquivalenceReport report;
  SplitMix64 rng(config.seed);
  const bool scoring_pairing = config.pairing == EquivalencePairing::ScoringWinnerVsTopScores ||
                               config.pairing == EquivalencePairing::ScoringRankingVsScoreOrder;
  Rational p = config.condorcet_p.value_or(Rational(3, 5));
  long long draws_left = config.trials * 1000 + 1000;  // redraw guard for the stv pairing

  for (long long t = 0; t < config.trials && draws_left-- > 0; ++t) {
    int m = static_cast<int>(rng.range(config.bounds.m_min, config.bounds.m_max));
    long long n = rng.range(config.bounds.n_min, config.bounds.n_max);
    Profile profile = random_profile(m, n, rng);

    std::vector<ScoreVector> alphas;
    if (scoring_pairing) {
      if (config.fixed_alpha) {
        alphas.push_back(ScoreVector(*config.fixed_alpha));
      } else {
        alphas.push_back(ScoreVector::plurality(m));
        alphas.push_back(ScoreVector::borda(m));
        alphas.push_back(ScoreVector::veto(m));
        alphas.push_back(random_score_vector(m, 2 * m, rng));
      }
    }

    ++report.trials;
    bool ok = true;
    std::string detail;

    switch (config.pairing) {
      case EquivalencePairing::ScoringWinnerVsTopScores: {
        for (const auto& alpha : alphas) {
          auto got = mle_winners(NoiseModel::scoring_winner(alpha), profile);
          auto want = top_score_candidates(profile, alpha);
          if (got != want) {
            ok = false;
            detail = "winner argmax mismatch";
            break;
          }
        }
        break;
      }
      case EquivalencePairing::ScoringRankingVsScoreOrder: {
        for (const auto& alpha : alphas) {
          auto got = mle_rankings(NoiseModel::scoring_ranking(alpha), profile);
          auto want = score_sorted_orders(profile, alpha);
          if (!same_ranking_set(got, want)) {
            ok = false;
            detail = "ranking argmax mismatch";
            break;
          }
        }
        break;
      }
      case EquivalencePairing::StvLexVsStv: {
        StvResult s = stv_detailed(profile);
        if (!s.strict_eliminations) {
          --report.trials;  // does not count toward the quota
          ++report.skipped;
          --t;  // redraw so the requested number of strict trials is met
          continue;
        }
        auto got = mle_rankings(NoiseModel::stv_lex(), profile);
        if (got.size() != 1 || !(got.front() == s.outcome.strict)) {
          ok = false;
          detail = "stv-lex argmax is not the stv ranking";
        }
        break;
      }
      case EquivalencePairing::CondorcetVsKemeny: {
        auto got = mle_rankings(NoiseModel::condorcet(p), profile);
        auto want = kemeny(profile).optimal;
        if (!same_ranking_set(got, want)) {
          ok = false;
          detail = "condorcet argmax differs from kemeny set";
        }
        break;
      }
    }

    if (ok) {
      ++report.passes;
    } else {
      ++report.failures;
      if (!report.first_failure) {
        report.first_failure = profile;
        report.detail = detail + "\n" + describe_profile(profile);
      }
    }
  }
  return report;
}

}  // namespace votemle
