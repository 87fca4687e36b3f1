#include "votemle/rules.hpp"

#include <algorithm>
#include <map>

namespace votemle {

namespace {

// Builds tiers from per-candidate keys; smaller key means better placement.
template <typename Key>
WeakOrder weak_order_from_keys(const std::vector<Key>& keys) {
  std::map<Key, std::vector<int>> tiers;
  for (size_t c = 0; c < keys.size(); ++c) tiers[keys[c]].push_back(static_cast<int>(c));
  std::vector<std::vector<int>> out;
  out.reserve(tiers.size());
  for (auto& [k, tier] : tiers) out.push_back(std::move(tier));
  return WeakOrder(std::move(out));
}

WeakOrder strict_tiers(const std::vector<int>& order) {
  std::vector<std::vector<int>> tiers;
  tiers.reserve(order.size());
  for (int c : order) tiers.push_back({c});
  return WeakOrder(std::move(tiers));
}

struct PairItem {
  long long value;
  int a, b;
};

// Shared ranked-pairs lock procedure; items carry N(a,b) or margins, which
// sort identically for a fixed number of votes.
RuleOutcome ranked_pairs_from_items(int m, std::vector<PairItem> items) {
  std::sort(items.begin(), items.end(), [](const PairItem& x, const PairItem& y) {
    if (x.value != y.value) return x.value > y.value;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  std::vector<std::vector<bool>> adj(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(m), false));
  auto reaches = [&](int from, int to) {
    std::vector<bool> seen(static_cast<size_t>(m), false);
    std::vector<int> stack{from};
    seen[static_cast<size_t>(from)] = true;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      if (cur == to) return true;
      for (int nxt = 0; nxt < m; ++nxt) {
        if (adj[static_cast<size_t>(cur)][static_cast<size_t>(nxt)] && !seen[static_cast<size_t>(nxt)]) {
          seen[static_cast<size_t>(nxt)] = true;
          stack.push_back(nxt);
        }
      }
    }
    return false;
  };
  for (const auto& it : items) {
    if (!reaches(it.b, it.a)) adj[static_cast<size_t>(it.a)][static_cast<size_t>(it.b)] = true;
  }
  std::vector<int> indeg(static_cast<size_t>(m), 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (adj[static_cast<size_t>(a)][static_cast<size_t>(b)]) ++indeg[static_cast<size_t>(b)];
    }
  }
  std::vector<bool> placed(static_cast<size_t>(m), false);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(m));
  for (int round = 0; round < m; ++round) {
    int pick = -1;
    for (int c = 0; c < m; ++c) {
      if (!placed[static_cast<size_t>(c)] && indeg[static_cast<size_t>(c)] == 0) {
        pick = c;
        break;
      }
    }
    placed[static_cast<size_t>(pick)] = true;
    order.push_back(pick);
    for (int b = 0; b < m; ++b) {
      if (adj[static_cast<size_t>(pick)][static_cast<size_t>(b)]) --indeg[static_cast<size_t>(b)];
    }
  }
  return make_outcome(strict_tiers(order));
}

}  // namespace

ScoreVector::ScoreVector(std::vector<long long> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw std::invalid_argument("ScoreVector: empty");
  for (size_t i = 1; i < alpha_.size(); ++i) {
    if (alpha_[i - 1] < alpha_[i]) throw std::invalid_argument("ScoreVector: must be nonincreasing");
  }
}

ScoreVector ScoreVector::plurality(int m) {
  std::vector<long long> a(static_cast<size_t>(m), 0);
  a[0] = 1;
  return ScoreVector(std::move(a));
}

ScoreVector ScoreVector::borda(int m) {
  std::vector<long long> a(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) a[static_cast<size_t>(i)] = m - 1 - i;
  return ScoreVector(std::move(a));
}

ScoreVector ScoreVector::veto(int m) {
  std::vector<long long> a(static_cast<size_t>(m), 1);
  a[static_cast<size_t>(m - 1)] = 0;
  return ScoreVector(std::move(a));
}

RuleOutcome make_outcome(WeakOrder weak) {
  Ranking strict = weak.linearize_by_index();
  int winner = strict.at(0);
  return RuleOutcome{std::move(weak), std::move(strict), winner};
}

bool outcome_strict_at(const RuleOutcome& o, OutcomeLevel level) {
  if (level == OutcomeLevel::Winner) return o.weak.tiers().front().size() == 1;
  return o.weak.is_strict();
}

bool outcomes_equal_at(const RuleOutcome& a, const RuleOutcome& b, OutcomeLevel level) {
  if (level == OutcomeLevel::Winner) return a.winner == b.winner;
  return a.strict == b.strict;
}

RuleOutcome scoring(const Profile& p, const ScoreVector& alpha) {
  const int m = p.num_candidates();
  if (alpha.size() != m) throw std::invalid_argument("scoring: score vector length mismatch");
  std::vector<long long> score(static_cast<size_t>(m), 0);
  for (const auto& g : p.groups()) {
    for (int pos = 0; pos < m; ++pos) {
      score[static_cast<size_t>(g.ranking.at(pos))] += g.count * alpha.at(pos);
    }
  }
  std::vector<long long> keys(static_cast<size_t>(m));
  for (int c = 0; c < m; ++c) keys[static_cast<size_t>(c)] = -score[static_cast<size_t>(c)];
  return make_outcome(weak_order_from_keys(keys));
}

StvResult stv_detailed(const Profile& p) {
  const int m = p.num_candidates();
  if (p.num_votes() < 1) throw std::invalid_argument("stv: empty profile");
  std::vector<bool> active(static_cast<size_t>(m), true);
  std::vector<int> order(static_cast<size_t>(m), -1);
  std::vector<int> eliminated;
  bool strict = true;
  for (int round = 0; round < m - 1; ++round) {
    std::vector<long long> score(static_cast<size_t>(m), 0);
    for (const auto& g : p.groups()) {
      for (int pos = 0; pos < m; ++pos) {
        int c = g.ranking.at(pos);
        if (active[static_cast<size_t>(c)]) {
          score[static_cast<size_t>(c)] += g.count;
          break;
        }
      }
    }
    int victim = -1;
    int min_count = 0;
    for (int c = 0; c < m; ++c) {
      if (!active[static_cast<size_t>(c)]) continue;
      if (victim == -1 || score[static_cast<size_t>(c)] < score[static_cast<size_t>(victim)]) {
        victim = c;
        min_count = 1;
      } else if (score[static_cast<size_t>(c)] == score[static_cast<size_t>(victim)]) {
        ++min_count;
      }
    }
    if (min_count > 1) strict = false;
    active[static_cast<size_t>(victim)] = false;
    order[static_cast<size_t>(m - 1 - round)] = victim;
    eliminated.push_back(victim);
  }
  for (int c = 0; c < m; ++c) {
    if (active[static_cast<size_t>(c)]) order[0] = c;
  }
  return StvResult{make_outcome(strict_tiers(order)), std::move(eliminated), strict};
}

RuleOutcome stv(const Profile& p) { return stv_detailed(p).outcome; }

RuleOutcome bucklin(const Profile& p) {
  const int m = p.num_candidates();
  const long long n = p.num_votes();
  if (n < 1) throw std::invalid_argument("bucklin: empty profile");
  // cum[c][l-1] = number of votes ranking c among the top l
  std::vector<std::vector<long long>> cum(static_cast<size_t>(m), std::vector<long long>(static_cast<size_t>(m), 0));
  for (const auto& g : p.groups()) {
    for (int pos = 0; pos < m; ++pos) {
      cum[static_cast<size_t>(g.ranking.at(pos))][static_cast<size_t>(pos)] += g.count;
    }
  }
  for (int c = 0; c < m; ++c) {
    for (int l = 1; l < m; ++l) {
      cum[static_cast<size_t>(c)][static_cast<size_t>(l)] += cum[static_cast<size_t>(c)][static_cast<size_t>(l - 1)];
    }
  }
  // Key: (first l passing the majority post, votes past the post negated).
  std::vector<std::pair<long long, long long>> keys(static_cast<size_t>(m));
  for (int c = 0; c < m; ++c) {
    for (int l = 1; l <= m; ++l) {
      long long b = cum[static_cast<size_t>(c)][static_cast<size_t>(l - 1)];
      if (2 * b > n) {
        keys[static_cast<size_t>(c)] = {l, -b};
        break;
      }
    }
  }
  return make_outcome(weak_order_from_keys(keys));
}

RuleOutcome maximin(const Profile& p) {
  const int m = p.num_candidates();
  if (m == 1) return make_outcome(strict_tiers({0}));
  PairwiseMatrix pm = pairwise_matrix(p);
  std::vector<long long> keys(static_cast<size_t>(m));
  for (int c = 0; c < m; ++c) {
    long long worst = 0;
    bool first = true;
    for (int o = 0; o < m; ++o) {
      if (o == c) continue;
      long long v = pm.count(c, o);
      if (first || v < worst) worst = v;
      first = false;
    }
    keys[static_cast<size_t>(c)] = -worst;
  }
  return make_outcome(weak_order_from_keys(keys));
}

RuleOutcome maximin_on_margins(const MarginGraph& g) {
  const int m = g.num_candidates();
  if (m == 1) return make_outcome(strict_tiers({0}));
  std::vector<long long> keys(static_cast<size_t>(m));
  for (int c = 0; c < m; ++c) {
    long long worst = 0;
    bool first = true;
    for (int o = 0; o < m; ++o) {
      if (o == c) continue;
      long long v = g.weight(c, o);
      if (first || v < worst) worst = v;
      first = false;
    }
    keys[static_cast<size_t>(c)] = -worst;
  }
  return make_outcome(weak_order_from_keys(keys));
}

namespace {

RuleOutcome copeland_from_sign(int m, const std::function<long long(int, int)>& margin) {
  std::vector<long long> keys(static_cast<size_t>(m));
  for (int c = 0; c < m; ++c) {
    long long score = 0;
    for (int o = 0; o < m; ++o) {
      if (o == c) continue;
      long long w = margin(c, o);
      if (w > 0) ++score;
      if (w < 0) --score;
    }
    keys[static_cast<size_t>(c)] = -score;
  }
  return make_outcome(weak_order_from_keys(keys));
}

}  // namespace

RuleOutcome copeland(const Profile& p) {
  PairwiseMatrix pm = pairwise_matrix(p);
  return copeland_from_sign(p.num_candidates(),
                            [&](int a, int b) { return pm.count(a, b) - pm.count(b, a); });
}

RuleOutcome copeland_on_margins(const MarginGraph& g) {
  return copeland_from_sign(g.num_candidates(), [&](int a, int b) { return g.weight(a, b); });
}

RuleOutcome ranked_pairs(const Profile& p) {
  const int m = p.num_candidates();
  if (m == 1) return make_outcome(strict_tiers({0}));
  PairwiseMatrix pm = pairwise_matrix(p);
  std::vector<PairItem> items;
  items.reserve(static_cast<size_t>(m) * static_cast<size_t>(m - 1));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b) items.push_back({pm.count(a, b), a, b});
    }
  }
  return ranked_pairs_from_items(m, std::move(items));
}

RuleOutcome ranked_pairs_on_margins(const MarginGraph& g) {
  const int m = g.num_candidates();
  if (m == 1) return make_outcome(strict_tiers({0}));
  std::vector<PairItem> items;
  items.reserve(static_cast<size_t>(m) * static_cast<size_t>(m - 1));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b) items.push_back({g.weight(a, b), a, b});
    }
  }
  return ranked_pairs_from_items(m, std::move(items));
}

namespace {

bool all_values_distinct(int m, const std::function<long long(int, int)>& value) {
  std::vector<long long> vals;
  vals.reserve(static_cast<size_t>(m) * static_cast<size_t>(m - 1));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b) vals.push_back(value(a, b));
    }
  }
  std::sort(vals.begin(), vals.end());
  return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

}  // namespace

bool ranked_pairs_tie_free(const PairwiseMatrix& pm) {
  return all_values_distinct(pm.num_candidates(), [&](int a, int b) { return pm.count(a, b); });
}

bool ranked_pairs_tie_free(const MarginGraph& g) {
  return all_values_distinct(g.num_candidates(), [&](int a, int b) { return g.weight(a, b); });
}

KemenyResult kemeny(const Profile& p, int bound) {
  const int m = p.num_candidates();
  PairwiseMatrix pm = pairwise_matrix(p);
  KemenyResult result{{}, 0};
  bool first = true;
  for (const Ranking& r : all_rankings(m, bound)) {
    long long agreement = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        agreement += pm.count(r.at(i), r.at(j));
      }
    }
    if (first || agreement > result.agreement) {
      result.agreement = agreement;
      result.optimal.clear();
      first = false;
    }
    if (agreement == result.agreement) result.optimal.push_back(r);
  }
  return result;
}

RuleOutcome hybrid(const Profile& p, const RuleFn& winner_rule, const RuleFn& rest_rule) {
  if (p.num_votes() < 1) throw std::invalid_argument("hybrid: empty profile");
  const int m = p.num_candidates();
  if (m == 1) return make_outcome(strict_tiers({0}));
  int winner = winner_rule(p).winner;
  RuleOutcome rest = rest_rule(remove_candidate(p, winner));
  std::vector<std::vector<int>> tiers;
  tiers.push_back({winner});
  for (const auto& tier : rest.weak.tiers()) {
    std::vector<int> mapped;
    mapped.reserve(tier.size());
    for (int c : tier) mapped.push_back(c < winner ? c : c + 1);
    tiers.push_back(std::move(mapped));
  }
  return make_outcome(WeakOrder(std::move(tiers)));
}

RuleSpec RuleSpec::scoring(std::vector<long long> alpha) {
  ScoreVector check(alpha);  // validates shape
  RuleSpec spec(Kind::Scoring);
  spec.explicit_alpha_ = std::move(alpha);
  return spec;
}

RuleSpec RuleSpec::hybrid(RuleSpec winner_rule, RuleSpec rest_rule) {
  RuleSpec spec(Kind::Hybrid);
  spec.winner_rule_ = std::make_shared<const RuleSpec>(std::move(winner_rule));
  spec.rest_rule_ = std::make_shared<const RuleSpec>(std::move(rest_rule));
  return spec;
}

ScoreVector RuleSpec::alpha_for(int m) const {
  switch (kind_) {
    case Kind::Plurality:
      return ScoreVector::plurality(m);
    case Kind::Borda:
      return ScoreVector::borda(m);
    case Kind::Veto:
      return ScoreVector::veto(m);
    case Kind::Scoring:
      return ScoreVector(*explicit_alpha_);
    default:
      throw std::invalid_argument("alpha_for: not a scoring rule");
  }
}

RuleOutcome RuleSpec::apply(const Profile& p) const {
  switch (kind_) {
    case Kind::Plurality:
    case Kind::Borda:
    case Kind::Veto:
    case Kind::Scoring:
      return votemle::scoring(p, alpha_for(p.num_candidates()));
    case Kind::Stv:
      return votemle::stv(p);
    case Kind::Bucklin:
      return votemle::bucklin(p);
    case Kind::Maximin:
      return votemle::maximin(p);
    case Kind::Copeland:
      return votemle::copeland(p);
    case Kind::RankedPairs:
      return votemle::ranked_pairs(p);
    case Kind::Hybrid:
      return votemle::hybrid(
          p, [this](const Profile& q) { return winner_rule_->apply(q); },
          [this](const Profile& q) { return rest_rule_->apply(q); });
  }
  throw std::logic_error("RuleSpec::apply: unreachable");
}

RuleOutcome RuleSpec::apply_on_margins(const MarginGraph& g) const {
  switch (kind_) {
    case Kind::Maximin:
      return maximin_on_margins(g);
    case Kind::Copeland:
      return copeland_on_margins(g);
    case Kind::RankedPairs:
      return ranked_pairs_on_margins(g);
    default:
      throw std::invalid_argument("apply_on_margins: rule is not margin-determined");
  }
}

std::string RuleSpec::name() const {
  switch (kind_) {
    case Kind::Plurality:
      return "plurality";
    case Kind::Borda:
      return "borda";
    case Kind::Veto:
      return "veto";
    case Kind::Scoring: {
      std::string out = "scoring(";
      for (size_t i = 0; i < explicit_alpha_->size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string((*explicit_alpha_)[i]);
      }
      return out + ")";
    }
    case Kind::Stv:
      return "stv";
    case Kind::Bucklin:
      return "bucklin";
    case Kind::Maximin:
      return "maximin";
    case Kind::Copeland:
      return "copeland";
    case Kind::RankedPairs:
      return "ranked-pairs";
    case Kind::Hybrid:
      return "hybrid(" + winner_rule_->name() + ";" + rest_rule_->name() + ")";
  }
  throw std::logic_error("RuleSpec::name: unreachable");
}

RuleSpec make_rule(const std::string& name, const std::optional<std::vector<long long>>& alpha,
                   const std::optional<std::string>& winner_rule,
                   const std::optional<std::string>& rest_rule) {
  if (name == "plurality") return RuleSpec::plurality();
  if (name == "borda") return RuleSpec::borda();
  if (name == "veto") return RuleSpec::veto();
  if (name == "stv") return RuleSpec::stv();
  if (name == "bucklin") return RuleSpec::bucklin();
  if (name == "maximin") return RuleSpec::maximin();
  if (name == "copeland") return RuleSpec::copeland();
  if (name == "ranked-pairs") return RuleSpec::ranked_pairs();
  if (name == "scoring") {
    if (!alpha) throw std::invalid_argument("rule 'scoring' needs a score vector");
    return RuleSpec::scoring(*alpha);
  }
  if (name == "hybrid") {
    if (!winner_rule || !rest_rule)
      throw std::invalid_argument("rule 'hybrid' needs winner and rest component rules");
    return RuleSpec::hybrid(make_rule(*winner_rule, alpha), make_rule(*rest_rule, alpha));
  }
  throw std::invalid_argument("unknown rule '" + name + "'");
}

std::vector<std::string> RuleSpec::score_labels(const Profile& p) const {
  const int m = p.num_candidates();
  const auto& cs = p.candidates();
  std::vector<std::string> out;
  switch (kind_) {
    case Kind::Plurality:
    case Kind::Borda:
    case Kind::Veto:
    case Kind::Scoring: {
      ScoreVector alpha = alpha_for(m);
      std::vector<long long> score(static_cast<size_t>(m), 0);
      for (const auto& g : p.groups()) {
        for (int pos = 0; pos < m; ++pos) score[static_cast<size_t>(g.ranking.at(pos))] += g.count * alpha.at(pos);
      }
      for (int c = 0; c < m; ++c) out.push_back(cs.name(c) + "=" + std::to_string(score[static_cast<size_t>(c)]));
      return out;
    }
    case Kind::Maximin: {
      if (m == 1) return {cs.name(0) + "=0"};
      PairwiseMatrix pm = pairwise_matrix(p);
      for (int c = 0; c < m; ++c) {
        long long worst = 0;
        bool first = true;
        for (int o = 0; o < m; ++o) {
          if (o == c) continue;
          long long v = pm.count(c, o);
          if (first || v < worst) worst = v;
          first = false;
        }
        out.push_back(cs.name(c) + "=" + std::to_string(worst));
      }
      return out;
    }
    case Kind::Copeland: {
      PairwiseMatrix pm = pairwise_matrix(p);
      for (int c = 0; c < m; ++c) {
        long long score = 0;
        for (int o = 0; o < m; ++o) {
          if (o == c) continue;
          long long w = pm.count(c, o) - pm.count(o, c);
          if (w > 0) ++score;
          if (w < 0) --score;
        }
        out.push_back(cs.name(c) + "=" + std::to_string(score));
      }
      return out;
    }
    case Kind::Bucklin: {
      const long long n = p.num_votes();
      if (n < 1) return {};
      std::vector<std::vector<long long>> cum(static_cast<size_t>(m),
                                              std::vector<long long>(static_cast<size_t>(m), 0));
      for (const auto& g : p.groups()) {
        for (int pos = 0; pos < m; ++pos) cum[static_cast<size_t>(g.ranking.at(pos))][static_cast<size_t>(pos)] += g.count;
      }
      for (int c = 0; c < m; ++c) {
        long long running = 0;
        for (int l = 1; l <= m; ++l) {
          running += cum[static_cast<size_t>(c)][static_cast<size_t>(l - 1)];
          if (2 * running > n) {
            out.push_back(cs.name(c) + "=" + std::to_string(l) + "(" + std::to_string(running) + ")");
            break;
          }
        }
      }
      return out;
    }
    default:
      return {};
  }
}

}  // namespace votemle
