#include "votemle/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace votemle {

namespace {

std::string_view trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (c == ',' || c == '>' || c == ':' || c == '#') return false;
  }
  return true;
}

}  // namespace

CandidateSet::CandidateSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("CandidateSet: need at least one candidate");
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!valid_label(n)) throw std::invalid_argument("CandidateSet: bad label '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("CandidateSet: duplicate label '" + n + "'");
  }
}

std::optional<int> CandidateSet::index_of(std::string_view label) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::vector<std::string> default_labels(int m) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (m <= 26) {
      out.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
      out.push_back("c" + std::to_string(i + 1));
    }
  }
  return out;
}

Ranking::Ranking(std::vector<int> order) : order_(std::move(order)) {
  const int m = static_cast<int>(order_.size());
  if (m == 0) throw std::invalid_argument("Ranking: empty");
  pos_.assign(static_cast<size_t>(m), -1);
  for (int p = 0; p < m; ++p) {
    int c = order_[static_cast<size_t>(p)];
    if (c < 0 || c >= m || pos_[static_cast<size_t>(c)] != -1)
      throw std::invalid_argument("Ranking: not a permutation");
    pos_[static_cast<size_t>(c)] = p;
  }
}

Ranking Ranking::identity(int m) {
  std::vector<int> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  return Ranking(std::move(order));
}

Profile::Profile(CandidateSet candidates, std::vector<VoteGroup> groups)
    : candidates_(std::move(candidates)), groups_(std::move(groups)) {
  const int m = candidates_.size();
  for (const auto& g : groups_) {
    if (g.ranking.size() != m) throw std::invalid_argument("Profile: ranking size mismatch");
    if (g.count < 1) throw std::invalid_argument("Profile: multiplicity must be positive");
    total_ += g.count;
  }
}

Profile Profile::canonical() const {
  std::map<Ranking, long long> merged;
  for (const auto& g : groups_) merged[g.ranking] += g.count;
  std::vector<VoteGroup> out;
  out.reserve(merged.size());
  for (auto& [r, c] : merged) out.push_back({r, c});
  return Profile(candidates_, std::move(out));
}

Profile Profile::combine(const Profile& a, const Profile& b) {
  if (!(a.candidates_ == b.candidates_))
    throw std::invalid_argument("Profile::combine: candidate sets differ");
  std::vector<VoteGroup> groups = a.groups_;
  groups.insert(groups.end(), b.groups_.begin(), b.groups_.end());
  return Profile(a.candidates_, std::move(groups));
}

bool Profile::operator==(const Profile& other) const {
  if (!(candidates_ == other.candidates_)) return false;
  Profile lhs = canonical();
  Profile rhs = other.canonical();
  if (lhs.groups_.size() != rhs.groups_.size()) return false;
  for (size_t i = 0; i < lhs.groups_.size(); ++i) {
    if (!(lhs.groups_[i].ranking == rhs.groups_[i].ranking)) return false;
    if (lhs.groups_[i].count != rhs.groups_[i].count) return false;
  }
  return true;
}

Profile parse_profile(std::string_view text) {
  std::optional<CandidateSet> cs;
  std::vector<VoteGroup> groups;
  int lineno = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    std::string_view raw = nl == std::string_view::npos ? text.substr(start)
                                                        : text.substr(start, nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!cs) {
      constexpr std::string_view kHeader = "candidates:";
      if (line.substr(0, kHeader.size()) != kHeader)
        throw ParseError(lineno, "expected 'candidates: <labels>'");
      std::vector<std::string> names;
      for (auto part : split(line.substr(kHeader.size()), ',')) {
        auto t = trim(part);
        if (!valid_label(t)) throw ParseError(lineno, "bad candidate label '" + std::string(t) + "'");
        names.emplace_back(t);
      }
      for (size_t i = 0; i < names.size(); ++i) {
        for (size_t j = i + 1; j < names.size(); ++j) {
          if (names[i] == names[j]) throw ParseError(lineno, "duplicate candidate label '" + names[i] + "'");
        }
      }
      cs.emplace(std::move(names));
      continue;
    }

    size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(lineno, "expected '<count>: <ranking>'");
    std::string_view count_part = trim(line.substr(0, colon));
    if (count_part.empty()) throw ParseError(lineno, "missing vote count");
    long long count = 0;
    for (char c : count_part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(lineno, "bad vote count");
      count = count * 10 + (c - '0');
      if (count > (1LL << 50)) throw ParseError(lineno, "vote count too large");
    }
    if (count < 1) throw ParseError(lineno, "vote count must be positive");

    const int m = cs->size();
    std::vector<int> order;
    std::vector<bool> seen(static_cast<size_t>(m), false);
    for (auto part : split(line.substr(colon + 1), '>')) {
      auto t = trim(part);
      auto idx = cs->index_of(t);
      if (!idx) throw ParseError(lineno, "unknown candidate '" + std::string(t) + "'");
      if (seen[static_cast<size_t>(*idx)])
        throw ParseError(lineno, "duplicate candidate '" + std::string(t) + "' in vote");
      seen[static_cast<size_t>(*idx)] = true;
      order.push_back(*idx);
    }
    if (static_cast<int>(order.size()) != m) throw ParseError(lineno, "vote must rank all candidates");
    groups.push_back({Ranking(std::move(order)), count});
  }
  if (!cs) throw ParseError(lineno, "missing 'candidates:' header");
  return Profile(std::move(*cs), std::move(groups));
}

std::string render_ranking(const CandidateSet& cs, const Ranking& r) {
  std::string out;
  for (int p = 0; p < r.size(); ++p) {
    if (p > 0) out += ">";
    out += cs.name(r.at(p));
  }
  return out;
}

std::string render_profile(const Profile& p) {
  Profile canon = p.canonical();
  std::string out = "candidates: ";
  for (int i = 0; i < canon.num_candidates(); ++i) {
    if (i > 0) out += ",";
    out += canon.candidates().name(i);
  }
  out += "\n";
  for (const auto& g : canon.groups()) {
    out += std::to_string(g.count) + ": " + render_ranking(canon.candidates(), g.ranking) + "\n";
  }
  return out;
}

PairwiseMatrix pairwise_matrix(const Profile& p) {
  const int m = p.num_candidates();
  PairwiseMatrix pm(m, p.num_votes());
  for (const auto& g : p.groups()) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        pm.add(g.ranking.at(i), g.ranking.at(j), g.count);
      }
    }
  }
  return pm;
}

MarginGraph MarginGraph::sum(const MarginGraph& a, const MarginGraph& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("MarginGraph::sum: size mismatch");
  MarginGraph out(a.m_);
  for (size_t i = 0; i < out.w_.size(); ++i) out.w_[i] = a.w_[i] + b.w_[i];
  return out;
}

MarginGraph margins(const PairwiseMatrix& pm) {
  const int m = pm.num_candidates();
  MarginGraph g(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      g.set_weight(a, b, pm.count(a, b) - pm.count(b, a));
    }
  }
  return g;
}

WeakOrder::WeakOrder(std::vector<std::vector<int>> tiers) : tiers_(std::move(tiers)) {
  for (auto& tier : tiers_) {
    if (tier.empty()) throw std::invalid_argument("WeakOrder: empty tier");
    std::sort(tier.begin(), tier.end());
    m_ += static_cast<int>(tier.size());
  }
  std::vector<bool> seen(static_cast<size_t>(m_), false);
  for (const auto& tier : tiers_) {
    for (int c : tier) {
      if (c < 0 || c >= m_ || seen[static_cast<size_t>(c)])
        throw std::invalid_argument("WeakOrder: tiers must partition candidates");
      seen[static_cast<size_t>(c)] = true;
    }
  }
}

bool WeakOrder::is_strict() const {
  for (const auto& tier : tiers_) {
    if (tier.size() != 1) return false;
  }
  return true;
}

int WeakOrder::tier_of(int candidate) const {
  for (size_t t = 0; t < tiers_.size(); ++t) {
    for (int c : tiers_[t]) {
      if (c == candidate) return static_cast<int>(t);
    }
  }
  throw std::invalid_argument("WeakOrder: candidate out of range");
}

Ranking WeakOrder::linearize_by_index() const {
  std::vector<int> order;
  order.reserve(static_cast<size_t>(m_));
  for (const auto& tier : tiers_) {
    for (int c : tier) order.push_back(c);  // tiers are kept sorted ascending
  }
  return Ranking(std::move(order));
}

Ranking relabel_ranking(const Ranking& r, const std::vector<int>& sigma) {
  std::vector<int> order(static_cast<size_t>(r.size()));
  for (int p = 0; p < r.size(); ++p) order[static_cast<size_t>(p)] = sigma.at(static_cast<size_t>(r.at(p)));
  return Ranking(std::move(order));
}

Profile relabel_profile(const Profile& p, const std::vector<int>& sigma) {
  std::vector<VoteGroup> groups;
  groups.reserve(p.groups().size());
  for (const auto& g : p.groups()) groups.push_back({relabel_ranking(g.ranking, sigma), g.count});
  return Profile(p.candidates(), std::move(groups));
}

WeakOrder relabel_weak_order(const WeakOrder& w, const std::vector<int>& sigma) {
  std::vector<std::vector<int>> tiers;
  tiers.reserve(w.tiers().size());
  for (const auto& tier : w.tiers()) {
    std::vector<int> nt;
    nt.reserve(tier.size());
    for (int c : tier) nt.push_back(sigma.at(static_cast<size_t>(c)));
    tiers.push_back(std::move(nt));
  }
  return WeakOrder(std::move(tiers));
}

Profile remove_candidate(const Profile& p, int candidate) {
  const int m = p.num_candidates();
  if (m < 2) throw std::invalid_argument("remove_candidate: need at least two candidates");
  if (candidate < 0 || candidate >= m) throw std::invalid_argument("remove_candidate: out of range");
  std::vector<std::string> names;
  std::vector<int> remap(static_cast<size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    if (i == candidate) continue;
    remap[static_cast<size_t>(i)] = static_cast<int>(names.size());
    names.push_back(p.candidates().name(i));
  }
  std::vector<VoteGroup> groups;
  groups.reserve(p.groups().size());
  for (const auto& g : p.groups()) {
    std::vector<int> order;
    order.reserve(static_cast<size_t>(m - 1));
    for (int pos = 0; pos < m; ++pos) {
      int c = g.ranking.at(pos);
      if (c != candidate) order.push_back(remap[static_cast<size_t>(c)]);
    }
    groups.push_back({Ranking(std::move(order)), g.count});
  }
  return Profile(CandidateSet(std::move(names)), std::move(groups));
}

std::vector<Ranking> all_rankings(int m, int bound) {
  if (m < 1) throw std::invalid_argument("all_rankings: need m >= 1");
  if (m > bound) throw std::invalid_argument("all_rankings: " + std::to_string(m) +
                                             " candidates exceeds enumeration bound " + std::to_string(bound));
  std::vector<int> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Ranking> out;
  do {
    out.push_back(Ranking(order));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace votemle
