#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace votemle {

// Ballot-text or margin-text errors, carrying the 1-based source line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Ordered set of distinct candidate labels; candidates are index 0..m-1.
class CandidateSet {
 public:
  explicit CandidateSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view label) const;

  bool operator==(const CandidateSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

// Labels a, b, ..., z for m <= 26, else c1..cm.
std::vector<std::string> default_labels(int m);

// Strict total order over candidate indices; position 0 is most preferred.
class Ranking {
 public:
  explicit Ranking(std::vector<int> order);
  static Ranking identity(int m);

  int size() const { return static_cast<int>(order_.size()); }
  int at(int pos) const { return order_.at(static_cast<size_t>(pos)); }
  int position_of(int candidate) const { return pos_.at(static_cast<size_t>(candidate)); }
  bool prefers(int a, int b) const { return position_of(a) < position_of(b); }
  const std::vector<int>& order() const { return order_; }

  bool operator==(const Ranking& other) const { return order_ == other.order_; }
  std::strong_ordering operator<=>(const Ranking& other) const { return order_ <=> other.order_; }

 private:
  std::vector<int> order_;
  std::vector<int> pos_;
};

struct VoteGroup {
  Ranking ranking;
  long long count;  // multiplicity, always >= 1
};

// Multiset of rankings over a fixed candidate set. Immutable after construction.
class Profile {
 public:
  Profile(CandidateSet candidates, std::vector<VoteGroup> groups);

  const CandidateSet& candidates() const { return candidates_; }
  int num_candidates() const { return candidates_.size(); }
  long long num_votes() const { return total_; }
  const std::vector<VoteGroup>& groups() const { return groups_; }

  // Equal rankings merged (counts summed), groups sorted by ranking.
  Profile canonical() const;

  // Multiset union; candidate sets must match exactly.
  static Profile combine(const Profile& a, const Profile& b);

  // Multiset equality (labels plus canonicalized vote groups).
  bool operator==(const Profile& other) const;

 private:
  CandidateSet candidates_;
  std::vector<VoteGroup> groups_;
  long long total_ = 0;
};

// Ballot text format:
//   # comment
//   candidates: a,b,c
//   3: c>a>b
Profile parse_profile(std::string_view text);
std::string render_profile(const Profile& p);

// Renders one ranking as "a>b>c" using the profile's labels.
std::string render_ranking(const CandidateSet& cs, const Ranking& r);

// Pairwise tallies: count(a,b) = number of votes ranking a above b.
class PairwiseMatrix {
 public:
  PairwiseMatrix(int m, long long n)
      : m_(m), n_(n), counts_(static_cast<size_t>(m) * static_cast<size_t>(m), 0) {}

  int num_candidates() const { return m_; }
  long long num_votes() const { return n_; }
  long long count(int a, int b) const { return counts_[idx(a, b)]; }
  void add(int a, int b, long long c) { counts_[idx(a, b)] += c; }

 private:
  size_t idx(int a, int b) const { return static_cast<size_t>(a) * static_cast<size_t>(m_) + static_cast<size_t>(b); }
  int m_;
  long long n_;
  std::vector<long long> counts_;
};

PairwiseMatrix pairwise_matrix(const Profile& p);

// Antisymmetric margins: weight(a,b) = count(a,b) - count(b,a).
class MarginGraph {
 public:
  explicit MarginGraph(int m) : m_(m), w_(static_cast<size_t>(m) * static_cast<size_t>(m), 0) {}

  int num_candidates() const { return m_; }
  long long weight(int a, int b) const { return w_[idx(a, b)]; }
  void set_weight(int a, int b, long long w) {
    if (a == b) throw std::invalid_argument("MarginGraph: no self edges");
    w_[idx(a, b)] = w;
    w_[idx(b, a)] = -w;
  }

  static MarginGraph sum(const MarginGraph& a, const MarginGraph& b);

  bool operator==(const MarginGraph& other) const { return m_ == other.m_ && w_ == other.w_; }

 private:
  size_t idx(int a, int b) const { return static_cast<size_t>(a) * static_cast<size_t>(m_) + static_cast<size_t>(b); }
  int m_;
  std::vector<long long> w_;
};

MarginGraph margins(const PairwiseMatrix& pm);

// Tiers of candidates, best first; candidates within a tier are tied.
class WeakOrder {
 public:
  explicit WeakOrder(std::vector<std::vector<int>> tiers);

  const std::vector<std::vector<int>>& tiers() const { return tiers_; }
  int num_candidates() const { return m_; }
  bool is_strict() const;
  int tier_of(int candidate) const;
  Ranking linearize_by_index() const;

  bool operator==(const WeakOrder& other) const { return tiers_ == other.tiers_; }

 private:
  std::vector<std::vector<int>> tiers_;
  int m_ = 0;
};

// Relabels candidates: sigma[old] = new index. Labels keep their positions,
// so this permutes which label each vote position refers to.
Profile relabel_profile(const Profile& p, const std::vector<int>& sigma);
WeakOrder relabel_weak_order(const WeakOrder& w, const std::vector<int>& sigma);
Ranking relabel_ranking(const Ranking& r, const std::vector<int>& sigma);

// Deletes one candidate from every vote; remaining candidates are reindexed
// densely with label order preserved.
Profile remove_candidate(const Profile& p, int candidate);

// Permutation enumeration cap for Kemeny, ranking MLE, and normalizers.
inline constexpr int kEnumerationBound = 8;

// All rankings of m candidates in lexicographic order. Throws above the bound.
std::vector<Ranking> all_rankings(int m, int bound = kEnumerationBound);

}  // namespace votemle
