#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "votemle/noise.hpp"
#include "votemle/rules.hpp"
#include "votemle/synth.hpp"

namespace votemle {

// A verified reinforcement violation: the rule produces the same tie-free
// outcome on both profiles but a different one on their union, which rules
// out any i.i.d. maximum-likelihood interpretation at that outcome level.
struct ViolationCertificate {
  Profile v1;
  Profile v2;
  OutcomeLevel level;
  Outcome outcome_v1;
  Outcome outcome_v2;
  Outcome outcome_combined;
  bool strict_v1 = false;
  bool strict_v2 = false;
  bool strict_combined = false;
};

// Runs the rule on v1, v2 and v1+v2. Returns a certificate iff the outcomes
// at the requested level agree on v1 and v2, differ on the union, and all
// three are tie-free at that level. Ranked pairs additionally requires every
// pairwise count within each of the three profiles to be distinct, so the
// certificate holds under any lock-order tie-breaking.
std::optional<ViolationCertificate> check_violation(const RuleSpec& rule, OutcomeLevel level,
                                                    const Profile& v1, const Profile& v2);

enum class SearchStrategy { Profiles, Margins };

struct SearchOptions {
  OutcomeLevel level = OutcomeLevel::Ranking;
  SearchStrategy strategy = SearchStrategy::Profiles;
  int num_candidates = 3;
  long long max_votes = 4;        // per side, profile-space
  long long max_weight = 6;       // absolute margin bound, margin-space
  bool exhaustive = false;        // profile-space only
  long long budget = 200000;      // pairs examined (profiles) or graphs drawn (margins)
  uint64_t seed = 1;
};

struct SearchResult {
  std::optional<ViolationCertificate> certificate;
  long long steps = 0;       // pairs examined or graphs drawn
  bool exhausted_space = false;  // profile-space exhaustive scan completed
};

// Deterministic given the options. Profile-space enumerates or samples pairs
// of profiles; margin-space samples even margin graphs, aligns their
// outcomes by relabeling, and realizes candidates via gadget votes before
// re-verifying with check_violation.
SearchResult search_violation(const RuleSpec& rule, const SearchOptions& options);

// The two fully specified counterexamples with their published outcomes.
struct Fixture {
  std::string name;
  RuleSpec rule;
  OutcomeLevel level;
  Profile v1;
  Profile v2;
  Outcome expected_v1;
  Outcome expected_v2;
  Outcome expected_combined;
};

std::vector<Fixture> builtin_fixtures();

std::string render_certificate(const ViolationCertificate& cert, const std::string& rule_name);

}  // namespace votemle
