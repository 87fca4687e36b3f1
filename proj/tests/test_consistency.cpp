#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "votemle/consistency.hpp"
#include "votemle/random.hpp"

using namespace votemle;

TEST_CASE("builtin fixtures replay their published outcomes") {
  auto fixtures = builtin_fixtures();
  REQUIRE(fixtures.size() == 2);
  for (const auto& f : fixtures) {
    auto cert = check_violation(f.rule, f.level, f.v1, f.v2);
    REQUIRE_MESSAGE(cert.has_value(), f.name);
    CHECK(cert->outcome_v1 == f.expected_v1);
    CHECK(cert->outcome_v2 == f.expected_v2);
    CHECK(cert->outcome_combined == f.expected_combined);
    CHECK(cert->strict_v1);
    CHECK(cert->strict_v2);
    CHECK(cert->strict_combined);
  }
}

TEST_CASE("bucklin fixture also certifies at the winner level") {
  auto fixtures = builtin_fixtures();
  const Fixture& f = fixtures[0];
  auto cert = check_violation(f.rule, OutcomeLevel::Winner, f.v1, f.v2);
  REQUIRE(cert.has_value());
  CHECK(cert->outcome_v1 == Outcome::winner(0));
  CHECK(cert->outcome_combined == Outcome::winner(1));
}

TEST_CASE("certificate profiles round-trip through ballot text") {
  auto fixtures = builtin_fixtures();
  for (const auto& f : fixtures) {
    auto cert = check_violation(f.rule, f.level, f.v1, f.v2);
    REQUIRE(cert.has_value());
    CHECK(parse_profile(render_profile(cert->v1)) == cert->v1);
    CHECK(parse_profile(render_profile(cert->v2)) == cert->v2);
  }
}

TEST_CASE("doubling a profile never violates a scoring rule") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    int m = static_cast<int>(rng.range(2, 5));
    Profile v = random_profile(m, rng.range(1, 8), rng);
    CHECK_FALSE(check_violation(RuleSpec::borda(), OutcomeLevel::Ranking, v, v).has_value());
    CHECK_FALSE(check_violation(RuleSpec::plurality(), OutcomeLevel::Winner, v, v).has_value());
  }
}

TEST_CASE("check_violation requires matching candidate sets") {
  Profile p1 = parse_profile("candidates: a,b\n1: a>b\n");
  Profile p2 = parse_profile("candidates: a,c\n1: a>c\n");
  CHECK_THROWS_AS(check_violation(RuleSpec::stv(), OutcomeLevel::Winner, p1, p2),
                  std::invalid_argument);
}

TEST_CASE("stv fixture does not certify at the ranking level") {
  auto fixtures = builtin_fixtures();
  const Fixture& stv_fixture = fixtures[1];
  CHECK_FALSE(
      check_violation(stv_fixture.rule, OutcomeLevel::Ranking, stv_fixture.v1, stv_fixture.v2)
          .has_value());
}

TEST_CASE("winner-level ties suppress certificates") {
  // both halves tie a and b at the top under borda
  Profile v = parse_profile("candidates: a,b,c\n1: a>b>c\n1: b>a>c\n");
  CHECK_FALSE(check_violation(RuleSpec::borda(), OutcomeLevel::Winner, v, v).has_value());
}

TEST_CASE("margin search finds the documented pairwise-rule violations") {
  SearchOptions options;
  options.level = OutcomeLevel::Ranking;
  options.strategy = SearchStrategy::Margins;
  options.budget = 100000;
  options.seed = 1;

  options.num_candidates = 5;
  options.max_weight = 6;
  SearchResult copeland_result = search_violation(RuleSpec::copeland(), options);
  REQUIRE(copeland_result.certificate.has_value());

  options.num_candidates = 4;
  options.max_weight = 12;
  SearchResult maximin_result = search_violation(RuleSpec::maximin(), options);
  REQUIRE(maximin_result.certificate.has_value());

  SearchResult rp_result = search_violation(RuleSpec::ranked_pairs(), options);
  REQUIRE(rp_result.certificate.has_value());

  // soundness: every certificate re-verifies through check_violation
  for (const auto* result : {&copeland_result, &maximin_result, &rp_result}) {
    const auto& cert = *result->certificate;
    RuleSpec rule = result == &copeland_result ? RuleSpec::copeland()
                    : result == &maximin_result ? RuleSpec::maximin()
                                                : RuleSpec::ranked_pairs();
    auto again = check_violation(rule, cert.level, cert.v1, cert.v2);
    REQUIRE(again.has_value());
    CHECK(again->outcome_v1 == cert.outcome_v1);
    CHECK(again->outcome_combined == cert.outcome_combined);
  }
}

TEST_CASE("ranked-pairs certificates have fully distinct pairwise counts") {
  SearchOptions options;
  options.level = OutcomeLevel::Ranking;
  options.strategy = SearchStrategy::Margins;
  options.num_candidates = 4;
  options.max_weight = 12;
  options.budget = 100000;
  options.seed = 2;
  SearchResult result = search_violation(RuleSpec::ranked_pairs(), options);
  REQUIRE(result.certificate.has_value());
  const auto& cert = *result.certificate;
  CHECK(ranked_pairs_tie_free(pairwise_matrix(cert.v1)));
  CHECK(ranked_pairs_tie_free(pairwise_matrix(cert.v2)));
  CHECK(ranked_pairs_tie_free(pairwise_matrix(Profile::combine(cert.v1, cert.v2))));
}

TEST_CASE("margin search is deterministic for a fixed seed") {
  SearchOptions options;
  options.level = OutcomeLevel::Ranking;
  options.strategy = SearchStrategy::Margins;
  options.num_candidates = 5;
  options.max_weight = 6;
  options.budget = 100000;
  options.seed = 7;
  SearchResult a = search_violation(RuleSpec::copeland(), options);
  SearchResult b = search_violation(RuleSpec::copeland(), options);
  REQUIRE(a.certificate.has_value());
  REQUIRE(b.certificate.has_value());
  CHECK(a.steps == b.steps);
  CHECK(a.certificate->v1 == b.certificate->v1);
  CHECK(a.certificate->v2 == b.certificate->v2);
}

TEST_CASE("exhaustive search clears the theorem-protected rules") {
  SearchOptions options;
  options.level = OutcomeLevel::Ranking;
  options.strategy = SearchStrategy::Profiles;
  options.num_candidates = 3;
  options.max_votes = 3;
  options.exhaustive = true;
  options.budget = 100000000;
  CHECK_FALSE(search_violation(RuleSpec::borda(), options).certificate.has_value());
  CHECK_FALSE(search_violation(RuleSpec::stv(), options).certificate.has_value());
}

TEST_CASE("zero budget searches return immediately") {
  SearchOptions options;
  options.level = OutcomeLevel::Ranking;
  options.strategy = SearchStrategy::Margins;
  options.num_candidates = 4;
  options.budget = 0;
  SearchResult result = search_violation(RuleSpec::copeland(), options);
  CHECK_FALSE(result.certificate.has_value());
  CHECK(result.steps == 0);
}

TEST_CASE("margin strategy rejects rules that are not margin-determined") {
  SearchOptions options;
  options.strategy = SearchStrategy::Margins;
  options.num_candidates = 3;
  CHECK_THROWS_AS(search_violation(RuleSpec::bucklin(), options), std::invalid_argument);
  CHECK_THROWS_AS(search_violation(RuleSpec::stv(), options), std::invalid_argument);
}

TEST_CASE("randomized profile search finds a three-candidate bucklin violation") {
  SearchOptions options;
  options.level = OutcomeLevel::Ranking;
  options.strategy = SearchStrategy::Profiles;
  options.num_candidates = 3;
  options.max_votes = 6;
  options.budget = 100000;
  options.seed = 2;
  SearchResult result = search_violation(RuleSpec::bucklin(), options);
  REQUIRE(result.certificate.has_value());
  auto again = check_violation(RuleSpec::bucklin(), OutcomeLevel::Ranking, result.certificate->v1,
                               result.certificate->v2);
  REQUIRE(again.has_value());
  CHECK(again->strict_v1);
  CHECK(again->strict_v2);
  CHECK(again->strict_combined);
}

TEST_CASE("winner-level margin search certifies copeland") {
  SearchOptions options;
  options.level = OutcomeLevel::Winner;
  options.strategy = SearchStrategy::Margins;
  options.num_candidates = 5;
  options.max_weight = 6;
  options.budget = 200000;
  options.seed = 1;
  SearchResult result = search_violation(RuleSpec::copeland(), options);
  REQUIRE(result.certificate.has_value());
  const auto& cert = *result.certificate;
  CHECK(cert.outcome_v1.is_winner());
  CHECK(cert.outcome_v1 == cert.outcome_v2);
  CHECK(!(cert.outcome_combined == cert.outcome_v1));
  CHECK(check_violation(RuleSpec::copeland(), OutcomeLevel::Winner, cert.v1, cert.v2).has_value());
}

TEST_CASE("randomized stv ranking search stays empty") {
  SearchOptions options;
  options.level = OutcomeLevel::Ranking;
  options.strategy = SearchStrategy::Profiles;
  options.num_candidates = 3;
  options.max_votes = 6;
  options.budget = 50000;
  options.seed = 4;
  SearchResult result = search_violation(RuleSpec::stv(), options);
  CHECK_FALSE(result.certificate.has_value());
}

TEST_CASE("equal but tied outcomes never certify") {
  // maximin produces a single all-tied tier on the perfect cycle
  Profile cycle = parse_profile("candidates: a,b,c\n1: a>b>c\n1: b>c>a\n1: c>a>b\n");
  CHECK_FALSE(check_violation(RuleSpec::maximin(), OutcomeLevel::Ranking, cycle, cycle).has_value());
  CHECK_FALSE(check_violation(RuleSpec::maximin(), OutcomeLevel::Winner, cycle, cycle).has_value());
}

TEST_CASE("certificate rendering is stable") {
  auto fixtures = builtin_fixtures();
  auto cert = check_violation(fixtures[0].rule, fixtures[0].level, fixtures[0].v1, fixtures[0].v2);
  REQUIRE(cert.has_value());
  std::string text = render_certificate(*cert, "bucklin");
  CHECK(text.find("rule: bucklin") != std::string::npos);
  CHECK(text.find("outcome on combined:  b>a>c>d>e") != std::string::npos);
  CHECK(render_certificate(*cert, "bucklin") == text);
}
