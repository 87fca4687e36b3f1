// Acceptance suite: one check per shipped guarantee, each printed as a
// single PASS/FAIL line. Usage: acceptance <criterion|all> <cli-path> <fixtures-dir>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "votemle/consistency.hpp"
#include "votemle/mle.hpp"
#include "votemle/noise.hpp"
#include "votemle/rules.hpp"
#include "votemle/synth.hpp"

using namespace votemle;

namespace {

struct Context {
  std::string cli;
  std::string fixtures;
};

struct CliRun {
  int exit_code;
  std::string output;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliRun run_cli(const Context& ctx, const std::string& args) {
  std::string cmd = "'" + ctx.cli + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string output;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return CliRun{code, output};
}

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

// ---- criteria ------------------------------------------------------------

void criterion_1(const Context& ctx) {
  Profile v1 = parse_profile(read_file(ctx.fixtures + "/bucklin_v1.votes"));
  Profile v2 = parse_profile(read_file(ctx.fixtures + "/bucklin_v2.votes"));
  Ranking abcde({0, 1, 2, 3, 4});
  Ranking bacde({1, 0, 2, 3, 4});
  require(bucklin(v1).strict == abcde, "bucklin on v1 is not a>b>c>d>e");
  require(bucklin(v2).strict == abcde, "bucklin on v2 is not a>b>c>d>e");
  require(bucklin(Profile::combine(v1, v2)).strict == bacde, "bucklin on v1+v2 is not b>a>c>d>e");
  auto cert = check_violation(RuleSpec::bucklin(), OutcomeLevel::Ranking, v1, v2);
  require(cert.has_value(), "no certificate emitted");
  require(cert->outcome_combined == Outcome::ranking(bacde), "certificate combined outcome wrong");
}

void criterion_2(const Context& ctx) {
  Profile v1 = parse_profile(read_file(ctx.fixtures + "/stv_v1.votes"));
  Profile v2 = parse_profile(read_file(ctx.fixtures + "/stv_v2.votes"));
  require(stv(v1).winner == 0, "stv winner on v1 is not a");
  require(stv(v2).winner == 0, "stv winner on v2 is not a");
  StvResult combined = stv_detailed(Profile::combine(v1, v2));
  require(combined.elimination_order.front() == 0, "a is not eliminated in round 1 of v1+v2");
  require(combined.outcome.winner != 0, "a still wins v1+v2");
  auto cert = check_violation(RuleSpec::stv(), OutcomeLevel::Winner, v1, v2);
  require(cert.has_value(), "no certificate emitted");
}

void criterion_3(const Context&) {
  EquivalenceConfig config;
  config.pairing = EquivalencePairing::ScoringWinnerVsTopScores;
  config.trials = 1000;
  config.bounds = ProfileBounds{2, 5, 1, 7};
  config.seed = 20260101;
  EquivalenceReport report = mle_equivalence_report(config);
  require(report.trials == 1000, "expected 1000 trials");
  require(report.failures == 0, "winner-mle mismatch: " + report.detail);
}

void criterion_4(const Context&) {
  EquivalenceConfig config;
  config.pairing = EquivalencePairing::ScoringRankingVsScoreOrder;
  config.trials = 1000;
  config.bounds = ProfileBounds{2, 5, 1, 7};
  config.seed = 20260102;
  EquivalenceReport report = mle_equivalence_report(config);
  require(report.trials == 1000, "expected 1000 trials");
  require(report.failures == 0, "ranking-mle mismatch: " + report.detail);
}

void criterion_5(const Context&) {
  EquivalenceConfig config;
  config.pairing = EquivalencePairing::StvLexVsStv;
  config.trials = 500;
  config.bounds = ProfileBounds{2, 5, 1, 7};
  config.seed = 20260103;
  EquivalenceReport report = mle_equivalence_report(config);
  require(report.trials == 500, "expected 500 strict-elimination trials");
  require(report.failures == 0, "stv-lex mle is not the stv ranking: " + report.detail);
}

void criterion_6(const Context&) {
  for (const Rational& p : {Rational(3, 5), Rational(9, 10)}) {
    EquivalenceConfig config;
    config.pairing = EquivalencePairing::CondorcetVsKemeny;
    config.trials = 300;
    config.bounds = ProfileBounds{2, 4, 1, 7};
    config.seed = 20260104;  // same seed: identical profiles for both p
    config.condorcet_p = p;
    EquivalenceReport report = mle_equivalence_report(config);
    require(report.trials == 300, "expected 300 trials");
    require(report.failures == 0,
            "condorcet(" + p.to_string() + ") mle differs from kemeny: " + report.detail);
  }
}

void criterion_7(const Context&) {
  for (int m = 2; m <= 4; ++m) {
    std::vector<NoiseModel> winner_models = {
        NoiseModel::scoring_winner(ScoreVector::plurality(m)),
        NoiseModel::scoring_winner(ScoreVector::borda(m)),
        NoiseModel::scoring_winner(ScoreVector::veto(m)),
    };
    for (const auto& model : winner_models) {
      Likelihood base = normalizer(model, Outcome::winner(0), m);
      for (int w = 1; w < m; ++w) {
        require(normalizer(model, Outcome::winner(w), m) == base,
                "winner normalizer depends on the outcome at m=" + std::to_string(m));
      }
    }
    std::vector<NoiseModel> ranking_models = {
        NoiseModel::scoring_ranking(ScoreVector::plurality(m)),
        NoiseModel::scoring_ranking(ScoreVector::borda(m)),
        NoiseModel::scoring_ranking(ScoreVector::veto(m)),
        NoiseModel::condorcet(Rational(3, 5)),
        NoiseModel::condorcet(Rational(9, 10)),
    };
    auto rankings = all_rankings(m);
    for (const auto& model : ranking_models) {
      Likelihood base = normalizer(model, Outcome::ranking(rankings.front()), m);
      for (const Ranking& r : rankings) {
        require(normalizer(model, Outcome::ranking(r), m) == base,
                "ranking normalizer depends on the outcome at m=" + std::to_string(m));
      }
    }
  }
}

void criterion_8(const Context&) {
  SplitMix64 rng(20260105);
  for (int trial = 0; trial < 200; ++trial) {
    int m = static_cast<int>(rng.range(2, 6));
    MarginGraph g = random_even_margin_graph(m, 10, rng);
    Profile p = realize_margin_graph(g);
    require(margins(pairwise_matrix(p)) == g, "margin round trip failed");
    long long positive = 0;
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (g.weight(a, b) > 0) positive += g.weight(a, b);
      }
    }
    require(p.num_votes() == positive, "vote count is not the positive-weight sum");
  }
}

void criterion_9(const Context&) {
  struct Case {
    RuleSpec rule;
    int m;
    long long max_weight;
  };
  std::vector<Case> cases = {
      {RuleSpec::copeland(), 5, 6},
      {RuleSpec::maximin(), 4, 12},
      {RuleSpec::ranked_pairs(), 4, 12},
  };
  for (const auto& c : cases) {
    SearchOptions options;
    options.level = OutcomeLevel::Ranking;
    options.strategy = SearchStrategy::Margins;
    options.num_candidates = c.m;
    options.max_weight = c.max_weight;
    options.budget = 200000;
    options.seed = 1;
    SearchResult result = search_violation(c.rule, options);
    require(result.certificate.has_value(), c.rule.name() + ": no violation within budget");
    auto again =
        check_violation(c.rule, OutcomeLevel::Ranking, result.certificate->v1, result.certificate->v2);
    require(again.has_value(), c.rule.name() + ": certificate failed re-verification");
  }
}

void criterion_10(const Context&) {
  for (const RuleSpec& rule : {RuleSpec::borda(), RuleSpec::stv()}) {
    SearchOptions options;
    options.level = OutcomeLevel::Ranking;
    options.strategy = SearchStrategy::Profiles;
    options.num_candidates = 3;
    options.max_votes = 4;
    options.exhaustive = true;
    options.budget = 100000000;
    SearchResult result = search_violation(rule, options);
    require(!result.certificate.has_value(), rule.name() + ": unexpected violation found");
    require(result.exhausted_space, rule.name() + ": search did not cover the space");
  }
}

void criterion_11(const Context& ctx) {
  std::string fx = ctx.fixtures;
  struct GoldenCase {
    std::string args;
    int expected_exit;
    std::string expected_substring;
  };
  std::vector<GoldenCase> cases = {
      {"tally --rule stv '" + fx + "/stv_v1.votes'", 0, "winner: a"},
      {"tally --rule bucklin --show-pairwise '" + fx + "/bucklin_v1.votes'", 0,
       "ranking: a>b>c>d>e"},
      {"tally --rule bucklin '" + fx + "/bucklin_combined.votes'", 0, "ranking: b>a>c>d>e"},
      {"tally --rule borda '" + fx + "/single.votes'", 0, "ranking: b>a>c"},
      {"tally --rule scoring --score-vector 2,1,0 '" + fx + "/stv_v1.votes'", 0,
       "scores: a=17 b=16 c=6"},
      {"tally --rule kemeny '" + fx + "/cycle3.votes'", 0, "optimal rankings: 3"},
      {"tally --rule hybrid --winner-rule plurality --rest-rule bucklin '" + fx + "/stv_v1.votes'",
       0, "winner: b"},
      {"pairwise '" + fx + "/stv_v1.votes'", 0, "margins"},
      {"mle --model stv-lex '" + fx + "/stv_v1.votes'", 0, "(13,6,3)"},
      {"mle --model condorcet --p 3/5 '" + fx + "/cycle3.votes'", 0, "optimal rankings: 3"},
      {"mle --model scoring-winner --score-vector plurality '" + fx + "/stv_v1.votes'", 0,
       "optimal winners: b"},
      {"consistency --rule bucklin --kind ranking '" + fx + "/bucklin_v1.votes' '" + fx +
           "/bucklin_v2.votes'",
       1, "violation: yes"},
      {"consistency --rule stv --kind winner '" + fx + "/stv_v1.votes' '" + fx + "/stv_v2.votes'", 1,
       "violation: yes"},
      {"consistency --rule stv --kind ranking '" + fx + "/stv_v1.votes' '" + fx + "/stv_v2.votes'",
       0, "no violation"},
      {"realize '" + fx + "/edge_ab2.margins'", 0, "1: a>b>c"},
      {"search --rule copeland --kind ranking --candidates 5 --strategy margins --max-weight 6 "
       "--seed 7 --budget 200000",
       1, "violation found"},
      {"search --rule borda --kind ranking --candidates 3 --strategy profiles --max-votes 4 "
       "--exhaustive --budget 100000000",
       0, "no violation"},
      {"search --rule copeland --kind ranking --candidates 5 --strategy margins --max-weight 6 "
       "--seed 1 --budget 0",
       0, "steps: 0"},
      {"mle --model condorcet --p 1/2 '" + fx + "/stv_v1.votes'", 2, "error"},
      {"realize '" + fx + "/stv_v1.votes'", 2, "error"},
  };
  for (const auto& c : cases) {
    CliRun first = run_cli(ctx, c.args);
    CliRun second = run_cli(ctx, c.args);
    require(first.exit_code == c.expected_exit,
            "exit " + std::to_string(first.exit_code) + " != " + std::to_string(c.expected_exit) +
                " for: " + c.args + "\n" + first.output);
    require(first.output == second.output, "output not byte-stable for: " + c.args);
    require(second.exit_code == first.exit_code, "exit code not stable for: " + c.args);
    require(first.output.find(c.expected_substring) != std::string::npos,
            "missing '" + c.expected_substring + "' in output of: " + c.args + "\n" + first.output);
  }

  // certificates written by search feed straight back into consistency
  std::string prefix = "/tmp/votemle_acceptance_cert";
  CliRun search = run_cli(ctx,
                          "search --rule maximin --kind ranking --candidates 4 --strategy margins "
                          "--max-weight 12 --seed 5 --budget 200000 -o '" +
                              prefix + "'");
  require(search.exit_code == 1, "maximin search did not certify\n" + search.output);
  CliRun replay = run_cli(ctx, "consistency --rule maximin --kind ranking '" + prefix + "_v1.votes' '" +
                                   prefix + "_v2.votes'");
  require(replay.exit_code == 1, "written certificate did not re-verify\n" + replay.output);
}

struct Criterion {
  int id;
  const char* description;
  double time_limit_seconds;
  std::function<void(const Context&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "bucklin fixture: same ranking twice, flipped when combined", 1.0, criterion_1},
      {2, "stv fixture: same winner twice, dethroned when combined", 1.0, criterion_2},
      {3, "winner mle equals top-score set on 1000 random profiles", 30.0, criterion_3},
      {4, "ranking mle equals score-sorted orders on 1000 random profiles", 60.0, criterion_4},
      {5, "stv-lex mle equals the stv ranking on 500 strict profiles", 60.0, criterion_5},
      {6, "condorcet mle equals the kemeny set for p=3/5 and p=9/10", 60.0, criterion_6},
      {7, "normalizers are outcome-independent for every exact model", 60.0, criterion_7},
      {8, "200 even margin graphs realize and recover exactly", 10.0, criterion_8},
      {9, "margin search certifies copeland, maximin, and ranked pairs", 180.0, criterion_9},
      {10, "exhaustive search clears borda and stv at the ranking level", 60.0, criterion_10},
      {11, "cli outputs are byte-stable with pinned exit codes", 60.0, criterion_11},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: acceptance <criterion|all> <cli-path> <fixtures-dir>\n";
    return 2;
  }
  Context ctx{argv[2], argv[3]};
  std::string selector = argv[1];
  bool all_pass = true;
  bool any_ran = false;
  for (const auto& c : criteria()) {
    if (selector != "all" && std::to_string(c.id) != selector) continue;
    any_ran = true;
    auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.run(ctx);
    } catch (const std::exception& e) {
      failure = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && elapsed > c.time_limit_seconds) {
      failure = "exceeded " + std::to_string(c.time_limit_seconds) + "s budget";
    }
    char line[160];
    std::snprintf(line, sizeof(line), "%s %2d %s (%.2fs)", failure.empty() ? "PASS" : "FAIL", c.id,
                  c.description, elapsed);
    std::cout << line << "\n";
    if (!failure.empty()) {
      std::cout << "      " << failure << "\n";
      all_pass = false;
    }
  }
  if (!any_ran) {
    std::cerr << "unknown criterion '" << selector << "' (1.." << criteria().size() << " or all)\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
