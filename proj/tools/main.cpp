#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "votemle/consistency.hpp"
#include "votemle/mle.hpp"
#include "votemle/noise.hpp"
#include "votemle/rules.hpp"
#include "votemle/synth.hpp"

namespace {

using namespace votemle;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::vector<long long> parse_int_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    size_t used = 0;
    out.push_back(std::stoll(part, &used));
    if (used != part.size()) throw std::runtime_error("bad integer '" + part + "'");
  }
  if (out.empty()) throw std::runtime_error("empty integer list");
  return out;
}

RuleSpec build_rule(const std::string& name, const std::string& score_vector,
                    const std::string& winner_rule, const std::string& rest_rule) {
  std::optional<std::vector<long long>> alpha;
  if (!score_vector.empty()) alpha = parse_int_list(score_vector);
  std::optional<std::string> winner, rest;
  if (!winner_rule.empty()) winner = winner_rule;
  if (!rest_rule.empty()) rest = rest_rule;
  return make_rule(name, alpha, winner, rest);
}

OutcomeLevel parse_level(const std::string& kind) {
  if (kind == "winner") return OutcomeLevel::Winner;
  if (kind == "ranking") return OutcomeLevel::Ranking;
  throw std::runtime_error("--kind must be winner or ranking");
}

ScoreVector alpha_from_option(const std::string& score_vector, int m) {
  if (score_vector == "plurality") return ScoreVector::plurality(m);
  if (score_vector == "borda") return ScoreVector::borda(m);
  if (score_vector == "veto") return ScoreVector::veto(m);
  return ScoreVector(parse_int_list(score_vector));
}

std::string candidates_line(const CandidateSet& cs) {
  std::string out = "candidates: ";
  for (int i = 0; i < cs.size(); ++i) {
    if (i > 0) out += ", ";
    out += cs.name(i);
  }
  return out;
}

std::string tiers_line(const CandidateSet& cs, const WeakOrder& w) {
  std::string out = "tiers: ";
  for (size_t t = 0; t < w.tiers().size(); ++t) {
    if (t > 0) out += " | ";
    const auto& tier = w.tiers()[t];
    for (size_t i = 0; i < tier.size(); ++i) {
      if (i > 0) out += ",";
      out += cs.name(tier[i]);
    }
  }
  return out;
}

void print_matrix(std::ostream& os, const CandidateSet& cs, const std::string& header,
                  const std::function<long long(int, int)>& cell, bool dash_diagonal) {
  const int m = cs.size();
  size_t width = 1;
  for (int i = 0; i < m; ++i) width = std::max(width, cs.name(i).size());
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b) width = std::max(width, std::to_string(cell(a, b)).size());
    }
  }
  os << header << "\n";
  os << std::string(width + 2, ' ');
  for (int b = 0; b < m; ++b) os << " " << std::setw(static_cast<int>(width)) << cs.name(b);
  os << "\n";
  for (int a = 0; a < m; ++a) {
    os << "  " << std::setw(static_cast<int>(width)) << cs.name(a);
    for (int b = 0; b < m; ++b) {
      if (a == b && dash_diagonal) {
        os << " " << std::setw(static_cast<int>(width)) << "-";
      } else {
        os << " " << std::setw(static_cast<int>(width)) << cell(a, b);
      }
    }
    os << "\n";
  }
}

void print_pairwise(std::ostream& os, const Profile& p) {
  PairwiseMatrix pm = pairwise_matrix(p);
  MarginGraph g = margins(pm);
  print_matrix(os, p.candidates(), "pairwise counts (row over column):",
               [&](int a, int b) { return pm.count(a, b); }, true);
  print_matrix(os, p.candidates(), "margins (row over column):",
               [&](int a, int b) { return g.weight(a, b); }, false);
}

int cmd_tally(const std::string& rule_name, const std::string& score_vector,
              const std::string& winner_rule, const std::string& rest_rule,
              const std::string& path, bool show_pairwise) {
  Profile p = parse_profile(read_file(path));
  std::cout << candidates_line(p.candidates()) << "\n";
  std::cout << "votes: " << p.num_votes() << "\n";

  if (rule_name == "kemeny") {
    KemenyResult result = kemeny(p);
    std::cout << "rule: kemeny\n";
    std::cout << "agreement: " << result.agreement << "\n";
    std::cout << "optimal rankings: " << result.optimal.size() << "\n";
    for (const auto& r : result.optimal) std::cout << "  " << render_ranking(p.candidates(), r) << "\n";
    std::cout << "winner: " << p.candidates().name(result.optimal.front().at(0)) << "\n";
    std::cout << "ranking: " << render_ranking(p.candidates(), result.optimal.front()) << "\n";
    if (show_pairwise) print_pairwise(std::cout, p);
    return 0;
  }

  RuleSpec rule = build_rule(rule_name, score_vector, winner_rule, rest_rule);
  RuleOutcome out = rule.apply(p);
  std::cout << "rule: " << rule.name() << "\n";
  std::cout << "winner: " << p.candidates().name(out.winner) << "\n";
  std::cout << "ranking: " << render_ranking(p.candidates(), out.strict) << "\n";
  std::cout << tiers_line(p.candidates(), out.weak) << "\n";
  auto scores = rule.score_labels(p);
  if (!scores.empty()) {
    std::cout << "scores:";
    for (const auto& s : scores) std::cout << " " << s;
    std::cout << "\n";
  }
  if (show_pairwise) print_pairwise(std::cout, p);
  return 0;
}

int cmd_pairwise(const std::string& path) {
  Profile p = parse_profile(read_file(path));
  std::cout << candidates_line(p.candidates()) << "\n";
  std::cout << "votes: " << p.num_votes() << "\n";
  print_pairwise(std::cout, p);
  return 0;
}

int cmd_mle(const std::string& model_name, const std::string& score_vector, const std::string& p_str,
            const std::string& path) {
  Profile profile = parse_profile(read_file(path));
  const int m = profile.num_candidates();
  const auto& cs = profile.candidates();

  if (model_name == "scoring-winner") {
    if (score_vector.empty()) throw std::runtime_error("--model scoring-winner requires --score-vector");
    NoiseModel model = NoiseModel::scoring_winner(alpha_from_option(score_vector, m));
    WinnerMle result = mle_winners_detailed(model, profile);
    std::cout << "model: scoring-winner\n";
    std::cout << candidates_line(cs) << "\n";
    std::cout << "votes: " << profile.num_votes() << "\n";
    std::cout << "candidate likelihoods:\n";
    for (int c = 0; c < m; ++c) {
      std::cout << "  " << cs.name(c) << ": " << result.per_candidate[static_cast<size_t>(c)].to_string()
                << "\n";
    }
    std::cout << "optimal winners:";
    for (int w : result.winners) std::cout << " " << cs.name(w);
    std::cout << "\n";
    return 0;
  }

  NoiseModel model = [&] {
    if (model_name == "scoring-ranking") {
      if (score_vector.empty()) throw std::runtime_error("--model scoring-ranking requires --score-vector");
      return NoiseModel::scoring_ranking(alpha_from_option(score_vector, m));
    }
    if (model_name == "stv-lex") return NoiseModel::stv_lex();
    if (model_name == "condorcet") {
      if (p_str.empty()) throw std::runtime_error("--model condorcet requires --p");
      return NoiseModel::condorcet(Rational::from_string(p_str));
    }
    throw std::runtime_error("unknown model '" + model_name + "'");
  }();

  RankingMle result = mle_rankings_detailed(model, profile);
  std::cout << "model: " << model.name() << "\n";
  std::cout << candidates_line(cs) << "\n";
  std::cout << "votes: " << profile.num_votes() << "\n";
  std::cout << "best likelihood: " << result.best.to_string() << "\n";
  std::cout << "optimal rankings: " << result.rankings.size() << "\n";
  for (const auto& r : result.rankings) std::cout << "  " << render_ranking(cs, r) << "\n";
  return 0;
}

int cmd_consistency(const std::string& rule_name, const std::string& score_vector,
                    const std::string& winner_rule, const std::string& rest_rule,
                    const std::string& kind, const std::string& path1, const std::string& path2) {
  RuleSpec rule = build_rule(rule_name, score_vector, winner_rule, rest_rule);
  OutcomeLevel level = parse_level(kind);
  Profile v1 = parse_profile(read_file(path1));
  Profile v2 = parse_profile(read_file(path2));
  auto cert = check_violation(rule, level, v1, v2);
  if (cert) {
    std::cout << render_certificate(*cert, rule.name());
    std::cout << "violation: yes\n";
    return 1;
  }
  std::cout << "rule: " << rule.name() << "\n";
  std::cout << "level: " << kind << "\n";
  std::cout << "no violation\n";
  return 0;
}

int cmd_search(const std::string& rule_name, const std::string& score_vector,
               const std::string& winner_rule, const std::string& rest_rule, const std::string& kind,
               int candidates, const std::string& strategy, long long max_votes, long long max_weight,
               bool exhaustive, long long budget, uint64_t seed, const std::string& out_prefix) {
  RuleSpec rule = build_rule(rule_name, score_vector, winner_rule, rest_rule);
  SearchOptions options;
  options.level = parse_level(kind);
  if (strategy == "profiles") {
    options.strategy = SearchStrategy::Profiles;
  } else if (strategy == "margins") {
    options.strategy = SearchStrategy::Margins;
  } else {
    throw std::runtime_error("--strategy must be profiles or margins");
  }
  options.num_candidates = candidates;
  options.max_votes = max_votes;
  options.max_weight = max_weight;
  options.exhaustive = exhaustive;
  options.budget = budget;
  options.seed = seed;

  SearchResult result = search_violation(rule, options);
  std::cout << "rule: " << rule.name() << "\n";
  std::cout << "kind: " << kind << "\n";
  std::cout << "strategy: " << strategy << "\n";
  std::cout << "candidates: " << candidates << "\n";
  std::cout << "seed: " << seed << "\n";
  std::cout << "steps: " << result.steps << "\n";
  if (!result.certificate) {
    std::cout << (result.exhausted_space ? "no violation (search space exhausted)\n"
                                         : "no violation (budget exhausted)\n");
    return 0;
  }
  std::cout << "violation found\n";
  std::cout << render_certificate(*result.certificate, rule.name());
  if (!out_prefix.empty()) {
    write_file(out_prefix + "_v1.votes", render_profile(result.certificate->v1));
    write_file(out_prefix + "_v2.votes", render_profile(result.certificate->v2));
    std::cout << "wrote " << out_prefix << "_v1.votes\n";
    std::cout << "wrote " << out_prefix << "_v2.votes\n";
  }
  return 1;
}

int cmd_realize(const std::string& path, const std::string& out_path) {
  MarginFile mf = parse_margin_file(read_file(path));
  Profile p = realize_margin_graph(mf.graph, mf.candidates);
  std::string text = render_profile(p);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
    std::cout << "wrote " << out_path << " (" << p.num_votes() << " votes over "
              << p.num_candidates() << " candidates)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"voting rules, exact-likelihood estimation, and reinforcement-violation search"};
  app.require_subcommand(1);

  std::string rule_name, score_vector, winner_rule, rest_rule, kind = "ranking";
  std::string model_name, p_str;
  std::string path1, path2, out_path;
  bool show_pairwise = false, exhaustive = false;
  int candidates = 3;
  long long max_votes = 4, max_weight = 6, budget = 200000;
  uint64_t seed = 1;
  std::string strategy = "profiles";

  auto* tally = app.add_subcommand("tally", "apply a voting rule to a ballot file");
  tally->add_option("--rule", rule_name, "rule name")->required();
  tally->add_option("--score-vector", score_vector, "alpha as ints, e.g. 3,1,0");
  tally->add_option("--winner-rule", winner_rule, "hybrid winner rule");
  tally->add_option("--rest-rule", rest_rule, "hybrid rest rule");
  tally->add_flag("--show-pairwise", show_pairwise, "also print the pairwise matrix");
  tally->add_option("file", path1, "ballot file")->required();

  auto* pairwise = app.add_subcommand("pairwise", "print pairwise counts and margins");
  pairwise->add_option("file", path1, "ballot file")->required();

  auto* mle = app.add_subcommand("mle", "exact maximum-likelihood outcome for a noise model");
  mle->add_option("--model", model_name, "scoring-winner|scoring-ranking|stv-lex|condorcet")->required();
  mle->add_option("--score-vector", score_vector, "plurality|borda|veto or ints");
  mle->add_option("--p", p_str, "condorcet pair probability, e.g. 3/5");
  mle->add_option("file", path1, "ballot file")->required();

  auto* consistency = app.add_subcommand("consistency", "check two profiles for a reinforcement violation");
  consistency->add_option("--rule", rule_name, "rule name")->required();
  consistency->add_option("--score-vector", score_vector, "alpha for --rule scoring");
  consistency->add_option("--winner-rule", winner_rule, "hybrid winner rule");
  consistency->add_option("--rest-rule", rest_rule, "hybrid rest rule");
  consistency->add_option("--kind", kind, "winner|ranking")->required();
  consistency->add_option("file1", path1, "first ballot file")->required();
  consistency->add_option("file2", path2, "second ballot file")->required();

  auto* search = app.add_subcommand("search", "search for a reinforcement violation");
  search->add_option("--rule", rule_name, "rule name")->required();
  search->add_option("--score-vector", score_vector, "alpha for --rule scoring");
  search->add_option("--winner-rule", winner_rule, "hybrid winner rule");
  search->add_option("--rest-rule", rest_rule, "hybrid rest rule");
  search->add_option("--kind", kind, "winner|ranking")->required();
  search->add_option("--candidates", candidates, "number of candidates")->required();
  search->add_option("--strategy", strategy, "profiles|margins");
  search->add_option("--max-votes", max_votes, "max votes per profile (profiles strategy)");
  search->add_option("--max-weight", max_weight, "max margin magnitude (margins strategy)");
  search->add_flag("--exhaustive", exhaustive, "enumerate the whole profile space");
  search->add_option("--budget", budget, "step budget");
  search->add_option("--seed", seed, "random seed (default 1)");
  search->add_option("-o,--output", out_path, "prefix for certificate ballot files");

  auto* realize = app.add_subcommand("realize", "turn an even margin file into ballots");
  realize->add_option("file", path1, "margin file")->required();
  realize->add_option("-o,--output", out_path, "output ballot file (stdout if absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (tally->parsed()) return cmd_tally(rule_name, score_vector, winner_rule, rest_rule, path1, show_pairwise);
    if (pairwise->parsed()) return cmd_pairwise(path1);
    if (mle->parsed()) return cmd_mle(model_name, score_vector, p_str, path1);
    if (consistency->parsed())
      return cmd_consistency(rule_name, score_vector, winner_rule, rest_rule, kind, path1, path2);
    if (search->parsed())
      return cmd_search(rule_name, score_vector, winner_rule, rest_rule, kind, candidates, strategy,
                        max_votes, max_weight, exhaustive, budget, seed, out_path);
    if (realize->parsed()) return cmd_realize(path1, out_path);
  } catch (const OddWeightError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
