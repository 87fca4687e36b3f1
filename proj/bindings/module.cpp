#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "votemle/consistency.hpp"
#include "votemle/mle.hpp"
#include "votemle/noise.hpp"
#include "votemle/rules.hpp"
#include "votemle/synth.hpp"

namespace py = pybind11;
using namespace votemle;

namespace {

std::vector<std::string> ranking_labels(const CandidateSet& cs, const Ranking& r) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(r.size()));
  for (int pos = 0; pos < r.size(); ++pos) out.push_back(cs.name(r.at(pos)));
  return out;
}

py::dict outcome_dict(const CandidateSet& cs, const RuleOutcome& out) {
  py::dict d;
  d["winner"] = cs.name(out.winner);
  d["ranking"] = ranking_labels(cs, out.strict);
  py::list tiers;
  for (const auto& tier : out.weak.tiers()) {
    py::list t;
    for (int c : tier) t.append(cs.name(c));
    tiers.append(t);
  }
  d["tiers"] = tiers;
  return d;
}

RuleSpec rule_from_args(const std::string& name, const std::optional<std::vector<long long>>& alpha,
                        const std::optional<std::string>& winner_rule,
                        const std::optional<std::string>& rest_rule) {
  return make_rule(name, alpha, winner_rule, rest_rule);
}

NoiseModel model_from_args(const std::string& name, const std::optional<std::vector<long long>>& alpha,
                           const std::optional<std::string>& p) {
  auto alpha_vec = [&]() {
    if (!alpha) throw std::invalid_argument("model '" + name + "' needs score_vector");
    return ScoreVector(*alpha);
  };
  if (name == "scoring-winner") return NoiseModel::scoring_winner(alpha_vec());
  if (name == "scoring-ranking") return NoiseModel::scoring_ranking(alpha_vec());
  if (name == "stv-lex") return NoiseModel::stv_lex();
  if (name == "condorcet") {
    if (!p) throw std::invalid_argument("model 'condorcet' needs p, e.g. \"3/5\"");
    return NoiseModel::condorcet(Rational::from_string(*p));
  }
  throw std::invalid_argument("unknown model '" + name + "'");
}

OutcomeLevel level_from_string(const std::string& kind) {
  if (kind == "winner") return OutcomeLevel::Winner;
  if (kind == "ranking") return OutcomeLevel::Ranking;
  throw std::invalid_argument("kind must be 'winner' or 'ranking'");
}

py::object certificate_dict(const std::optional<ViolationCertificate>& cert) {
  if (!cert) return py::none();
  const auto& cs = cert->v1.candidates();
  py::dict d;
  d["kind"] = cert->level == OutcomeLevel::Winner ? "winner" : "ranking";
  auto render = [&](const Outcome& o) -> py::object {
    if (o.is_winner()) return py::cast(cs.name(o.winner_index()));
    return py::cast(ranking_labels(cs, o.ranking()));
  };
  d["outcome_v1"] = render(cert->outcome_v1);
  d["outcome_v2"] = render(cert->outcome_v2);
  d["outcome_combined"] = render(cert->outcome_combined);
  d["v1"] = render_profile(cert->v1);
  d["v2"] = render_profile(cert->v2);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "voting rules, exact-likelihood MLE, and reinforcement-violation search";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Profile>(m, "Profile")
      .def_static("from_text", [](const std::string& text) { return parse_profile(text); },
                  py::arg("text"), "Parse a ballot file.")
      .def("to_text", [](const Profile& p) { return render_profile(p); })
      .def_property_readonly("num_votes", &Profile::num_votes)
      .def_property_readonly("num_candidates", &Profile::num_candidates)
      .def_property_readonly("labels", [](const Profile& p) { return p.candidates().names(); })
      .def("__eq__", [](const Profile& a, const Profile& b) { return a == b; })
      .def("__repr__", [](const Profile& p) {
        return "<Profile " + std::to_string(p.num_votes()) + " votes over " +
               std::to_string(p.num_candidates()) + " candidates>";
      });

  m.def("combine", &Profile::combine, py::arg("v1"), py::arg("v2"),
        "Multiset union of two profiles over the same candidates.");

  m.def(
      "tally",
      [](const Profile& p, const std::string& rule, const std::optional<std::vector<long long>>& score_vector,
         const std::optional<std::string>& winner_rule, const std::optional<std::string>& rest_rule) {
        RuleSpec spec = rule_from_args(rule, score_vector, winner_rule, rest_rule);
        return outcome_dict(p.candidates(), spec.apply(p));
      },
      py::arg("profile"), py::arg("rule"), py::arg("score_vector") = py::none(),
      py::arg("winner_rule") = py::none(), py::arg("rest_rule") = py::none(),
      "Apply a voting rule; returns winner, strict ranking, and tiers.");

  m.def(
      "pairwise_counts",
      [](const Profile& p) {
        PairwiseMatrix pm = pairwise_matrix(p);
        std::vector<std::vector<long long>> out;
        for (int a = 0; a < pm.num_candidates(); ++a) {
          std::vector<long long> row;
          for (int b = 0; b < pm.num_candidates(); ++b) row.push_back(pm.count(a, b));
          out.push_back(std::move(row));
        }
        return out;
      },
      py::arg("profile"));

  m.def(
      "margin_matrix",
      [](const Profile& p) {
        MarginGraph g = margins(pairwise_matrix(p));
        std::vector<std::vector<long long>> out;
        for (int a = 0; a < g.num_candidates(); ++a) {
          std::vector<long long> row;
          for (int b = 0; b < g.num_candidates(); ++b) row.push_back(g.weight(a, b));
          out.push_back(std::move(row));
        }
        return out;
      },
      py::arg("profile"));

  m.def(
      "kemeny",
      [](const Profile& p) {
        KemenyResult result = kemeny(p);
        py::dict d;
        py::list rankings;
        for (const auto& r : result.optimal) rankings.append(ranking_labels(p.candidates(), r));
        d["rankings"] = rankings;
        d["agreement"] = result.agreement;
        return d;
      },
      py::arg("profile"));

  m.def(
      "mle_winners",
      [](const Profile& p, const std::vector<long long>& score_vector) {
        NoiseModel model = NoiseModel::scoring_winner(ScoreVector(score_vector));
        WinnerMle result = mle_winners_detailed(model, p);
        py::dict d;
        py::list winners;
        for (int w : result.winners) winners.append(p.candidates().name(w));
        d["winners"] = winners;
        py::dict likes;
        for (int c = 0; c < p.num_candidates(); ++c) {
          likes[py::cast(p.candidates().name(c))] = result.per_candidate[static_cast<size_t>(c)].to_string();
        }
        d["likelihoods"] = likes;
        return d;
      },
      py::arg("profile"), py::arg("score_vector"));

  m.def(
      "mle_rankings",
      [](const Profile& p, const std::string& model, const std::optional<std::vector<long long>>& score_vector,
         const std::optional<std::string>& p_value) {
        NoiseModel nm = model_from_args(model, score_vector, p_value);
        RankingMle result = mle_rankings_detailed(nm, p);
        py::dict d;
        py::list rankings;
        for (const auto& r : result.rankings) rankings.append(ranking_labels(p.candidates(), r));
        d["rankings"] = rankings;
        d["likelihood"] = result.best.to_string();
        return d;
      },
      py::arg("profile"), py::arg("model"), py::arg("score_vector") = py::none(),
      py::arg("p") = py::none(),
      "Exhaustive ranking MLE for scoring-ranking, stv-lex, or condorcet models.");

  m.def(
      "profile_likelihood",
      [](const Profile& p, const std::string& model, const std::vector<std::string>& true_ranking,
         const std::optional<std::vector<long long>>& score_vector, const std::optional<std::string>& p_value) {
        NoiseModel nm = model_from_args(model, score_vector, p_value);
        std::vector<int> order;
        for (const auto& label : true_ranking) {
          auto idx = p.candidates().index_of(label);
          if (!idx) throw std::invalid_argument("unknown candidate '" + label + "'");
          order.push_back(*idx);
        }
        Outcome outcome = Outcome::ranking(Ranking(std::move(order)));
        return profile_likelihood(nm, outcome, p).to_string();
      },
      py::arg("profile"), py::arg("model"), py::arg("true_ranking"),
      py::arg("score_vector") = py::none(), py::arg("p") = py::none());

  m.def(
      "check_violation",
      [](const std::string& rule, const std::string& kind, const Profile& v1, const Profile& v2,
         const std::optional<std::vector<long long>>& score_vector,
         const std::optional<std::string>& winner_rule, const std::optional<std::string>& rest_rule) {
        RuleSpec spec = rule_from_args(rule, score_vector, winner_rule, rest_rule);
        return certificate_dict(check_violation(spec, level_from_string(kind), v1, v2));
      },
      py::arg("rule"), py::arg("kind"), py::arg("v1"), py::arg("v2"),
      py::arg("score_vector") = py::none(), py::arg("winner_rule") = py::none(),
      py::arg("rest_rule") = py::none(),
      "Returns a certificate dict when the rule violates reinforcement on v1, v2.");

  m.def(
      "search_violation",
      [](const std::string& rule, const std::string& kind, int candidates, const std::string& strategy,
         long long max_votes, long long max_weight, bool exhaustive, long long budget, uint64_t seed,
         const std::optional<std::vector<long long>>& score_vector) {
        RuleSpec spec = rule_from_args(rule, score_vector, std::nullopt, std::nullopt);
        SearchOptions options;
        options.level = level_from_string(kind);
        options.strategy = strategy == "margins" ? SearchStrategy::Margins : SearchStrategy::Profiles;
        if (strategy != "margins" && strategy != "profiles")
          throw std::invalid_argument("strategy must be 'profiles' or 'margins'");
        options.num_candidates = candidates;
        options.max_votes = max_votes;
        options.max_weight = max_weight;
        options.exhaustive = exhaustive;
        options.budget = budget;
        options.seed = seed;
        return certificate_dict(search_violation(spec, options).certificate);
      },
      py::arg("rule"), py::arg("kind"), py::arg("candidates"), py::arg("strategy") = "profiles",
      py::arg("max_votes") = 4, py::arg("max_weight") = 6, py::arg("exhaustive") = false,
      py::arg("budget") = 200000, py::arg("seed") = 1, py::arg("score_vector") = py::none());

  m.def(
      "realize_margins",
      [](const std::string& margin_text) {
        MarginFile mf = parse_margin_file(margin_text);
        return render_profile(realize_margin_graph(mf.graph, mf.candidates));
      },
      py::arg("margin_text"), "Realize an even margin file as a ballot file.");
}
