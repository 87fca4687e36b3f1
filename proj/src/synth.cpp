#include "votemle/synth.hpp"

#include <algorithm>

namespace votemle {

std::pair<Ranking, Ranking> gadget_pair(int a, int b, const std::vector<int>& others) {
  const int m = static_cast<int>(others.size()) + 2;
  if (a == b) throw std::invalid_argument("gadget_pair: a and b must differ");
  std::vector<bool> seen(static_cast<size_t>(m), false);
  if (a < 0 || a >= m || b < 0 || b >= m) throw std::invalid_argument("gadget_pair: index out of range");
  seen[static_cast<size_t>(a)] = seen[static_cast<size_t>(b)] = true;
  for (int c : others) {
    if (c < 0 || c >= m || seen[static_cast<size_t>(c)])
      throw std::invalid_argument("gadget_pair: others must list each remaining candidate once");
    seen[static_cast<size_t>(c)] = true;
  }

  std::vector<int> forward{a, b};
  forward.insert(forward.end(), others.begin(), others.end());
  std::vector<int> backward(others.rbegin(), others.rend());
  backward.push_back(a);
  backward.push_back(b);
  return {Ranking(std::move(forward)), Ranking(std::move(backward))};
}

Profile realize_margin_graph(const MarginGraph& g, const CandidateSet& candidates) {
  const int m = g.num_candidates();
  if (candidates.size() != m) throw std::invalid_argument("realize_margin_graph: label count mismatch");
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (g.weight(a, b) % 2 != 0) throw OddWeightError(candidates.name(a), candidates.name(b), g.weight(a, b));
    }
  }
  std::vector<VoteGroup> groups;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b || g.weight(a, b) <= 0) continue;
      long long pairs = g.weight(a, b) / 2;
      std::vector<int> others;
      others.reserve(static_cast<size_t>(m - 2));
      for (int c = 0; c < m; ++c) {
        if (c != a && c != b) others.push_back(c);
      }
      auto [fwd, bwd] = gadget_pair(a, b, others);
      groups.push_back({std::move(fwd), pairs});
      groups.push_back({std::move(bwd), pairs});
    }
  }
  return Profile(candidates, std::move(groups));
}

Profile realize_margin_graph(const MarginGraph& g) {
  return realize_margin_graph(g, CandidateSet(default_labels(g.num_candidates())));
}

namespace {

std::string_view trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string_view> whitespace_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

MarginFile parse_margin_file(std::string_view text) {
  std::optional<CandidateSet> cs;
  std::optional<MarginGraph> graph;
  std::vector<std::vector<bool>> assigned;
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
      size_t pos = kHeader.size();
      std::string_view rest = line.substr(pos);
      size_t from = 0;
      while (true) {
        size_t comma = rest.find(',', from);
        std::string_view part = comma == std::string_view::npos ? rest.substr(from)
                                                                : rest.substr(from, comma - from);
        auto t = trim(part);
        if (t.empty()) throw ParseError(lineno, "bad candidate label");
        names.emplace_back(t);
        if (comma == std::string_view::npos) break;
        from = comma + 1;
      }
      try {
        cs.emplace(std::move(names));
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
      graph.emplace(cs->size());
      assigned.assign(static_cast<size_t>(cs->size()),
                      std::vector<bool>(static_cast<size_t>(cs->size()), false));
      continue;
    }

    auto tokens = whitespace_tokens(line);
    if (tokens.size() != 3) throw ParseError(lineno, "expected '<label> <label> <weight>'");
    auto a = cs->index_of(tokens[0]);
    auto b = cs->index_of(tokens[1]);
    if (!a) throw ParseError(lineno, "unknown candidate '" + std::string(tokens[0]) + "'");
    if (!b) throw ParseError(lineno, "unknown candidate '" + std::string(tokens[1]) + "'");
    if (*a == *b) throw ParseError(lineno, "margin pair must name two distinct candidates");
    long long w = 0;
    for (char c : tokens[2]) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(lineno, "bad margin weight");
      w = w * 10 + (c - '0');
      if (w > (1LL << 40)) throw ParseError(lineno, "margin weight too large");
    }
    if (w < 1) throw ParseError(lineno, "margin weight must be positive");
    if (assigned[static_cast<size_t>(*a)][static_cast<size_t>(*b)])
      throw ParseError(lineno, "pair listed twice");
    assigned[static_cast<size_t>(*a)][static_cast<size_t>(*b)] = true;
    assigned[static_cast<size_t>(*b)][static_cast<size_t>(*a)] = true;
    graph->set_weight(*a, *b, w);
  }
  if (!cs) throw ParseError(lineno, "missing 'candidates:' header");
  return MarginFile{std::move(*cs), std::move(*graph)};
}

std::string render_margin_file(const CandidateSet& cs, const MarginGraph& g) {
  std::string out = "candidates: ";
  for (int i = 0; i < cs.size(); ++i) {
    if (i > 0) out += ",";
    out += cs.name(i);
  }
  out += "\n";
  for (int a = 0; a < g.num_candidates(); ++a) {
    for (int b = 0; b < g.num_candidates(); ++b) {
      if (a != b && g.weight(a, b) > 0) {
        out += cs.name(a) + " " + cs.name(b) + " " + std::to_string(g.weight(a, b)) + "\n";
      }
    }
  }
  return out;
}

}  // namespace votemle
