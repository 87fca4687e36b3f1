#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "votemle/core.hpp"

namespace votemle {

// Raised when a margin graph has an odd edge and cannot be realized.
class OddWeightError : public std::invalid_argument {
 public:
  OddWeightError(const std::string& a, const std::string& b, long long w)
      : std::invalid_argument("odd margin weight " + std::to_string(w) + " on pair (" + a + "," + b + ")") {}
};

// The two votes that raise margin(a,b) by exactly 2 and leave every other
// margin unchanged: a>b>others and reversed(others)>a>b.
std::pair<Ranking, Ranking> gadget_pair(int a, int b, const std::vector<int>& others);

// Builds a profile whose margins equal g exactly. Every weight must be even;
// positive edges are processed in ascending (a,b) order, contributing
// weight/2 gadget pairs each. Labels default to a,b,c,...
Profile realize_margin_graph(const MarginGraph& g);
Profile realize_margin_graph(const MarginGraph& g, const CandidateSet& candidates);

// Margin text format:
//   # comment
//   candidates: a,b,c
//   a b 4
// Each listed pair sets margin(first,second); unlisted pairs stay 0.
struct MarginFile {
  CandidateSet candidates;
  MarginGraph graph;
};

MarginFile parse_margin_file(std::string_view text);
std::string render_margin_file(const CandidateSet& cs, const MarginGraph& g);

}  // namespace votemle
