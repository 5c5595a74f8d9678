#pragma once

// Text artifacts: type-A networks, DOT digraphs and JSON summaries.

#include <string>
#include <vector>

#include "subword/greedy.hpp"

namespace subword {

/// Node id of a facet in DOT output: digits concatenated when m <= 9,
/// joined by '_' otherwise, "e" for the empty facet.
std::string facet_node_id(const PositionSet& I);

/// Edges carry pos=lambda+ and neg=lambda-.  Deterministic.
std::string graph_dot(const LabeledFlipGraph& g);
/// Edges point from child to father; the root is marked with root=true.
std::string tree_dot(const SpanningTreeResult& t, const LabeledFlipGraph& g);

struct NetworkResult {
  std::string ascii;
  std::vector<int> permutation;  // pseudoline arriving at each level on the right, bottom first
  int crossings = 0;
};

/// Primitive network of the word; with a facet, contacts are drawn with '|'
/// and crossings with 'X'.  Throws std::invalid_argument unless the system is
/// a single type-A component with standard numbering, or when `facet` does
/// not have the word's length as universe.
NetworkResult render_network(const SubwordComplex& c, const PositionSet* facet = nullptr);

/// One-line notation of a type-A element, read off its action on the simple
/// roots.
std::vector<int> one_line_notation(const CoxeterSystem& sys, const Element& w);

struct Stats {
  std::size_t facet_count = 0;
  std::vector<long long> h_vector;
  bool spherical = false;
  bool double_root_free = false;
  PositionSet greedy_positive, greedy_negative;
  long long mobius_p_n = 0;
};
Stats compute_stats(const SubwordComplex& c, std::size_t cap = kDefaultFacetCap);
std::string stats_json(const Stats& s);

}  // namespace subword
