#pragma once

// Greedy facets P (unique source) and N (unique sink) of the increasing flip
// graph, and the four canonical spanning trees rooted at them.

#include <map>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "subword/subword.hpp"

namespace subword {

enum class Sign { positive, negative };
enum class GreedyMethod { sweep, recursion, graph };

/// sweep: absorption of inversions, right to left for P and left to right
/// for N.  recursion: letter-by-letter deletion, testing representability
/// of the remaining word.  graph: source / sink of the flip graph.
PositionSet greedy_facet(const SubwordComplex& c, Sign sign, GreedyMethod method = GreedyMethod::sweep);

/// Greedy facets of the subword complex on positions [first, last] of the
/// word with target v, over the universe [m] (positions keep their index).
PositionSet positive_greedy_range(const CoxeterSystem& sys, const GenWord& word, int first, int last, Element v);
PositionSet negative_greedy_range(const CoxeterSystem& sys, const GenWord& word, int first, int last, Element v);

struct GreedyFlipReport {
  bool negative_checked = false;  // m flippable in N
  bool negative_ok = true;
  PositionSet negative_flipped, negative_expected;  // over [m-1]
  bool positive_checked = false;  // 1 flippable in P
  bool positive_ok = true;
  PositionSet positive_flipped, positive_expected;  // over [m-1], shifted left
};
GreedyFlipReport greedy_flip_property(const SubwordComplex& c);

enum class TreeKind { PosSource, PosSink, NegSource, NegSink };
inline constexpr TreeKind kAllTreeKinds[] = {TreeKind::PosSource, TreeKind::PosSink, TreeKind::NegSource,
                                             TreeKind::NegSink};
/// "pos-source", "pos-sink", "neg-source", "neg-sink".
const char* tree_kind_name(TreeKind kind);
std::optional<TreeKind> parse_tree_kind(std::string_view name);
bool is_source_kind(TreeKind kind);
EdgeLabel tree_label(TreeKind kind);

/// Link from a facet to its father.  The flip-graph edge joins the two and
/// carries labels (lambda+, lambda-) = (smaller, larger) exchanged position.
struct FatherEdge {
  PositionSet facet;
  int pos_label;
  int neg_label;
  friend bool operator==(const FatherEdge&, const FatherEdge&) = default;
};
struct RootMarker {
  friend bool operator==(RootMarker, RootMarker) { return true; }
};
using FatherResult = std::variant<RootMarker, FatherEdge>;

/// Father rules; caches P and N of the complex.
class FatherRule {
 public:
  FatherRule(const SubwordComplex& c, TreeKind kind);
  FatherResult operator()(const Facet& F) const;
  TreeKind kind() const { return kind_; }
  const PositionSet& root() const { return is_source_kind(kind_) ? positive_ : negative_; }
  /// Position of F flipped to reach its father (0 at the root).
  int flipped_position(const Facet& F) const;

 private:
  const SubwordComplex& c_;
  TreeKind kind_;
  PositionSet positive_, negative_;
};

FatherResult father(const SubwordComplex& c, const Facet& F, TreeKind kind);

struct SpanningTreeResult {
  TreeKind kind;
  PositionSet root;
  std::map<PositionSet, FatherEdge> parent;  // child -> father

  std::size_t edge_count() const { return parent.size(); }
  friend bool operator==(const SpanningTreeResult& a, const SpanningTreeResult& b) {
    return a.kind == b.kind && a.root == b.root && a.parent == b.parent;
  }
};

/// Union of the rising paths of the kind's labeling, via elgraph.
SpanningTreeResult spanning_tree_direct(const SubwordComplex& c, TreeKind kind, std::size_t cap = kDefaultFacetCap);
SpanningTreeResult spanning_tree_direct(const SubwordComplex& c, const LabeledFlipGraph& g, TreeKind kind);
/// Father of every facet by the local rules.
SpanningTreeResult spanning_tree_fathers(const SubwordComplex& c, TreeKind kind, Exec exec = Exec::serial);
/// Recursive construction on the last (NegSink) or first (PosSource) letter.
/// Throws std::invalid_argument for the other kinds.
SpanningTreeResult spanning_tree_inductive(const SubwordComplex& c, TreeKind kind);

struct FallingSweep {
  std::vector<PositionSet> facets;  // P = facets.front()
  std::vector<int> pos_labels;
  std::vector<int> neg_labels;
};
/// Flips the positions of P in decreasing order.  Throws
/// std::invalid_argument when the complex is not spherical.
FallingSweep spherical_falling_sweep(const SubwordComplex& c);

}  // namespace subword
