#pragma once

// Finite acyclic edge-labeled digraphs: monotone paths, ER/EL checks,
// rising-path spanning trees and Möbius functions.
//
// Vertex ids are 0..V-1 in insertion order.  Labels are positive integers.
// Path enumeration is exhaustive and meant for desk-scale verification.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace subword::el {

struct LabeledEdge {
  int source = 0;
  int target = 0;
  int label = 0;
  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

class LabeledDigraph {
 public:
  LabeledDigraph() = default;
  /// Throws std::invalid_argument on out-of-range ids, non-positive labels,
  /// duplicate (source, target) pairs, loops or cycles.
  LabeledDigraph(int num_vertices, std::vector<LabeledEdge> edges);

  int num_vertices() const { return n_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  /// Indices into edges() leaving / entering v, ascending edge index.
  std::span<const int> out_edges(int v) const;
  std::span<const int> in_edges(int v) const;
  const std::vector<int>& topological_order() const { return topo_; }
  std::vector<int> sources() const;
  std::vector<int> sinks() const;
  /// Index into edges() of (u,v), or -1.
  int find_edge(int u, int v) const;

  void check_vertex(int v) const;

 private:
  int n_ = 0;
  std::vector<LabeledEdge> edges_;
  std::vector<int> out_start_, out_idx_, in_start_, in_idx_;
  std::vector<int> topo_;
};

/// Dense reachability relation (reflexive), V^2 bits.
class Reachability {
 public:
  explicit Reachability(const LabeledDigraph& g);
  bool reaches(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1U;
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

enum class Monotone { rising, falling };

struct PathRecord {
  std::vector<int> vertices;
  std::vector<int> labels;
  friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

/// Rising = strictly increasing labels; falling = weakly decreasing.
std::vector<PathRecord> monotone_paths(const LabeledDigraph& g, int u, int v, Monotone mode);
/// Number of monotone paths, without materializing them.
std::uint64_t count_monotone_paths(const LabeledDigraph& g, int u, int v, Monotone mode);
/// Every path from u to v (exhaustive).
std::vector<PathRecord> all_paths(const LabeledDigraph& g, int u, int v);

enum class LabelingClass { neither, ER, EL };
const char* to_string(LabelingClass c);

/// Exhaustive-path oracle.  Throws CapExceeded when more than `path_budget`
/// paths would be walked.
LabelingClass check_labeling(const LabeledDigraph& g, std::uint64_t path_budget = 200'000'000);
/// Dynamic-programming checker: counts rising paths per pair and compares the
/// lexicographically first label sequence, without walking every path.
LabelingClass check_labeling_fast(const LabeledDigraph& g);

enum class TreeSide { source, sink };

/// child -> parent over the vertices reachable from (source) or reaching
/// (sink) the root, built from the unique rising paths.
using ParentMap = std::map<int, int>;
ParentMap spanning_tree(const LabeledDigraph& g, int root, TreeSide side);

/// Keeps (u,v) iff no other path from u to v exists.
LabeledDigraph hasse_of_closure(const LabeledDigraph& g);

enum class MobiusMode { recursive, falling };
/// Möbius function of the transitive closure of g; 0 when u does not reach v.
/// Falling mode requires hasse_of_closure(g) to be EL-labeled.
long long mobius(const LabeledDigraph& g, int u, int v, MobiusMode mode);

/// Directed d-cube, vertex id = bitmask with bit k-1 holding coordinate k;
/// edge label = the differing coordinate.  1 <= d <= 16.
LabeledDigraph cube_fixture(int d);

}  // namespace subword::el
