#pragma once

// Greedy flip algorithm: facets streamed by a depth-first search of the
// positive sink tree (root N) or the negative source tree (root P).
//
// The search keeps no stack and no visited set.  Going up the tree applies
// the father rule (flip min(F \ N), resp. max(F \ P)), and the position that
// comes back tells the search where to resume among the father's children.
//
// Live state is the current facet with its root function, the partner index
// of complement roots, the root facet and two counters.  Excluding output it
// stays below kLiveStateConstant * m * n + m + 2 integers.

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "subword/greedy.hpp"

namespace subword {

inline constexpr int kLiveStateConstant = 4;

struct ChildFlip {
  Facet facet;
  int flipped_out;  // position of the parent leaving
  int flipped_in;   // position entering
};

/// Children of F in the PosSink or NegSource tree, ascending flipped_out.
std::vector<ChildFlip> children(const SubwordComplex& c, const Facet& F, TreeKind kind);

struct StreamCounters {
  std::uint64_t yielded = 0;
  std::uint64_t flips = 0;
  std::uint64_t candidate_tests = 0;
  std::uint64_t max_candidate_tests_per_facet = 0;
  std::size_t max_live_ints = 0;
  int max_depth = 0;
};

class FacetStream {
 public:
  /// kind must be PosSink or NegSource.
  FacetStream(const SubwordComplex& c, TreeKind kind);
  /// Stream restricted to the subtree below `start`.
  FacetStream(const SubwordComplex& c, TreeKind kind, const Facet& start);

  /// Advances to the next facet in preorder; the first call yields the start.
  bool next();
  const Facet& current() const { return cur_; }
  int depth() const { return depth_; }
  const StreamCounters& counters() const { return counters_; }
  /// Integers of mutable state currently held (facet, roots, indexes, root
  /// facet, counters).
  std::size_t live_ints() const;
  /// Upper bound kLiveStateConstant * m * n + m + 2.
  std::size_t live_bound() const;

 private:
  void init(const Facet& start);
  int find_child(int from) const;
  int flip(int i);

  const SubwordComplex& c_;
  TreeKind kind_;
  PositionSet root_;             // N or P
  Facet cur_;
  std::vector<std::int16_t> partner_;  // inv(rho) slot -> complement position
  bool started_ = false;
  bool done_ = false;
  int resume_ = 1;
  int depth_ = 0;
  mutable StreamCounters counters_;
};

/// Visits every facet once, in preorder.
StreamCounters stream_facets(const SubwordComplex& c, TreeKind kind, const std::function<void(const Facet&)>& visit);
/// Preorder list of facet positions.  Parallel mode splits the root's
/// subtrees among OpenMP threads and concatenates in the serial order.
std::vector<PositionSet> stream_facet_list(const SubwordComplex& c, TreeKind kind, Exec exec = Exec::serial);

struct BenchmarkReport {
  int m = 0;
  int rank = 0;
  std::uint64_t facets_greedy = 0;
  std::uint64_t facets_inductive = 0;
  double greedy_ns_per_facet = 0;     // median over repetitions
  double inductive_ns_per_facet = 0;  // median over repetitions
  double parallel_ns_per_facet = 0;   // median, parallel stream
  std::size_t peak_live_ints = 0;
  std::size_t live_bound = 0;
  int repetitions = 0;
};

BenchmarkReport benchmark(const SubwordComplex& c, int repetitions, TreeKind kind = TreeKind::PosSink);

}  // namespace subword
