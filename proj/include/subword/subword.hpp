#pragma once

// Subword complexes SC(Q, rho): facets, root functions, flips and the
// increasing flip graph with its two edge labelings.
//
// A facet I carries its root function r(I, k) = Pi_{[k-1] \ I}(alpha_{q_k})
// for every position k, so that a flip costs O((j - i) n) table lookups.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "subword/coxeter.hpp"
#include "subword/elgraph.hpp"
#include "subword/position_set.hpp"

namespace subword {

inline constexpr std::size_t kDefaultFacetCap = 1'000'000;

struct Facet {
  PositionSet positions;
  std::vector<RootId> roots;  // roots[k - 1] = r(I, k)

  RootId root(int k) const { return roots[static_cast<std::size_t>(k - 1)]; }
  friend bool operator==(const Facet&, const Facet&) = default;
};

struct FlippablePosition {
  int position;
  RootId root;
  int sign;  // +1 for an increasing flip
};

struct FlipResult {
  Facet facet;
  int j;
  int sign;
};

enum class Side { right, left };
enum class Exec { serial, parallel };

class SubwordComplex {
 public:
  /// Throws NotRepresentable unless Q contains a reduced expression of rho.
  SubwordComplex(std::shared_ptr<const CoxeterSystem> system, GenWord word, const Element& rho);

  const CoxeterSystem& system() const { return *system_; }
  const std::shared_ptr<const CoxeterSystem>& system_ptr() const { return system_; }
  const GenWord& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  int letter(int k) const { return word_[static_cast<std::size_t>(k - 1)]; }
  const Element& rho() const { return rho_; }
  const GenWord& rho_word() const { return rho_word_; }
  int rho_length() const { return rho_length_; }
  const RootSet& rho_inversions() const { return rho_inv_; }
  int facet_size() const { return size() - rho_length_; }
  /// Dense index of a positive root inside inv(rho), or -1.
  int inversion_slot(RootId id) const { return inv_slot_[id.value]; }

  /// Root function from scratch; any position set is accepted.
  RootId root_function(const PositionSet& I, int k) const;
  std::vector<RootId> root_function_array(const PositionSet& I) const;

  bool is_facet(const PositionSet& I) const;
  /// Validates I and attaches its roots; throws std::invalid_argument.
  Facet make_facet(const PositionSet& I) const;

  bool is_flippable(const Facet& F, int i) const;
  std::vector<FlippablePosition> flippable(const Facet& F) const;
  /// Flippable positions i of F with r(F, i): the root configuration R(F).
  std::vector<std::pair<int, RootId>> root_configuration(const Facet& F) const;

  /// Partner position j of a flippable i (0 when i is not flippable).
  int flip_partner(const Facet& F, int i) const;
  FlipResult flip(const Facet& F, int i) const;
  /// In-place flip; returns j.  Precondition: i flippable in F.
  int flip_in_place(Facet& F, int i) const;

 private:
  std::shared_ptr<const CoxeterSystem> system_;
  GenWord word_;
  Element rho_;
  GenWord rho_word_;
  int rho_length_ = 0;
  RootSet rho_inv_;
  std::array<std::int16_t, kMaxRoots> inv_slot_{};
};

SubwordComplex make_complex(std::shared_ptr<const CoxeterSystem> system, GenWord word, const GenWord& rho_word);

/// Absorbs letters q_last .. q_first on the right of v while they are right
/// descents.  Absorbed positions are added to `absorbed` when non-null.
Element absorb_right(const CoxeterSystem& sys, const GenWord& word, int first, int last, Element v,
                     PositionSet* absorbed = nullptr);
/// Absorbs letters q_first .. q_last on the left of v while they are left
/// descents.
Element absorb_left(const CoxeterSystem& sys, const GenWord& word, int first, int last, Element v,
                    PositionSet* absorbed = nullptr);

/// All facets, lexicographically sorted, by recursion on the last (right)
/// or first (left) letter.
std::vector<PositionSet> facets_inductive(const SubwordComplex& c, Side side);
/// Same recursion, streaming facets in recursion order.
void for_each_facet_inductive(const SubwordComplex& c, Side side,
                              const std::function<void(const PositionSet&)>& visit);

struct FlipEdge {
  int from;
  int to;
  int pos_label;  // position flipped out
  int neg_label;  // position flipped in
  RootId direction;
  friend bool operator==(const FlipEdge&, const FlipEdge&) = default;
};

enum class EdgeLabel { positive, negative };

struct LabeledFlipGraph {
  std::vector<Facet> facets;  // lexicographically sorted
  std::vector<FlipEdge> edges;  // sorted by (from, to)
  std::unordered_map<PositionSet, int, PositionSetHash> index;

  int index_of(const PositionSet& I) const;
  std::vector<int> in_degrees() const;
  el::LabeledDigraph digraph(EdgeLabel label) const;
};

/// Throws CapExceeded when the complex has more than `cap` facets.
LabeledFlipGraph flip_graph(const SubwordComplex& c, std::size_t cap = kDefaultFacetCap, Exec exec = Exec::serial);

/// h_k = number of facets with k incoming increasing flips; trailing zeros
/// dropped.
std::vector<long long> h_vector(const LabeledFlipGraph& g);
/// f_{-1}, f_0, ...: face counts by size, by subset enumeration.  Throws
/// CapExceeded for m > log2(cap).
std::vector<long long> face_f_vector(const SubwordComplex& c, std::uint64_t cap = 1ULL << 20);
/// h from f for a pure complex of facet size d; trailing zeros dropped.
std::vector<long long> h_from_f(const std::vector<long long>& f, int d);

/// SC(q_m ... q_1, rho^{-1}); facets correspond under PositionSet::reversed.
SubwordComplex reverse_complex(const SubwordComplex& c);
/// Checks that reversal maps facets bijectively.
bool verify_reversal(const SubwordComplex& c);

/// Demazure product of Q equals rho.
bool is_spherical(const SubwordComplex& c);

struct Restriction {
  std::shared_ptr<const CoxeterSystem> system;  // restricted root system
  std::shared_ptr<const SubwordComplex> complex;
  Facet facet;  // I'
  std::vector<int> positions;  // X = {x_1 < ... < x_p}
  std::vector<RootId> simple_roots;  // simple roots of the restriction, as roots of the ambient system
  std::vector<RootId> embedding;  // restricted RootId -> ambient RootId

  /// Ambient facet corresponding to a facet J' of the restriction.
  PositionSet lift(const PositionSet& J, const PositionSet& F0) const;
};

/// Restriction of c at F0 to the span of `spanning_roots`.
/// Throws std::invalid_argument on dependent roots or a span without roots.
Restriction restrict(const SubwordComplex& c, const Facet& F0, const std::vector<Root>& spanning_roots);

}  // namespace subword
