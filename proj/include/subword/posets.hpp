#pragma once

// Increasing flip posets: double roots, falling paths, Möbius values,
// Cambrian lattices and duplicated words.

#include <cstdint>
#include <optional>
#include <vector>

#include "subword/greedy.hpp"

namespace subword {

/// The flip graph together with both labeled digraphs, the reachability
/// relation of its transitive closure and its Hasse diagram.
struct FlipPoset {
  LabeledFlipGraph graph;
  el::LabeledDigraph positive;  // labels lambda+
  el::LabeledDigraph negative;  // labels lambda-
  el::Reachability closure;
  el::LabeledDigraph hasse;  // lambda+ labels kept
  bool double_root_free = true;

  int size() const { return static_cast<int>(graph.facets.size()); }
  bool le(int a, int b) const { return closure.reaches(a, b); }
};

FlipPoset make_flip_poset(const SubwordComplex& c, std::size_t cap = kDefaultFacetCap);

struct DoubleRootWitness {
  PositionSet facet;
  int i = 0;
  int j = 0;
  RootId root;
};

struct DoubleRootReport {
  bool has_double_root = false;
  std::optional<DoubleRootWitness> witness;
  bool hasse_equals_graph = false;
  /// hasse_equals_graph == !has_double_root
  bool consistent() const { return hasse_equals_graph != has_double_root; }
};

/// Scans a facet list for two flippable positions with equal roots.
std::optional<DoubleRootWitness> find_double_root(const SubwordComplex& c, const std::vector<Facet>& facets);
DoubleRootReport double_root_report(const SubwordComplex& c, std::size_t cap = kDefaultFacetCap);
DoubleRootReport double_root_report(const SubwordComplex& c, const FlipPoset& p);

struct FallingData {
  std::uint64_t positive_count = 0;
  std::uint64_t negative_count = 0;
  std::optional<el::PathRecord> path;  // the lambda+-falling path when unique
};

FallingData falling_data(const FlipPoset& p, int from, int to);

/// (-1)^{|J \ I|} or 0 by the falling-path formula when double root free,
/// the recursive definition otherwise.
long long mobius_interval(const FlipPoset& p, int from, int to);
/// Recursive definition over the closure.
long long mobius_oracle(const FlipPoset& p, int from, int to);

struct IntersectionViolation {
  int from, to, between;
};
struct IntersectionReport {
  std::uint64_t triples_checked = 0;
  std::vector<IntersectionViolation> violations;
  bool ok() const { return violations.empty(); }
};
/// Every K in [I, J] contains I ∩ J.
IntersectionReport interval_intersection_check(const FlipPoset& p);

struct PathLengths {
  int max_length = 0;
  int min_length = 0;
  int rising_length = 0;
  std::optional<int> falling_length;
};
/// Lengths over all paths from `from` to `to`; throws std::invalid_argument
/// when `to` is not reachable.
PathLengths path_lengths(const FlipPoset& p, int from, int to);
/// Same, restricted to double root free posets.
PathLengths path_length_extremes(const FlipPoset& p, int from, int to);

/// Complex SC(c w0(c), w0) where w0(c) is the c-sorting word of w0.
SubwordComplex cambrian_complex(std::shared_ptr<const CoxeterSystem> sys, const GenWord& c);

/// Facet whose root configuration lies in w(Phi+), by scanning all facets.
class Kappa {
 public:
  /// Throws std::invalid_argument unless rho is the longest element.
  explicit Kappa(const SubwordComplex& c);
  /// Index into facets(); IntegrityError on zero or several matches.
  int index(const Element& w) const;
  PositionSet operator()(const Element& w) const { return facets_[static_cast<std::size_t>(index(w))].positions; }
  const std::vector<Facet>& facets() const { return facets_; }

 private:
  const SubwordComplex& c_;
  std::vector<Facet> facets_;
};

PositionSet kappa(const SubwordComplex& c, const Element& w);

struct CambrianCover {
  int lower;
  int upper;
  int km_label;  // first position of c^infinity used by upper but not lower
};

struct CambrianData {
  GenWord c;
  std::vector<Element> sortables;  // identity first
  std::vector<SortingWord> words;
  std::vector<CambrianCover> covers;
  el::LabeledDigraph km;  // Hasse diagram with the KM labels
  /// child -> parent: drop the last letter of the sorting word.
  el::ParentMap sorting_tree;
  bool is_lattice = false;

  int index_of(const Element& w) const;
};

/// Throws CapExceeded when |W| exceeds `group_cap`.
CambrianData cambrian(const CoxeterSystem& sys, const GenWord& c, std::size_t group_cap = 1'000'000);

struct CambrianIsomorphismReport {
  std::size_t group_size = 0;
  std::size_t facet_count = 0;
  std::size_t sortable_count = 0;
  bool fibers_have_minimum = false;
  bool minima_are_sortables = false;  // bijection facets <-> sortables
  bool order_isomorphic = false;
  std::vector<int> facet_to_sortable;  // facet index -> sortable index
  /// Tree edges (parent, child) present in one tree but not the other, both
  /// expressed as facet indices.
  std::vector<std::pair<int, int>> only_in_source_tree;
  std::vector<std::pair<int, int>> only_in_sorting_tree;

  bool ok() const { return fibers_have_minimum && minima_are_sortables && order_isomorphic; }
};

/// Throws IntegrityError when the fiber-minimum map is not an isomorphism.
CambrianIsomorphismReport verify_cambrian_isomorphism(std::shared_ptr<const CoxeterSystem> sys, const GenWord& c,
                                                      std::size_t group_cap = 1'000'000);

struct DuplicatedWord {
  SubwordComplex complex;
  std::vector<int> bullet;      // bullet[k - 1] = k•
  std::vector<int> duplicated;  // x• for x in X, ascending

  /// I_eps, bit t of eps for the t-th element of X.
  PositionSet facet_of(std::uint32_t eps) const;
};

/// Throws std::invalid_argument when rho_word is not reduced or X leaves
/// [|rho_word|].
DuplicatedWord duplicated_complex(std::shared_ptr<const CoxeterSystem> sys, const GenWord& rho_word,
                                  const PositionSet& X);

}  // namespace subword
