#pragma once

// Finite crystallographic Coxeter systems with exact integer arithmetic.
//
// Roots are integer vectors in the simple-root basis.  A root is positive iff
// all of its coordinates are >= 0.  Every root of the enumerated root system
// is also addressable by a dense `RootId`: positive roots occupy
// [0, N) and the negative of root k is k + N, where N = |Phi+|.  All hot
// paths (flips, root functions) work on ids through precomputed tables.
//
// Generators and positions are 1-based everywhere in the public interface.

#include <bitset>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace subword {

inline constexpr int kMaxRank = 10;
inline constexpr int kMaxRoots = 256;  // 2|Phi+| for every rank <= 10 type

/// Dense index of a root inside a CoxeterSystem's root table.
struct RootId {
  std::uint16_t value = 0;
  friend constexpr auto operator<=>(RootId, RootId) = default;
};

/// Set of roots indexed by RootId.
using RootSet = std::bitset<kMaxRoots>;

/// Root coordinates in the simple-root basis.
struct Root {
  std::vector<int> coords;

  bool is_positive() const;
  bool is_negative() const;
  bool is_zero() const;
  Root operator-() const;
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root& a, const Root& b) { return a.coords <=> b.coords; }
};

/// Word on the generators, 1-based indices.
using GenWord = std::vector<int>;

/// Group element stored as the matrix of its action on the simple roots
/// (column j is the image of alpha_j), together with the inverse matrix.
class Element {
 public:
  Element() = default;
  static Element identity(int rank);

  int rank() const { return rank_; }
  /// Entry (i, j), 0-based: coefficient of alpha_i in w(alpha_j).
  int at(int i, int j) const { return mat_[static_cast<std::size_t>(i * rank_ + j)]; }
  const std::vector<int>& matrix() const { return mat_; }
  const std::vector<int>& inverse_matrix() const { return inv_; }

  Element inverse() const;
  bool is_identity() const;

  friend bool operator==(const Element& a, const Element& b) { return a.mat_ == b.mat_; }

 private:
  friend class CoxeterSystem;
  int rank_ = 0;
  std::vector<int> mat_;
  std::vector<int> inv_;
};

struct ElementHash {
  std::size_t operator()(const Element& w) const noexcept;
};

/// A c-sorting word: letters, their 1-based positions inside c^infinity, and
/// the block (pass through c) each letter was taken from.
struct SortingWord {
  GenWord letters;
  std::vector<int> positions;
  std::vector<std::vector<int>> blocks;  // generators used in each pass
};

class CoxeterSystem {
 public:
  /// Parses a type descriptor such as "A3", "b4", "A2xA1", "E8".
  static CoxeterSystem from_spec(std::string_view spec);
  /// Builds a system from a Cartan matrix (row-major, rank x rank) where
  /// s_i(alpha_j) = alpha_j - a_ij alpha_i.  Throws if the matrix is not of
  /// finite type.
  static CoxeterSystem from_cartan(std::vector<int> cartan, int rank, std::string type_name);

  int rank() const { return rank_; }
  const std::string& type_name() const { return type_name_; }
  /// Cartan entry, 1-based generator indices.
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>((i - 1) * rank_ + (j - 1))]; }
  bool is_pure_type_a() const;

  int num_positive_roots() const { return npos_; }
  int num_roots() const { return 2 * npos_; }

  const Root& root(RootId id) const { return roots_[id.value]; }
  /// Throws std::invalid_argument when coords are not a root.
  RootId root_id(const Root& r) const;
  bool is_root(const Root& r) const;
  RootId simple_root(int s) const { return RootId{static_cast<std::uint16_t>(simple_ids_[static_cast<std::size_t>(s - 1)])}; }
  bool is_positive(RootId id) const { return id.value < npos_; }
  RootId negate(RootId id) const {
    return RootId{static_cast<std::uint16_t>(id.value < npos_ ? id.value + npos_ : id.value - npos_)};
  }
  RootId abs(RootId id) const { return is_positive(id) ? id : negate(id); }

  /// s_s(root), s 1-based.
  RootId act(int s, RootId id) const {
    return RootId{gen_table_[static_cast<std::size_t>((s - 1) * num_roots() + id.value)]};
  }
  /// s_beta(gamma).
  RootId reflect(RootId beta, RootId gamma) const {
    return RootId{refl_table_[static_cast<std::size_t>(abs(beta).value) * static_cast<std::size_t>(num_roots()) + gamma.value]};
  }

  /// Image of `beta` under the product q_1 ... q_k (q_k applied first).
  RootId apply_word(const GenWord& word, RootId beta) const;
  Root apply_word(const GenWord& word, const Root& beta) const;

  Element identity() const { return Element::identity(rank_); }
  Element element_of_word(const GenWord& word) const;
  /// w * s_s
  Element times_generator(const Element& w, int s) const;
  /// s_s * w
  Element generator_times(int s, const Element& w) const;
  Element multiply(const Element& a, const Element& b) const;

  Root apply(const Element& w, const Root& r) const;
  RootId apply(const Element& w, RootId id) const;
  Root apply_inverse(const Element& w, const Root& r) const;
  RootId apply_inverse(const Element& w, RootId id) const;

  /// l(w s) < l(w), i.e. w(alpha_s) < 0.
  bool is_right_descent(const Element& w, int s) const;
  /// l(s w) < l(w), i.e. w^{-1}(alpha_s) < 0.
  bool is_left_descent(const Element& w, int s) const;

  /// inv(w) = Phi+ intersected with w(Phi-), as positive root ids.
  RootSet inversions(const Element& w) const;
  std::vector<Root> inversion_roots(const Element& w) const;
  int length(const Element& w) const { return static_cast<int>(inversions(w).count()); }
  /// Inversion set read off a word: {alpha_{s1}, s1(alpha_{s2}), ...}.
  std::vector<RootId> word_inversion_sequence(const GenWord& word) const;
  bool is_reduced(const GenWord& word) const;

  /// A reduced word for w (greedy right descents).
  GenWord reduced_word(const Element& w) const;
  GenWord longest_element_word() const;
  Element longest_element() const;
  Element demazure_product(const GenWord& word) const;

  /// Right weak order: u <= w iff inv(u) is contained in inv(w).
  bool weak_le(const Element& u, const Element& w) const;

  /// The c-sorting word of w.  Throws std::invalid_argument when c does not
  /// use every generator exactly once.
  SortingWord sorting_word(const Element& w, const GenWord& c) const;
  bool is_sortable(const Element& w, const GenWord& c) const;

  /// All elements of W by breadth-first search on the right Cayley graph,
  /// identity first.  Throws CapExceeded beyond `cap` elements.
  std::vector<Element> enumerate_group(std::size_t cap = 1'000'000) const;

  void check_word(const GenWord& word) const;
  void check_coxeter_word(const GenWord& c) const;

 private:
  CoxeterSystem() = default;
  void build_roots();
  std::uint64_t pack(const std::vector<int>& coords) const;

  int rank_ = 0;
  std::string type_name_;
  std::vector<int> cartan_;
  int npos_ = 0;
  std::vector<Root> roots_;
  std::vector<int> simple_ids_;
  std::vector<std::uint16_t> gen_table_;
  std::vector<std::uint16_t> refl_table_;
  std::unordered_map<std::uint64_t, std::uint16_t> lookup_;
};

/// Parses "2,3,1" or "2 3 1" into a word; an empty string or "e" is empty.
GenWord parse_word(std::string_view text);
std::string format_word(const GenWord& word, char sep = ',');

}  // namespace subword
