#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subword {

/// Subset of the 1-based positions [m] of a word, m <= 1024.
///
/// Ordering is the lexicographic order of the ascending position sequences,
/// so that the smallest facet of a complex compares least.
class PositionSet {
 public:
  static constexpr int kMaxUniverse = 1024;

  PositionSet() = default;
  explicit PositionSet(int universe);
  static PositionSet from_positions(int universe, std::span<const int> positions);
  static PositionSet full(int universe);

  int universe() const { return universe_; }
  bool contains(int p) const {
    return p >= 1 && p <= universe_ && ((words_[static_cast<std::size_t>((p - 1) >> 6)] >> ((p - 1) & 63)) & 1U);
  }
  void insert(int p);
  void erase(int p);
  int size() const;
  bool empty() const;
  /// Smallest / largest element, 0 when empty.
  int min() const;
  int max() const;
  /// Smallest element > p, or 0.
  int next_after(int p) const;
  std::vector<int> to_vector() const;

  PositionSet operator-(const PositionSet& o) const;
  PositionSet operator&(const PositionSet& o) const;
  PositionSet operator|(const PositionSet& o) const;
  bool is_subset_of(const PositionSet& o) const;

  /// Shift every element by `delta`, dropping those leaving [1, new_universe].
  PositionSet shifted(int delta, int new_universe) const;
  /// Image under p -> universe + 1 - p.
  PositionSet reversed() const;

  /// "1 2 3 5 6"; the empty set prints as "∅".
  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const PositionSet& a, const PositionSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend bool operator<(const PositionSet& a, const PositionSet& b) { return a.lex_less(b); }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  bool lex_less(const PositionSet& o) const;
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PositionSetHash {
  std::size_t operator()(const PositionSet& s) const noexcept { return s.hash(); }
};

/// Parses "1 3 4 7 9", "{1,3,4,7,9}" or "∅" into a set over [universe].
PositionSet parse_positions(std::string_view text, int universe);

}  // namespace subword
