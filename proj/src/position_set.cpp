#include "subword/position_set.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "subword/errors.hpp"

namespace subword {

PositionSet::PositionSet(int universe) : universe_(universe) {
  if (universe < 0 || universe > kMaxUniverse) throw std::out_of_range("word length must be in [0, 1024]");
  words_.assign(static_cast<std::size_t>((universe + 63) / 64), 0);
}

PositionSet PositionSet::from_positions(int universe, std::span<const int> positions) {
  PositionSet s(universe);
  for (int p : positions) s.insert(p);
  return s;
}

PositionSet PositionSet::full(int universe) {
  PositionSet s(universe);
  for (int p = 1; p <= universe; ++p) s.insert(p);
  return s;
}

void PositionSet::insert(int p) {
  if (p < 1 || p > universe_) throw std::out_of_range("position " + std::to_string(p) + " outside [1, " + std::to_string(universe_) + "]");
  words_[static_cast<std::size_t>((p - 1) >> 6)] |= std::uint64_t{1} << ((p - 1) & 63);
}

void PositionSet::erase(int p) {
  if (p < 1 || p > universe_) throw std::out_of_range("position " + std::to_string(p) + " outside [1, " + std::to_string(universe_) + "]");
  words_[static_cast<std::size_t>((p - 1) >> 6)] &= ~(std::uint64_t{1} << ((p - 1) & 63));
}

int PositionSet::size() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool PositionSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

int PositionSet::min() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k]) return static_cast<int>(k * 64) + std::countr_zero(words_[k]) + 1;
  return 0;
}

int PositionSet::max() const {
  for (std::size_t k = words_.size(); k-- > 0;)
    if (words_[k]) return static_cast<int>(k * 64) + 63 - std::countl_zero(words_[k]) + 1;
  return 0;
}

int PositionSet::next_after(int p) const {
  if (p >= universe_) return 0;
  if (p < 0) p = 0;
  std::size_t k = static_cast<std::size_t>(p >> 6);
  std::uint64_t w = words_[k] & (~std::uint64_t{0} << (p & 63));
  // bit index p (0-based) is position p + 1
  while (true) {
    if (w) return static_cast<int>(k * 64) + std::countr_zero(w) + 1;
    if (++k >= words_.size()) return 0;
    w = words_[k];
  }
}

std::vector<int> PositionSet::to_vector() const {
  std::vector<int> out;
  for (int p = min(); p != 0; p = next_after(p)) out.push_back(p);
  return out;
}

PositionSet PositionSet::operator-(const PositionSet& o) const {
  PositionSet out = *this;
  for (std::size_t k = 0; k < words_.size() && k < o.words_.size(); ++k) out.words_[k] &= ~o.words_[k];
  return out;
}

PositionSet PositionSet::operator&(const PositionSet& o) const {
  PositionSet out = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= k < o.words_.size() ? o.words_[k] : 0;
  return out;
}

PositionSet PositionSet::operator|(const PositionSet& o) const {
  if (o.universe_ != universe_) throw std::invalid_argument("position sets over different universes");
  PositionSet out = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] |= o.words_[k];
  return out;
}

bool PositionSet::is_subset_of(const PositionSet& o) const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & ~(k < o.words_.size() ? o.words_[k] : 0)) return false;
  return true;
}

PositionSet PositionSet::shifted(int delta, int new_universe) const {
  PositionSet out(new_universe);
  for (int p = min(); p != 0; p = next_after(p)) {
    const int q = p + delta;
    if (q >= 1 && q <= new_universe) out.insert(q);
  }
  return out;
}

PositionSet PositionSet::reversed() const {
  PositionSet out(universe_);
  for (int p = min(); p != 0; p = next_after(p)) out.insert(universe_ + 1 - p);
  return out;
}

std::string PositionSet::to_string() const {
  if (empty()) return "\xE2\x88\x85";
  std::ostringstream os;
  bool first = true;
  for (int p = min(); p != 0; p = next_after(p)) {
    if (!first) os << ' ';
    os << p;
    first = false;
  }
  return os.str();
}

std::size_t PositionSet::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(universe_) * 0x9E3779B97F4A7C15ULL;
  for (auto w : words_) {
    h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool PositionSet::lex_less(const PositionSet& o) const {
  const std::size_t n = std::max(words_.size(), o.words_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto a = k < words_.size() ? words_[k] : 0;
    const auto b = k < o.words_.size() ? o.words_[k] : 0;
    const auto diff = a ^ b;
    if (!diff) continue;
    const int bit = std::countr_zero(diff);
    const int d = static_cast<int>(k * 64) + bit + 1;
    // The sequences agree below d.  The one holding d is smaller unless the
    // other has run out of elements.
    if (contains(d)) return o.next_after(d) != 0;
    return next_after(d) == 0;
  }
  return false;
}

PositionSet parse_positions(std::string_view text, int universe) {
  PositionSet out(universe);
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ' || ch == ',' || ch == '{' || ch == '}' || ch == '\t' || ch == '[' || ch == ']') {
      ++i;
      continue;
    }
    if (text.substr(i, 3) == "\xE2\x88\x85") {
      i += 3;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError(std::string("unexpected character '") + ch + "' in position set", static_cast<int>(i));
    const std::size_t start = i;
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > PositionSet::kMaxUniverse) break;
      ++i;
    }
    if (v < 1 || v > universe)
      throw ParseError("position " + std::to_string(v) + " outside [1, " + std::to_string(universe) + "]", static_cast<int>(start));
    if (out.contains(v)) throw ParseError("repeated position " + std::to_string(v), static_cast<int>(start));
    out.insert(v);
  }
  return out;
}

}  // namespace subword
