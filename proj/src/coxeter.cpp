#include "subword/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "subword/errors.hpp"

namespace subword {

// ---------------------------------------------------------------------------
// Root

bool Root::is_positive() const {
  bool any = false;
  for (int c : coords) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

bool Root::is_negative() const {
  bool any = false;
  for (int c : coords) {
    if (c > 0) return false;
    any = any || c < 0;
  }
  return any;
}

bool Root::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Root Root::operator-() const {
  Root r{coords};
  for (int& c : r.coords) c = -c;
  return r;
}

// ---------------------------------------------------------------------------
// Element

Element Element::identity(int rank) {
  Element w;
  w.rank_ = rank;
  w.mat_.assign(static_cast<std::size_t>(rank * rank), 0);
  for (int i = 0; i < rank; ++i) w.mat_[static_cast<std::size_t>(i * rank + i)] = 1;
  w.inv_ = w.mat_;
  return w;
}

Element Element::inverse() const {
  Element w = *this;
  std::swap(w.mat_, w.inv_);
  return w;
}

bool Element::is_identity() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::size_t ElementHash::operator()(const Element& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : w.matrix()) {
    h ^= static_cast<std::size_t>(v + 64);
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Cartan matrices

namespace {

struct Component {
  char family;
  int rank;
};

std::vector<int> component_cartan(const Component& c) {
  const int n = c.rank;
  std::vector<int> a(static_cast<std::size_t>(n * n), 0);
  auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>((i - 1) * n + (j - 1))] = v; };
  for (int i = 1; i <= n; ++i) set(i, i, 2);
  auto bond = [&](int i, int j) {
    set(i, j, -1);
    set(j, i, -1);
  };
  switch (c.family) {
    case 'A':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      set(n, n - 1, -2);
      set(n - 1, n, -1);
      break;
    case 'C':  // alpha_n long
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      set(n - 1, n, -2);
      set(n, n - 1, -1);
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case 'E':
      bond(1, 3);
      bond(3, 4);
      bond(2, 4);
      for (int i = 4; i < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(1, 2);
      set(2, 3, -1);
      set(3, 2, -2);
      bond(3, 4);
      break;
    case 'G':  // alpha_1 short
      set(1, 2, -3);
      set(2, 1, -1);
      break;
    default:
      throw UnsupportedType(std::string("unsupported type family '") + c.family + "'");
  }
  return a;
}

// Rewrites degenerate labels (D2, D3, B1, C2, ...) into canonical ones.
std::vector<Component> normalize(Component c) {
  switch (c.family) {
    case 'A':
      if (c.rank < 1) break;
      return {c};
    case 'B':
    case 'C':
      if (c.rank < 1) break;
      if (c.rank == 1) return {{'A', 1}};
      if (c.rank == 2) return {{'B', 2}};
      return {c};
    case 'D':
      if (c.rank < 2) break;
      if (c.rank == 2) return {{'A', 1}, {'A', 1}};
      if (c.rank == 3) return {{'A', 3}};
      return {c};
    case 'E':
      if (c.rank >= 6 && c.rank <= 8) return {c};
      break;
    case 'F':
      if (c.rank == 4) return {c};
      break;
    case 'G':
      if (c.rank == 2) return {c};
      break;
    default:
      break;
  }
  throw UnsupportedType(std::string("unsupported type ") + c.family + std::to_string(c.rank));
}

std::vector<Component> parse_type(std::string_view spec) {
  std::vector<Component> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i]))) ++i;
  };
  skip_space();
  if (i == spec.size()) throw ParseError("empty type descriptor", 0);
  while (true) {
    skip_space();
    if (i >= spec.size()) throw ParseError("expected a type after 'x'", static_cast<int>(i));
    const std::size_t start = i;
    const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[i])));
    ++i;
    if (fam == 'H') throw UnsupportedType("non-crystallographic type H is unsupported");
    if (fam == 'I') {
      // I2(m): only the crystallographic dihedral groups are reachable.
      std::size_t close = spec.find(')', i);
      if (spec.substr(i, 2) != "2(" || close == std::string_view::npos)
        throw ParseError("expected I2(m)", static_cast<int>(start));
      int m = 0;
      try {
        m = std::stoi(std::string(spec.substr(i + 2, close - i - 2)));
      } catch (const std::exception&) {
        throw ParseError("bad dihedral order", static_cast<int>(i + 2));
      }
      i = close + 1;
      if (m == 2) {
        out.push_back({'A', 1});
        out.push_back({'A', 1});
      } else if (m == 3) {
        out.push_back({'A', 2});
      } else if (m == 4) {
        out.push_back({'B', 2});
      } else if (m == 6) {
        out.push_back({'G', 2});
      } else {
        throw UnsupportedType("non-crystallographic type I2(" + std::to_string(m) + ") is unsupported");
      }
    } else {
      if (fam < 'A' || fam > 'G') throw ParseError(std::string("unknown type family '") + spec[start] + "'", static_cast<int>(start));
      const std::size_t dstart = i;
      while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
      if (i == dstart) throw ParseError("expected a rank after the type letter", static_cast<int>(dstart));
      const int rank = std::stoi(std::string(spec.substr(dstart, i - dstart)));
      for (const auto& c : normalize({fam, rank})) out.push_back(c);
    }
    skip_space();
    if (i == spec.size()) break;
    if (spec[i] != 'x' && spec[i] != 'X' && spec[i] != '*')
      throw ParseError(std::string("unexpected character '") + spec[i] + "'", static_cast<int>(i));
    ++i;
  }
  return out;
}

}  // namespace

CoxeterSystem CoxeterSystem::from_spec(std::string_view spec) {
  const auto comps = parse_type(spec);
  int rank = 0;
  for (const auto& c : comps) rank += c.rank;
  if (rank > kMaxRank) throw UnsupportedType("total rank " + std::to_string(rank) + " exceeds " + std::to_string(kMaxRank));
  std::vector<int> cartan(static_cast<std::size_t>(rank * rank), 0);
  std::string name;
  int offset = 0;
  for (const auto& c : comps) {
    const auto block = component_cartan(c);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j)
        cartan[static_cast<std::size_t>((offset + i) * rank + offset + j)] = block[static_cast<std::size_t>(i * c.rank + j)];
    if (!name.empty()) name += 'x';
    name += c.family + std::to_string(c.rank);
    offset += c.rank;
  }
  return from_cartan(std::move(cartan), rank, std::move(name));
}

CoxeterSystem CoxeterSystem::from_cartan(std::vector<int> cartan, int rank, std::string type_name) {
  if (rank < 1 || rank > kMaxRank) throw UnsupportedType("rank must be in [1, 10]");
  if (cartan.size() != static_cast<std::size_t>(rank * rank)) throw std::invalid_argument("Cartan matrix has the wrong size");
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const int v = cartan[static_cast<std::size_t>(i * rank + j)];
      if (i == j ? v != 2 : v > 0) throw std::invalid_argument("not a Cartan matrix");
      if (i != j && (v == 0) != (cartan[static_cast<std::size_t>(j * rank + i)] == 0))
        throw std::invalid_argument("Cartan matrix zero pattern is not symmetric");
    }
  CoxeterSystem sys;
  sys.rank_ = rank;
  sys.type_name_ = std::move(type_name);
  sys.cartan_ = std::move(cartan);
  sys.build_roots();
  return sys;
}

bool CoxeterSystem::is_pure_type_a() const {
  return !type_name_.empty() && type_name_[0] == 'A' && type_name_.find('x') == std::string::npos;
}

std::uint64_t CoxeterSystem::pack(const std::vector<int>& coords) const {
  std::uint64_t key = 0;
  for (int c : coords) {
    assert(c > -8 && c < 8);
    key = (key << 4) | static_cast<std::uint64_t>(c + 8);
  }
  return key;
}

void CoxeterSystem::build_roots() {
  const int n = rank_;
  std::vector<Root> pos;
  std::vector<std::pair<int, int>> parent;  // (generator, parent index); (-1, j) for simple roots
  std::unordered_map<std::uint64_t, int> index;
  for (int j = 0; j < n; ++j) {
    Root r{std::vector<int>(static_cast<std::size_t>(n), 0)};
    r.coords[static_cast<std::size_t>(j)] = 1;
    index.emplace(pack(r.coords), static_cast<int>(pos.size()));
    pos.push_back(r);
    parent.emplace_back(-1, j);
  }
  auto reflect_coords = [&](int i, const std::vector<int>& v) {
    int dot = 0;
    for (int j = 0; j < n; ++j) dot += cartan_[static_cast<std::size_t>(i * n + j)] * v[static_cast<std::size_t>(j)];
    std::vector<int> out = v;
    out[static_cast<std::size_t>(i)] -= dot;
    return out;
  };
  for (std::size_t k = 0; k < pos.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      Root g{reflect_coords(i, pos[k].coords)};
      if (!g.is_positive() && !g.is_negative())
        throw std::invalid_argument("Cartan matrix is not of finite type (sign-incoherent root)");
      if (!g.is_positive()) continue;
      for (int c : g.coords)
        if (c > 7) throw std::invalid_argument("Cartan matrix is not of finite type");
      const auto key = pack(g.coords);
      if (index.count(key)) continue;
      if (pos.size() >= static_cast<std::size_t>(kMaxRoots / 2))
        throw std::invalid_argument("Cartan matrix is not of finite type (too many roots)");
      index.emplace(key, static_cast<int>(pos.size()));
      pos.push_back(std::move(g));
      parent.emplace_back(i, static_cast<int>(k));
    }
  }
  npos_ = static_cast<int>(pos.size());
  roots_ = pos;
  for (const auto& r : pos) roots_.push_back(-r);
  lookup_.clear();
  for (int k = 0; k < num_roots(); ++k) lookup_.emplace(pack(roots_[static_cast<std::size_t>(k)].coords), static_cast<std::uint16_t>(k));
  simple_ids_.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) simple_ids_[static_cast<std::size_t>(j)] = j;

  const int nr = num_roots();
  gen_table_.assign(static_cast<std::size_t>(n * nr), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < nr; ++k)
      gen_table_[static_cast<std::size_t>(i * nr + k)] = lookup_.at(pack(reflect_coords(i, roots_[static_cast<std::size_t>(k)].coords)));

  // s_beta for beta = s_i(beta') equals s_i s_beta' s_i; parents precede children.
  refl_table_.assign(static_cast<std::size_t>(npos_) * static_cast<std::size_t>(nr), 0);
  for (int b = 0; b < npos_; ++b) {
    const auto [gen, par] = parent[static_cast<std::size_t>(b)];
    for (int k = 0; k < nr; ++k) {
      std::uint16_t img;
      if (gen < 0) {
        img = gen_table_[static_cast<std::size_t>(par * nr + k)];
      } else {
        const auto sk = gen_table_[static_cast<std::size_t>(gen * nr + k)];
        const auto t = refl_table_[static_cast<std::size_t>(par) * static_cast<std::size_t>(nr) + sk];
        img = gen_table_[static_cast<std::size_t>(gen * nr + t)];
      }
      refl_table_[static_cast<std::size_t>(b) * static_cast<std::size_t>(nr) + static_cast<std::size_t>(k)] = img;
    }
  }
}

RootId CoxeterSystem::root_id(const Root& r) const {
  if (r.coords.size() != static_cast<std::size_t>(rank_)) throw std::invalid_argument("root has wrong dimension");
  for (int c : r.coords)
    if (c <= -8 || c >= 8) throw std::invalid_argument("vector is not a root");
  auto it = lookup_.find(pack(r.coords));
  if (it == lookup_.end()) throw std::invalid_argument("vector is not a root");
  return RootId{it->second};
}

bool CoxeterSystem::is_root(const Root& r) const {
  if (r.coords.size() != static_cast<std::size_t>(rank_)) return false;
  for (int c : r.coords)
    if (c <= -8 || c >= 8) return false;
  return lookup_.count(pack(r.coords)) > 0;
}

void CoxeterSystem::check_word(const GenWord& word) const {
  for (int s : word)
    if (s < 1 || s > rank_)
      throw std::out_of_range("generator index " + std::to_string(s) + " outside [1, " + std::to_string(rank_) + "]");
}

void CoxeterSystem::check_coxeter_word(const GenWord& c) const {
  check_word(c);
  std::vector<int> seen(static_cast<std::size_t>(rank_), 0);
  for (int s : c) ++seen[static_cast<std::size_t>(s - 1)];
  if (c.size() != static_cast<std::size_t>(rank_) || std::any_of(seen.begin(), seen.end(), [](int k) { return k != 1; }))
    throw std::invalid_argument("not a Coxeter word: every generator must appear exactly once");
}

RootId CoxeterSystem::apply_word(const GenWord& word, RootId beta) const {
  check_word(word);
  for (auto it = word.rbegin(); it != word.rend(); ++it) beta = act(*it, beta);
  return beta;
}

Root CoxeterSystem::apply_word(const GenWord& word, const Root& beta) const {
  return root(apply_word(word, root_id(beta)));
}

Element CoxeterSystem::times_generator(const Element& w, int s) const {
  const int n = rank_;
  const int si = s - 1;
  Element out = w;
  // Right factor: column l becomes col_l - a_{s,l} col_s.
  for (int l = 0; l < n; ++l) {
    const int a = cartan_[static_cast<std::size_t>(si * n + l)];
    if (a == 0) continue;
    for (int i = 0; i < n; ++i)
      out.mat_[static_cast<std::size_t>(i * n + l)] -= a * w.mat_[static_cast<std::size_t>(i * n + si)];
  }
  // Inverse gets the left factor: row s becomes row_s - sum_j a_{s,j} row_j.
  for (int c = 0; c < n; ++c) {
    int dot = 0;
    for (int j = 0; j < n; ++j) dot += cartan_[static_cast<std::size_t>(si * n + j)] * w.inv_[static_cast<std::size_t>(j * n + c)];
    out.inv_[static_cast<std::size_t>(si * n + c)] = w.inv_[static_cast<std::size_t>(si * n + c)] - dot;
  }
  return out;
}

Element CoxeterSystem::generator_times(int s, const Element& w) const {
  return times_generator(w.inverse(), s).inverse();
}

Element CoxeterSystem::multiply(const Element& a, const Element& b) const {
  const int n = rank_;
  Element out = Element::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int m = 0, v = 0;
      for (int k = 0; k < n; ++k) {
        m += a.mat_[static_cast<std::size_t>(i * n + k)] * b.mat_[static_cast<std::size_t>(k * n + j)];
        v += b.inv_[static_cast<std::size_t>(i * n + k)] * a.inv_[static_cast<std::size_t>(k * n + j)];
      }
      out.mat_[static_cast<std::size_t>(i * n + j)] = m;
      out.inv_[static_cast<std::size_t>(i * n + j)] = v;
    }
  return out;
}

Element CoxeterSystem::element_of_word(const GenWord& word) const {
  check_word(word);
  Element w = identity();
  for (int s : word) w = times_generator(w, s);
  return w;
}

namespace {
std::vector<int> mat_vec(const std::vector<int>& m, int n, const std::vector<int>& v) {
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int acc = 0;
    for (int j = 0; j < n; ++j) acc += m[static_cast<std::size_t>(i * n + j)] * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}
}  // namespace

Root CoxeterSystem::apply(const Element& w, const Root& r) const { return Root{mat_vec(w.mat_, rank_, r.coords)}; }
RootId CoxeterSystem::apply(const Element& w, RootId id) const { return root_id(apply(w, root(id))); }
Root CoxeterSystem::apply_inverse(const Element& w, const Root& r) const { return Root{mat_vec(w.inv_, rank_, r.coords)}; }
RootId CoxeterSystem::apply_inverse(const Element& w, RootId id) const { return root_id(apply_inverse(w, root(id))); }

bool CoxeterSystem::is_right_descent(const Element& w, int s) const {
  for (int i = 0; i < rank_; ++i) {
    const int v = w.mat_[static_cast<std::size_t>(i * rank_ + s - 1)];
    if (v != 0) return v < 0;
  }
  return false;
}

bool CoxeterSystem::is_left_descent(const Element& w, int s) const {
  for (int i = 0; i < rank_; ++i) {
    const int v = w.inv_[static_cast<std::size_t>(i * rank_ + s - 1)];
    if (v != 0) return v < 0;
  }
  return false;
}

RootSet CoxeterSystem::inversions(const Element& w) const {
  RootSet out;
  for (int k = 0; k < npos_; ++k)
    if (apply_inverse(w, roots_[static_cast<std::size_t>(k)]).is_negative()) out.set(static_cast<std::size_t>(k));
  return out;
}

std::vector<Root> CoxeterSystem::inversion_roots(const Element& w) const {
  std::vector<Root> out;
  const auto inv = inversions(w);
  for (int k = 0; k < npos_; ++k)
    if (inv.test(static_cast<std::size_t>(k))) out.push_back(roots_[static_cast<std::size_t>(k)]);
  return out;
}

std::vector<RootId> CoxeterSystem::word_inversion_sequence(const GenWord& word) const {
  check_word(word);
  std::vector<RootId> out;
  Element prefix = identity();
  for (int s : word) {
    std::vector<int> col(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) col[static_cast<std::size_t>(i)] = prefix.at(i, s - 1);
    out.push_back(root_id(Root{col}));
    prefix = times_generator(prefix, s);
  }
  return out;
}

bool CoxeterSystem::is_reduced(const GenWord& word) const {
  Element w = identity();
  for (int s : word) {
    if (is_right_descent(w, s)) return false;
    w = times_generator(w, s);
  }
  return true;
}

GenWord CoxeterSystem::reduced_word(const Element& w) const {
  GenWord rev;
  Element v = w;
  while (!v.is_identity()) {
    int s = 1;
    while (s <= rank_ && !is_right_descent(v, s)) ++s;
    if (s > rank_) throw IntegrityError("non-identity element without right descent");
    rev.push_back(s);
    v = times_generator(v, s);
  }
  return GenWord(rev.rbegin(), rev.rend());
}

GenWord CoxeterSystem::longest_element_word() const {
  GenWord word;
  Element w = identity();
  while (true) {
    int s = 1;
    while (s <= rank_ && is_right_descent(w, s)) ++s;
    if (s > rank_) break;
    word.push_back(s);
    w = times_generator(w, s);
  }
  return word;
}

Element CoxeterSystem::longest_element() const { return element_of_word(longest_element_word()); }

Element CoxeterSystem::demazure_product(const GenWord& word) const {
  check_word(word);
  Element w = identity();
  for (int s : word)
    if (!is_right_descent(w, s)) w = times_generator(w, s);
  return w;
}

bool CoxeterSystem::weak_le(const Element& u, const Element& w) const {
  const auto iu = inversions(u);
  return (iu & inversions(w)) == iu;
}

SortingWord CoxeterSystem::sorting_word(const Element& w, const GenWord& c) const {
  check_coxeter_word(c);
  SortingWord out;
  Element v = w;
  int pos = 0;
  while (!v.is_identity()) {
    std::vector<int> block;
    for (int s : c) {
      ++pos;
      if (is_left_descent(v, s)) {
        v = generator_times(s, v);
        out.letters.push_back(s);
        out.positions.push_back(pos);
        block.push_back(s);
      }
    }
    if (block.empty()) throw IntegrityError("sorting pass made no progress");
    out.blocks.push_back(std::move(block));
  }
  return out;
}

bool CoxeterSystem::is_sortable(const Element& w, const GenWord& c) const {
  const auto sw = sorting_word(w, c);
  for (std::size_t k = 1; k < sw.blocks.size(); ++k) {
    auto prev = sw.blocks[k - 1];
    auto cur = sw.blocks[k];
    std::sort(prev.begin(), prev.end());
    std::sort(cur.begin(), cur.end());
    if (!std::includes(prev.begin(), prev.end(), cur.begin(), cur.end())) return false;
  }
  return true;
}

std::vector<Element> CoxeterSystem::enumerate_group(std::size_t cap) const {
  std::vector<Element> elems{identity()};
  std::unordered_set<Element, ElementHash> seen{identity()};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (int s = 1; s <= rank_; ++s) {
      Element next = times_generator(elems[k], s);
      if (seen.insert(next).second) {
        if (elems.size() >= cap) throw CapExceeded("group order exceeds cap of " + std::to_string(cap));
        elems.push_back(std::move(next));
      }
    }
  }
  return elems;
}

// ---------------------------------------------------------------------------
// Word literals

GenWord parse_word(std::string_view text) {
  GenWord out;
  std::size_t i = 0;
  auto is_sep = [](char ch) { return ch == ',' || ch == ' ' || ch == '\t' || ch == '.'; };
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed.empty() || trimmed == "e" || trimmed == "\xCE\xB5" /* epsilon */) return out;
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError(std::string("unexpected character '") + text[i] + "' in word", static_cast<int>(i));
    const std::size_t start = i;
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000) throw ParseError("generator index too large", static_cast<int>(start));
      ++i;
    }
    if (v == 0) throw ParseError("generator indices are 1-based", static_cast<int>(start));
    out.push_back(v);
  }
  return out;
}

std::string format_word(const GenWord& word, char sep) {
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << sep;
    os << word[k];
  }
  return os.str();
}

}  // namespace subword
