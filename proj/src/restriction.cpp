#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "subword/errors.hpp"
#include "subword/subword.hpp"

namespace subword {

namespace {

// Rank of an integer matrix (rows given), by fraction-free elimination.
int integer_rank(std::vector<std::vector<long long>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const long long a = p[col];
      const long long b = rows[r][col];
      long long g = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = rows[r][k] * a - p[k] * b;
        g = std::gcd(g, rows[r][k]);
      }
      if (g > 1)
        for (auto& x : rows[r]) x /= g;
    }
    ++rank;
  }
  return rank;
}

std::vector<long long> widen(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Irreducible type names of a finite-type Cartan matrix, joined with 'x'.
std::string classify_cartan(const std::vector<int>& a, int n) {
  auto at = [&](int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; };
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::string name;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> nodes{start};
    comp[static_cast<std::size_t>(start)] = start;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (j != nodes[k] && at(nodes[k], j) != 0 && comp[static_cast<std::size_t>(j)] < 0) {
          comp[static_cast<std::size_t>(j)] = start;
          nodes.push_back(j);
        }
    const int r = static_cast<int>(nodes.size());
    auto degree = [&](int v) {
      int d = 0;
      for (int j : nodes)
        if (j != v && at(v, j) != 0) ++d;
      return d;
    };
    std::string part;
    int triple = -1, dbl_i = -1, dbl_j = -1, branch = -1;
    for (int i : nodes)
      for (int j : nodes) {
        if (i == j) continue;
        const int prod = at(i, j) * at(j, i);
        if (prod == 3) triple = i;
        if (prod == 2 && at(i, j) == -2) {
          dbl_i = i;
          dbl_j = j;
        }
      }
    for (int v : nodes)
      if (degree(v) == 3) branch = v;
    if (triple >= 0) {
      part = "G2";
    } else if (dbl_i >= 0) {
      // a_{ij} = -2: alpha_i is the short root of the double bond.
      if (r == 2)
        part = "B2";
      else if (r == 4 && degree(dbl_i) == 2 && degree(dbl_j) == 2)
        part = "F4";
      else
        part = (degree(dbl_i) == 1 ? "B" : "C") + std::to_string(r);
    } else if (branch < 0) {
      part = "A" + std::to_string(r);
    } else {
      std::vector<int> arms;
      for (int j : nodes) {
        if (j == branch || at(branch, j) == 0) continue;
        int len = 1, prev = branch, cur = j;
        while (true) {
          int nxt = -1;
          for (int k : nodes)
            if (k != cur && k != prev && at(cur, k) != 0) nxt = k;
          if (nxt < 0) break;
          prev = cur;
          cur = nxt;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1)
        part = "D" + std::to_string(r);
      else
        part = "E" + std::to_string(r);
    }
    if (!name.empty()) name += 'x';
    name += part;
  }
  return name;
}

}  // namespace

PositionSet Restriction::lift(const PositionSet& J, const PositionSet& F0) const {
  PositionSet out = F0;
  for (int x : positions) out.erase(x);
  for (int k = J.min(); k != 0; k = J.next_after(k)) out.insert(positions[static_cast<std::size_t>(k - 1)]);
  return out;
}

Restriction restrict(const SubwordComplex& c, const Facet& F0, const std::vector<Root>& spanning_roots) {
  const auto& sys = c.system();
  const int n = sys.rank();
  if (!c.is_facet(F0.positions)) throw std::invalid_argument("restriction needs a facet");
  std::vector<std::vector<long long>> basis;
  for (const auto& r : spanning_roots) {
    if (static_cast<int>(r.coords.size()) != n) throw std::invalid_argument("spanning root has wrong dimension");
    basis.push_back(widen(r.coords));
  }
  const int dim = integer_rank(basis);
  if (dim != static_cast<int>(basis.size()) || dim == 0) throw std::invalid_argument("dependent spanning roots");
  auto in_span = [&](const Root& r) {
    auto rows = basis;
    rows.push_back(widen(r.coords));
    return integer_rank(std::move(rows)) == dim;
  };

  std::vector<RootId> sub_pos;
  for (int k = 0; k < sys.num_positive_roots(); ++k) {
    const RootId id{static_cast<std::uint16_t>(k)};
    if (in_span(sys.root(id))) sub_pos.push_back(id);
  }
  if (sub_pos.empty()) throw std::invalid_argument("span contains no root");
  std::vector<bool> in_sub(static_cast<std::size_t>(sys.num_roots()), false);
  for (RootId id : sub_pos) {
    in_sub[id.value] = true;
    in_sub[sys.negate(id).value] = true;
  }

  std::vector<RootId> simple;
  for (RootId b : sub_pos) {
    bool ok = true;
    for (RootId g : sub_pos)
      if (g != b && !sys.is_positive(sys.reflect(b, g))) {
        ok = false;
        break;
      }
    if (ok) simple.push_back(b);
  }
  std::sort(simple.begin(), simple.end(), [&](RootId a, RootId b) { return sys.root(b) < sys.root(a); });
  const int r = static_cast<int>(simple.size());

  std::vector<int> cartan(static_cast<std::size_t>(r * r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Root& ai = sys.root(simple[static_cast<std::size_t>(i)]);
      const Root& aj = sys.root(simple[static_cast<std::size_t>(j)]);
      const Root& img = sys.root(sys.reflect(simple[static_cast<std::size_t>(i)], simple[static_cast<std::size_t>(j)]));
      int value = 0;
      for (int k = 0; k < n; ++k)
        if (ai.coords[static_cast<std::size_t>(k)] != 0) {
          value = (aj.coords[static_cast<std::size_t>(k)] - img.coords[static_cast<std::size_t>(k)]) /
                  ai.coords[static_cast<std::size_t>(k)];
          break;
        }
      cartan[static_cast<std::size_t>(i * r + j)] = value;
    }
  auto sub = std::make_shared<const CoxeterSystem>(CoxeterSystem::from_cartan(cartan, r, classify_cartan(cartan, r)));
  if (sub->num_positive_roots() != static_cast<int>(sub_pos.size()))
    throw IntegrityError("restricted root system does not match the roots in the span");

  Restriction out;
  out.system = sub;
  out.simple_roots = simple;
  out.embedding.resize(static_cast<std::size_t>(sub->num_roots()));
  std::vector<int> back(static_cast<std::size_t>(sys.num_roots()), -1);
  for (int t = 0; t < sub->num_roots(); ++t) {
    const RootId tid{static_cast<std::uint16_t>(t)};
    std::vector<int> coords(static_cast<std::size_t>(n), 0);
    const Root& rt = sub->root(tid);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < n; ++k)
        coords[static_cast<std::size_t>(k)] += rt.coords[static_cast<std::size_t>(i)] *
                                               sys.root(simple[static_cast<std::size_t>(i)]).coords[static_cast<std::size_t>(k)];
    const RootId amb = sys.root_id(Root{coords});
    if (!in_sub[amb.value]) throw IntegrityError("restricted root leaves the span");
    out.embedding[static_cast<std::size_t>(t)] = amb;
    back[amb.value] = t;
  }

  GenWord word;
  std::vector<int> in_facet;
  Element w = sub->identity();
  for (int k = 1; k <= c.size(); ++k) {
    const RootId rk = F0.root(k);
    if (!in_sub[rk.value]) continue;
    out.positions.push_back(k);
    const RootId local = sub->apply_inverse(w, RootId{static_cast<std::uint16_t>(back[rk.value])});
    int letter = 0;
    for (int s = 1; s <= r; ++s)
      if (sub->simple_root(s) == local) letter = s;
    if (!letter) throw IntegrityError("restricted letter is not a simple root");
    word.push_back(letter);
    if (F0.positions.contains(k))
      in_facet.push_back(static_cast<int>(word.size()));
    else
      w = sub->times_generator(w, letter);
  }
  out.complex = std::make_shared<const SubwordComplex>(sub, word, w);
  out.facet = out.complex->make_facet(PositionSet::from_positions(static_cast<int>(word.size()), in_facet));
  for (std::size_t k = 0; k < word.size(); ++k)
    if (out.embedding[out.facet.roots[k].value] != F0.root(out.positions[k]))
      throw IntegrityError("restricted root function disagrees with the ambient one");
  return out;
}

}  // namespace subword
