#include "subword/elgraph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>

#include "subword/errors.hpp"

namespace subword::el {

namespace {

void build_csr(int n, const std::vector<LabeledEdge>& edges, bool outgoing, std::vector<int>& start,
               std::vector<int>& idx) {
  start.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : edges) ++start[static_cast<std::size_t>(outgoing ? e.source : e.target) + 1];
  for (int v = 0; v < n; ++v) start[static_cast<std::size_t>(v) + 1] += start[static_cast<std::size_t>(v)];
  idx.assign(edges.size(), 0);
  std::vector<int> fill(start.begin(), start.end() - 1);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const int v = outgoing ? edges[k].source : edges[k].target;
    idx[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = static_cast<int>(k);
  }
}

// Vertices that reach v, as a flag vector.
std::vector<char> co_reach(const LabeledDigraph& g, int v) {
  std::vector<char> mark(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<int> todo{v};
  mark[static_cast<std::size_t>(v)] = 1;
  while (!todo.empty()) {
    const int x = todo.back();
    todo.pop_back();
    for (int e : g.in_edges(x)) {
      const int y = g.edges()[static_cast<std::size_t>(e)].source;
      if (!mark[static_cast<std::size_t>(y)]) {
        mark[static_cast<std::size_t>(y)] = 1;
        todo.push_back(y);
      }
    }
  }
  return mark;
}

bool admissible(Monotone mode, bool has_last, int last, int label) {
  if (!has_last) return true;
  return mode == Monotone::rising ? label > last : label <= last;
}

// Depth-first walk over the monotone paths u -> v; `visit` sees each one.
template <class Visit>
void walk_monotone(const LabeledDigraph& g, int u, int v, Monotone mode, Visit&& visit) {
  const auto useful = co_reach(g, v);
  if (!useful[static_cast<std::size_t>(u)]) return;
  PathRecord path;
  path.vertices.push_back(u);
  struct Frame {
    int vertex;
    std::size_t next;
  };
  std::vector<Frame> stack{{u, 0}};
  if (u == v) visit(path);
  while (!stack.empty()) {
    auto& top = stack.back();
    const auto outs = g.out_edges(top.vertex);
    if (top.next >= outs.size()) {
      stack.pop_back();
      path.vertices.pop_back();
      if (!path.labels.empty()) path.labels.pop_back();
      continue;
    }
    const auto& e = g.edges()[static_cast<std::size_t>(outs[top.next++])];
    if (!useful[static_cast<std::size_t>(e.target)]) continue;
    if (!admissible(mode, !path.labels.empty(), path.labels.empty() ? 0 : path.labels.back(), e.label)) continue;
    path.vertices.push_back(e.target);
    path.labels.push_back(e.label);
    if (e.target == v) visit(path);
    stack.push_back({e.target, 0});
  }
}

}  // namespace

LabeledDigraph::LabeledDigraph(int num_vertices, std::vector<LabeledEdge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges_.size());
  for (const auto& e : edges_) {
    check_vertex(e.source);
    check_vertex(e.target);
    if (e.source == e.target) throw std::invalid_argument("loop at vertex " + std::to_string(e.source));
    if (e.label <= 0) throw std::invalid_argument("edge labels must be positive");
    pairs.emplace_back(e.source, e.target);
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
    throw std::invalid_argument("duplicate edge");
  build_csr(n_, edges_, true, out_start_, out_idx_);
  build_csr(n_, edges_, false, in_start_, in_idx_);

  std::vector<int> indeg(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_) ++indeg[static_cast<std::size_t>(e.target)];
  std::deque<int> ready;
  for (int v = 0; v < n_; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  topo_.reserve(static_cast<std::size_t>(n_));
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop_front();
    topo_.push_back(v);
    for (int k : out_edges(v)) {
      const int t = edges_[static_cast<std::size_t>(k)].target;
      if (--indeg[static_cast<std::size_t>(t)] == 0) ready.push_back(t);
    }
  }
  if (static_cast<int>(topo_.size()) != n_) throw std::invalid_argument("graph has a directed cycle");
}

std::span<const int> LabeledDigraph::out_edges(int v) const {
  const auto b = static_cast<std::size_t>(out_start_[static_cast<std::size_t>(v)]);
  const auto e = static_cast<std::size_t>(out_start_[static_cast<std::size_t>(v) + 1]);
  return std::span<const int>(out_idx_).subspan(b, e - b);
}

std::span<const int> LabeledDigraph::in_edges(int v) const {
  const auto b = static_cast<std::size_t>(in_start_[static_cast<std::size_t>(v)]);
  const auto e = static_cast<std::size_t>(in_start_[static_cast<std::size_t>(v) + 1]);
  return std::span<const int>(in_idx_).subspan(b, e - b);
}

std::vector<int> LabeledDigraph::sources() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (in_edges(v).empty()) out.push_back(v);
  return out;
}

std::vector<int> LabeledDigraph::sinks() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (out_edges(v).empty()) out.push_back(v);
  return out;
}

int LabeledDigraph::find_edge(int u, int v) const {
  for (int k : out_edges(u))
    if (edges_[static_cast<std::size_t>(k)].target == v) return k;
  return -1;
}

void LabeledDigraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
}

Reachability::Reachability(const LabeledDigraph& g)
    : words_((static_cast<std::size_t>(g.num_vertices()) + 63) / 64),
      bits_(words_ * static_cast<std::size_t>(g.num_vertices()), 0) {
  const auto& topo = g.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const auto u = static_cast<std::size_t>(*it);
    std::uint64_t* row = &bits_[u * words_];
    row[u >> 6] |= std::uint64_t{1} << (u & 63);
    for (int k : g.out_edges(*it)) {
      const auto t = static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(k)].target);
      const std::uint64_t* trow = &bits_[t * words_];
      for (std::size_t w = 0; w < words_; ++w) row[w] |= trow[w];
    }
  }
}

std::vector<PathRecord> monotone_paths(const LabeledDigraph& g, int u, int v, Monotone mode) {
  g.check_vertex(u);
  g.check_vertex(v);
  std::vector<PathRecord> out;
  walk_monotone(g, u, v, mode, [&](const PathRecord& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_monotone_paths(const LabeledDigraph& g, int u, int v, Monotone mode) {
  g.check_vertex(u);
  g.check_vertex(v);
  std::uint64_t n = 0;
  walk_monotone(g, u, v, mode, [&](const PathRecord&) { ++n; });
  return n;
}

std::vector<PathRecord> all_paths(const LabeledDigraph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  const auto useful = co_reach(g, v);
  std::vector<PathRecord> out;
  if (!useful[static_cast<std::size_t>(u)]) return out;
  PathRecord path;
  path.vertices.push_back(u);
  std::vector<std::pair<int, std::size_t>> stack{{u, 0}};
  if (u == v) out.push_back(path);
  while (!stack.empty()) {
    auto& [x, next] = stack.back();
    const auto outs = g.out_edges(x);
    if (next >= outs.size()) {
      stack.pop_back();
      path.vertices.pop_back();
      if (!path.labels.empty()) path.labels.pop_back();
      continue;
    }
    const auto& e = g.edges()[static_cast<std::size_t>(outs[next++])];
    if (!useful[static_cast<std::size_t>(e.target)]) continue;
    path.vertices.push_back(e.target);
    path.labels.push_back(e.label);
    if (e.target == v) out.push_back(path);
    stack.emplace_back(e.target, 0);
  }
  return out;
}

const char* to_string(LabelingClass c) {
  switch (c) {
    case LabelingClass::EL: return "EL";
    case LabelingClass::ER: return "ER";
    case LabelingClass::neither: return "neither";
  }
  return "neither";
}

LabelingClass check_labeling(const LabeledDigraph& g, std::uint64_t path_budget) {
  const int n = g.num_vertices();
  bool er = true;
  bool el = true;
  std::uint64_t walked = 0;
  std::vector<int> rising_count(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> rising_seq(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> lex_min(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int u = 0; u < n && er; ++u) {
    std::fill(rising_count.begin(), rising_count.end(), 0);
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> labels;
    // Depth of the longest rising prefix of `labels`.
    std::vector<int> rising_prefix{0};
    std::vector<std::pair<int, std::size_t>> stack{{u, 0}};
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      const auto outs = g.out_edges(x);
      if (next >= outs.size()) {
        stack.pop_back();
        if (!labels.empty()) {
          labels.pop_back();
          rising_prefix.pop_back();
        }
        continue;
      }
      const auto& e = g.edges()[static_cast<std::size_t>(outs[next++])];
      if (++walked > path_budget) throw CapExceeded("path budget exhausted in exhaustive labeling check");
      const bool rising = rising_prefix.back() == static_cast<int>(labels.size()) &&
                          (labels.empty() || e.label > labels.back());
      labels.push_back(e.label);
      rising_prefix.push_back(rising ? static_cast<int>(labels.size()) : rising_prefix.back());
      const auto t = static_cast<std::size_t>(e.target);
      if (rising) {
        ++rising_count[t];
        rising_seq[t] = labels;
      }
      if (!seen[t] || labels < lex_min[t]) lex_min[t] = labels;
      seen[t] = 1;
      stack.emplace_back(e.target, 0);
    }
    for (int v = 0; v < n; ++v) {
      const auto t = static_cast<std::size_t>(v);
      if (!seen[t]) continue;
      if (rising_count[t] != 1) {
        er = false;
        break;
      }
      if (rising_seq[t] != lex_min[t]) el = false;
    }
  }
  if (!er) return LabelingClass::neither;
  return el ? LabelingClass::EL : LabelingClass::ER;
}

LabelingClass check_labeling_fast(const LabeledDigraph& g) {
  const int n = g.num_vertices();
  const auto& topo = g.topological_order();
  const auto N = static_cast<std::size_t>(n);
  // reach[u*N+v]: 0 unreachable, 1 reachable with rising lex-first sequence,
  // 2 reachable with non-rising lex-first sequence.
  std::vector<char> reach(N * N, 0);
  std::vector<std::vector<int>> best(N);
  std::vector<char> defined(N);
  for (int v = 0; v < n; ++v) {
    std::fill(defined.begin(), defined.end(), 0);
    defined[static_cast<std::size_t>(v)] = 1;
    best[static_cast<std::size_t>(v)].clear();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      const int x = *it;
      if (x == v) continue;
      bool any = false;
      std::vector<int> cand_best;
      for (int k : g.out_edges(x)) {
        const auto& e = g.edges()[static_cast<std::size_t>(k)];
        if (!defined[static_cast<std::size_t>(e.target)]) continue;
        std::vector<int> cand;
        cand.reserve(best[static_cast<std::size_t>(e.target)].size() + 1);
        cand.push_back(e.label);
        const auto& tail = best[static_cast<std::size_t>(e.target)];
        cand.insert(cand.end(), tail.begin(), tail.end());
        if (!any || cand < cand_best) cand_best = std::move(cand);
        any = true;
      }
      if (!any) continue;
      defined[static_cast<std::size_t>(x)] = 1;
      best[static_cast<std::size_t>(x)] = std::move(cand_best);
      const auto& seq = best[static_cast<std::size_t>(x)];
      const bool increasing = std::adjacent_find(seq.begin(), seq.end(), std::greater_equal<>()) == seq.end();
      reach[static_cast<std::size_t>(x) * N + static_cast<std::size_t>(v)] = increasing ? 1 : 2;
    }
  }
  bool el = true;
  // Rising path counts from each source, saturated at 2, keyed by last label.
  std::vector<std::vector<std::pair<int, int>>> tails(N);
  for (int u = 0; u < n; ++u) {
    for (auto& t : tails) t.clear();
    tails[static_cast<std::size_t>(u)].push_back({0, 1});
    for (int x : topo) {
      auto& tx = tails[static_cast<std::size_t>(x)];
      if (tx.empty()) continue;
      std::sort(tx.begin(), tx.end());
      for (int k : g.out_edges(x)) {
        const auto& e = g.edges()[static_cast<std::size_t>(k)];
        int c = 0;
        for (const auto& [label, count] : tx) {
          if (label >= e.label) break;
          c = std::min(2, c + count);
        }
        if (c == 0) continue;
        auto& ty = tails[static_cast<std::size_t>(e.target)];
        auto hit = std::find_if(ty.begin(), ty.end(), [&](const auto& p) { return p.first == e.label; });
        if (hit == ty.end())
          ty.push_back({e.label, c});
        else
          hit->second = std::min(2, hit->second + c);
      }
    }
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      const char r = reach[static_cast<std::size_t>(u) * N + static_cast<std::size_t>(v)];
      int total = 0;
      for (const auto& p : tails[static_cast<std::size_t>(v)]) total = std::min(2, total + p.second);
      if (r == 0) {
        if (total != 0) return LabelingClass::neither;
        continue;
      }
      if (total != 1) return LabelingClass::neither;
      if (r == 2) el = false;
    }
  }
  return el ? LabelingClass::EL : LabelingClass::ER;
}

ParentMap spanning_tree(const LabeledDigraph& g, int root, TreeSide side) {
  g.check_vertex(root);
  const auto ends = side == TreeSide::source ? g.sources() : g.sinks();
  if (ends.size() != 1 || ends.front() != root)
    throw std::invalid_argument(std::string("root is not the unique ") + (side == TreeSide::source ? "source" : "sink"));
  ParentMap parent;
  const int n = g.num_vertices();
  std::vector<char> reached(static_cast<std::size_t>(n), 0);
  reached[static_cast<std::size_t>(root)] = 1;
  // Each vertex must be met by exactly one rising path from (to) the root.
  struct Item {
    int vertex;
    int label;  // last label on the partial path; 0 / INT_MAX at the root
  };
  std::vector<Item> todo{{root, side == TreeSide::source ? 0 : std::numeric_limits<int>::max()}};
  while (!todo.empty()) {
    const Item it = todo.back();
    todo.pop_back();
    const auto edges = side == TreeSide::source ? g.out_edges(it.vertex) : g.in_edges(it.vertex);
    for (int k : edges) {
      const auto& e = g.edges()[static_cast<std::size_t>(k)];
      const bool ok = side == TreeSide::source ? e.label > it.label : e.label < it.label;
      if (!ok) continue;
      const int other = side == TreeSide::source ? e.target : e.source;
      if (reached[static_cast<std::size_t>(other)]) throw std::invalid_argument("labeling is not ER: two rising paths meet");
      reached[static_cast<std::size_t>(other)] = 1;
      parent[other] = it.vertex;
      todo.push_back({other, e.label});
    }
  }
  for (int v = 0; v < n; ++v)
    if (!reached[static_cast<std::size_t>(v)]) throw std::invalid_argument("labeling is not ER: vertex without rising path");
  return parent;
}

LabeledDigraph hasse_of_closure(const LabeledDigraph& g) {
  const Reachability reach(g);
  std::vector<LabeledEdge> kept;
  for (const auto& e : g.edges()) {
    bool covered = true;
    for (int k : g.out_edges(e.source)) {
      const int w = g.edges()[static_cast<std::size_t>(k)].target;
      if (w != e.target && reach.reaches(w, e.target)) {
        covered = false;
        break;
      }
    }
    if (covered) kept.push_back(e);
  }
  return LabeledDigraph(g.num_vertices(), std::move(kept));
}

long long mobius(const LabeledDigraph& g, int u, int v, MobiusMode mode) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return 1;
  if (mode == MobiusMode::recursive) {
    const Reachability reach(g);
    if (!reach.reaches(u, v)) return 0;
    std::vector<long long> mu(static_cast<std::size_t>(g.num_vertices()), 0);
    std::vector<int> below;  // elements of [u, current) in topological order
    for (int w : g.topological_order()) {
      if (!reach.reaches(u, w) || !reach.reaches(w, v)) continue;
      long long s = 0;
      if (w == u) {
        s = 1;
      } else {
        for (int x : below)
          if (reach.reaches(x, w)) s -= mu[static_cast<std::size_t>(x)];
      }
      mu[static_cast<std::size_t>(w)] = s;
      below.push_back(w);
      if (w == v) break;
    }
    return mu[static_cast<std::size_t>(v)];
  }
  const LabeledDigraph h = hasse_of_closure(g);
  if (check_labeling_fast(h) != LabelingClass::EL)
    throw std::invalid_argument("falling-path Möbius needs an EL-labeled Hasse diagram");
  // Falling paths from u, keyed by (vertex, last label): signed counts.
  std::vector<std::vector<std::pair<int, long long>>> tails(static_cast<std::size_t>(h.num_vertices()));
  tails[static_cast<std::size_t>(u)].push_back({std::numeric_limits<int>::max(), 1});
  long long total = 0;
  for (int x : h.topological_order()) {
    const auto& tx = tails[static_cast<std::size_t>(x)];
    if (tx.empty()) continue;
    if (x == v) {
      for (const auto& p : tx) total += p.second;
      continue;
    }
    for (int k : h.out_edges(x)) {
      const auto& e = h.edges()[static_cast<std::size_t>(k)];
      long long c = 0;
      for (const auto& [label, count] : tx)
        if (e.label <= label) c += count;
      if (c == 0) continue;
      auto& ty = tails[static_cast<std::size_t>(e.target)];
      auto hit = std::find_if(ty.begin(), ty.end(), [&](const auto& p) { return p.first == e.label; });
      // each step flips the parity sign
      if (hit == ty.end())
        ty.push_back({e.label, -c});
      else
        hit->second -= c;
    }
  }
  return total;
}

LabeledDigraph cube_fixture(int d) {
  if (d < 1 || d > 16) throw std::invalid_argument("cube dimension must be in [1, 16]");
  const int n = 1 << d;
  std::vector<LabeledEdge> edges;
  edges.reserve(static_cast<std::size_t>(d) << (d - 1));
  for (int mask = 0; mask < n; ++mask)
    for (int k = 1; k <= d; ++k)
      if (!(mask & (1 << (k - 1)))) edges.push_back({mask, mask | (1 << (k - 1)), k});
  return LabeledDigraph(n, std::move(edges));
}

}  // namespace subword::el
