#include "subword/render.hpp"

#include <cstdlib>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "subword/posets.hpp"

namespace subword {

std::string facet_node_id(const PositionSet& I) {
  if (I.empty()) return "e";
  std::string out;
  const bool compact = I.universe() <= 9;
  for (int p : I.to_vector()) {
    if (!compact && !out.empty()) out += '_';
    out += std::to_string(p);
  }
  return out;
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string node_line(const PositionSet& I, bool root = false) {
  std::string out = "  " + quoted(facet_node_id(I)) + " [label=" + quoted(I.to_string());
  if (root) out += ", root=true, peripheries=2";
  return out + "];\n";
}

}  // namespace

std::string graph_dot(const LabeledFlipGraph& g) {
  std::ostringstream os;
  os << "digraph flip_graph {\n  node [shape=box];\n";
  for (const auto& F : g.facets) os << node_line(F.positions);
  for (const auto& e : g.edges)
    os << "  " << quoted(facet_node_id(g.facets[static_cast<std::size_t>(e.from)].positions)) << " -> "
       << quoted(facet_node_id(g.facets[static_cast<std::size_t>(e.to)].positions)) << " [pos=" << e.pos_label
       << ", neg=" << e.neg_label << ", label=\"" << e.pos_label << "/" << e.neg_label << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string tree_dot(const SpanningTreeResult& t, const LabeledFlipGraph& g) {
  std::ostringstream os;
  os << "digraph " << quoted(tree_kind_name(t.kind)) << " {\n  node [shape=box];\n";
  for (const auto& F : g.facets) os << node_line(F.positions, F.positions == t.root);
  for (const auto& F : g.facets) {
    const auto it = t.parent.find(F.positions);
    if (it == t.parent.end()) continue;
    os << "  " << quoted(facet_node_id(F.positions)) << " -> " << quoted(facet_node_id(it->second.facet))
       << " [pos=" << it->second.pos_label << ", neg=" << it->second.neg_label << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<int> one_line_notation(const CoxeterSystem& sys, const Element& w) {
  const int n = sys.rank();
  // w(alpha_j) = e_{w(j)} - e_{w(j+1)}; chain the images starting from e_{w(1)}.
  std::vector<int> head(static_cast<std::size_t>(n)), tail(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i < n; ++i) {
      e[static_cast<std::size_t>(i)] += w.at(i, j);
      e[static_cast<std::size_t>(i + 1)] -= w.at(i, j);
    }
    for (int i = 0; i <= n; ++i) {
      if (e[static_cast<std::size_t>(i)] == 1) head[static_cast<std::size_t>(j)] = i + 1;
      if (e[static_cast<std::size_t>(i)] == -1) tail[static_cast<std::size_t>(j)] = i + 1;
    }
  }
  std::vector<int> out{head[0]};
  for (int j = 0; j < n; ++j) out.push_back(tail[static_cast<std::size_t>(j)]);
  return out;
}

NetworkResult render_network(const SubwordComplex& c, const PositionSet* facet) {
  const auto& sys = c.system();
  const int n = sys.rank();
  bool standard = sys.is_pure_type_a();
  for (int i = 1; i <= n && standard; ++i)
    for (int j = 1; j <= n && standard; ++j)
      if (i != j) standard = sys.cartan(i, j) == (std::abs(i - j) == 1 ? -1 : 0);
  if (!standard) throw std::invalid_argument("networks need a type A system");
  const int m = c.size();
  if (facet && facet->universe() != m) throw std::invalid_argument("facet universe differs from the word length");

  const int levels = n + 1;
  const int width = 4 * m + 3;
  // Row 2(levels - L) is level L; odd rows sit between levels.
  std::vector<std::string> grid(static_cast<std::size_t>(2 * levels - 1), std::string(static_cast<std::size_t>(width), ' '));
  for (int L = 1; L <= levels; ++L) grid[static_cast<std::size_t>(2 * (levels - L))].assign(static_cast<std::size_t>(width), '-');

  NetworkResult res;
  std::vector<int> order(static_cast<std::size_t>(levels));
  for (int L = 0; L < levels; ++L) order[static_cast<std::size_t>(L)] = L + 1;
  std::string header(static_cast<std::size_t>(width), ' ');
  for (int k = 1; k <= m; ++k) {
    const int p = c.letter(k);
    const auto x = static_cast<std::size_t>(4 * (k - 1) + 3);
    const auto top = static_cast<std::size_t>(2 * (levels - p - 1));
    const bool crossing = facet && !facet->contains(k);
    const char end = facet ? (crossing ? '+' : 'o') : '+';
    grid[top][x] = end;
    grid[top + 2][x] = end;
    grid[top + 1][x] = crossing ? 'X' : '|';
    const std::string label = std::to_string(k);
    if (x + label.size() <= header.size()) header.replace(x, label.size(), label);
    if (crossing) {
      std::swap(order[static_cast<std::size_t>(p - 1)], order[static_cast<std::size_t>(p)]);
      ++res.crossings;
    }
  }

  std::ostringstream os;
  os << "   " << header << "\n";
  for (std::size_t r = 0; r < grid.size(); ++r) {
    if (r % 2 == 0) {
      const int L = levels - static_cast<int>(r / 2);
      os << L << "  " << grid[r];
      if (facet) os << "  " << order[static_cast<std::size_t>(L - 1)];
    } else {
      os << "   " << grid[r];
    }
    os << "\n";
  }
  if (facet) {
    res.permutation = order;
    os << "pi = [";
    for (int L = 0; L < levels; ++L) os << (L ? "," : "") << order[static_cast<std::size_t>(L)];
    os << "]\ncrossings = " << res.crossings << "\n";
  }
  res.ascii = os.str();
  return res;
}

Stats compute_stats(const SubwordComplex& c, std::size_t cap) {
  const FlipPoset p = make_flip_poset(c, cap);
  Stats s;
  s.facet_count = p.graph.facets.size();
  s.h_vector = h_vector(p.graph);
  s.spherical = is_spherical(c);
  s.double_root_free = p.double_root_free;
  s.greedy_positive = greedy_facet(c, Sign::positive);
  s.greedy_negative = greedy_facet(c, Sign::negative);
  s.mobius_p_n = mobius_interval(p, p.graph.index_of(s.greedy_positive), p.graph.index_of(s.greedy_negative));
  return s;
}

std::string stats_json(const Stats& s) {
  nlohmann::ordered_json j;
  j["facet_count"] = s.facet_count;
  j["h_vector"] = s.h_vector;
  j["spherical"] = s.spherical;
  j["double_root_free"] = s.double_root_free;
  j["greedy_positive"] = s.greedy_positive.to_vector();
  j["greedy_negative"] = s.greedy_negative.to_vector();
  j["mobius_P_N"] = s.mobius_p_n;
  return j.dump(2) + "\n";
}

}  // namespace subword
