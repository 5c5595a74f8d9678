#include "subword/posets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "subword/errors.hpp"

namespace subword {

std::optional<DoubleRootWitness> find_double_root(const SubwordComplex& c, const std::vector<Facet>& facets) {
  for (const auto& F : facets) {
    const auto fl = c.flippable(F);
    for (std::size_t a = 0; a < fl.size(); ++a)
      for (std::size_t b = a + 1; b < fl.size(); ++b)
        if (fl[a].root == fl[b].root) return DoubleRootWitness{F.positions, fl[a].position, fl[b].position, fl[a].root};
  }
  return std::nullopt;
}

FlipPoset make_flip_poset(const SubwordComplex& c, std::size_t cap) {
  LabeledFlipGraph g = flip_graph(c, cap);
  el::LabeledDigraph pos = g.digraph(EdgeLabel::positive);
  el::LabeledDigraph neg = g.digraph(EdgeLabel::negative);
  el::Reachability closure(pos);
  el::LabeledDigraph hasse = el::hasse_of_closure(pos);
  const bool drf = !find_double_root(c, g.facets).has_value();
  return FlipPoset{std::move(g), std::move(pos), std::move(neg), std::move(closure), std::move(hasse), drf};
}

DoubleRootReport double_root_report(const SubwordComplex& c, const FlipPoset& p) {
  DoubleRootReport r;
  r.witness = find_double_root(c, p.graph.facets);
  r.has_double_root = r.witness.has_value();
  r.hasse_equals_graph = p.hasse.edges().size() == p.positive.edges().size();
  return r;
}

DoubleRootReport double_root_report(const SubwordComplex& c, std::size_t cap) {
  return double_root_report(c, make_flip_poset(c, cap));
}

FallingData falling_data(const FlipPoset& p, int from, int to) {
  FallingData d;
  d.positive_count = el::count_monotone_paths(p.positive, from, to, el::Monotone::falling);
  d.negative_count = el::count_monotone_paths(p.negative, from, to, el::Monotone::falling);
  if (d.positive_count == 1) d.path = el::monotone_paths(p.positive, from, to, el::Monotone::falling).front();
  return d;
}

long long mobius_oracle(const FlipPoset& p, int from, int to) {
  return el::mobius(p.positive, from, to, el::MobiusMode::recursive);
}

long long mobius_interval(const FlipPoset& p, int from, int to) {
  if (!p.double_root_free) return mobius_oracle(p, from, to);
  if (from == to) return 1;
  if (!p.le(from, to)) return 0;
  if (el::count_monotone_paths(p.positive, from, to, el::Monotone::falling) == 0) return 0;
  const auto& I = p.graph.facets[static_cast<std::size_t>(from)].positions;
  const auto& J = p.graph.facets[static_cast<std::size_t>(to)].positions;
  return (J - I).size() % 2 ? -1 : 1;
}

IntersectionReport interval_intersection_check(const FlipPoset& p) {
  IntersectionReport r;
  const int n = p.size();
  const auto& F = p.graph.facets;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !p.le(a, b)) continue;
      const PositionSet common = F[static_cast<std::size_t>(a)].positions & F[static_cast<std::size_t>(b)].positions;
      for (int k = 0; k < n; ++k) {
        if (!p.le(a, k) || !p.le(k, b)) continue;
        ++r.triples_checked;
        if (!common.is_subset_of(F[static_cast<std::size_t>(k)].positions)) r.violations.push_back({a, b, k});
      }
    }
  return r;
}

PathLengths path_lengths(const FlipPoset& p, int from, int to) {
  if (!p.le(from, to)) throw std::invalid_argument("target not reachable");
  PathLengths out;
  const auto all = el::all_paths(p.positive, from, to);
  out.min_length = static_cast<int>(all.front().labels.size());
  for (const auto& path : all) {
    const int len = static_cast<int>(path.labels.size());
    out.max_length = std::max(out.max_length, len);
    out.min_length = std::min(out.min_length, len);
  }
  const auto rising = el::monotone_paths(p.positive, from, to, el::Monotone::rising);
  if (rising.size() != 1) throw IntegrityError("rising path is not unique");
  out.rising_length = static_cast<int>(rising.front().labels.size());
  // Longest falling path (unique when double root free).
  for (const auto& path : el::monotone_paths(p.positive, from, to, el::Monotone::falling))
    out.falling_length = std::max(out.falling_length.value_or(0), static_cast<int>(path.labels.size()));
  return out;
}

PathLengths path_length_extremes(const FlipPoset& p, int from, int to) {
  if (!p.double_root_free) throw std::invalid_argument("path length extremes need a double root free complex");
  return path_lengths(p, from, to);
}

SubwordComplex cambrian_complex(std::shared_ptr<const CoxeterSystem> sys, const GenWord& c) {
  sys->check_coxeter_word(c);
  GenWord word = c;
  const auto w0 = sys->sorting_word(sys->longest_element(), c);
  word.insert(word.end(), w0.letters.begin(), w0.letters.end());
  const Element rho = sys->longest_element();
  return SubwordComplex(std::move(sys), std::move(word), rho);
}

Kappa::Kappa(const SubwordComplex& c) : c_(c) {
  if (!(c.rho() == c.system().longest_element())) throw std::invalid_argument("kappa needs rho = w0");
  for (const auto& I : facets_inductive(c, Side::right)) facets_.push_back(c.make_facet(I));
}

int Kappa::index(const Element& w) const {
  const auto& sys = c_.system();
  int found = -1;
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    const auto& F = facets_[f];
    bool inside = true;
    for (int i = F.positions.min(); i != 0 && inside; i = F.positions.next_after(i))
      inside = sys.is_positive(sys.apply_inverse(w, F.root(i)));
    if (!inside) continue;
    if (found >= 0) throw IntegrityError("kappa: several facets match");
    found = static_cast<int>(f);
  }
  if (found < 0) throw IntegrityError("kappa: no facet matches");
  return found;
}

PositionSet kappa(const SubwordComplex& c, const Element& w) { return Kappa(c)(w); }

int CambrianData::index_of(const Element& w) const {
  const auto it = std::find(sortables.begin(), sortables.end(), w);
  return it == sortables.end() ? -1 : static_cast<int>(it - sortables.begin());
}

namespace {

bool has_extremal_bound(const std::vector<std::vector<char>>& le, int a, int b, bool upper) {
  const int n = static_cast<int>(le.size());
  std::vector<int> bounds;
  for (int u = 0; u < n; ++u)
    if (upper ? (le[a][u] && le[b][u]) : (le[u][a] && le[u][b])) bounds.push_back(u);
  for (int u : bounds) {
    bool best = true;
    for (int v : bounds)
      if (!(upper ? le[u][v] : le[v][u])) {
        best = false;
        break;
      }
    if (best) return true;
  }
  return false;
}

}  // namespace

CambrianData cambrian(const CoxeterSystem& sys, const GenWord& c, std::size_t group_cap) {
  sys.check_coxeter_word(c);
  CambrianData d;
  d.c = c;
  for (auto& w : sys.enumerate_group(group_cap))
    if (sys.is_sortable(w, c)) d.sortables.push_back(std::move(w));
  for (const auto& w : d.sortables) d.words.push_back(sys.sorting_word(w, c));
  const int n = static_cast<int>(d.sortables.size());
  std::vector<RootSet> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i)] = sys.inversions(d.sortables[static_cast<std::size_t>(i)]);
  std::vector<std::vector<char>> le(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) le[i][j] = (inv[i] & ~inv[j]).none();

  std::vector<el::LabeledEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !le[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != i && k != j && le[i][k] && le[k][j]) cover = false;
      if (!cover) continue;
      const auto& lo = d.words[static_cast<std::size_t>(i)].positions;
      const auto& hi = d.words[static_cast<std::size_t>(j)].positions;
      int label = 0;
      for (int pos : hi)
        if (std::find(lo.begin(), lo.end(), pos) == lo.end()) {
          label = pos;
          break;
        }
      if (!label) throw IntegrityError("cover without a new sorting position");
      d.covers.push_back({i, j, label});
      edges.push_back({i, j, label});
    }
  d.km = el::LabeledDigraph(n, std::move(edges));

  for (int i = 0; i < n; ++i) {
    GenWord letters = d.words[static_cast<std::size_t>(i)].letters;
    if (letters.empty()) continue;
    letters.pop_back();
    const int parent = d.index_of(sys.element_of_word(letters));
    if (parent < 0) throw IntegrityError("sorting word prefix is not sortable");
    d.sorting_tree[i] = parent;
  }

  d.is_lattice = true;
  for (int a = 0; a < n && d.is_lattice; ++a)
    for (int b = a + 1; b < n && d.is_lattice; ++b)
      d.is_lattice = has_extremal_bound(le, a, b, true) && has_extremal_bound(le, a, b, false);
  return d;
}

CambrianIsomorphismReport verify_cambrian_isomorphism(std::shared_ptr<const CoxeterSystem> sys, const GenWord& c,
                                                      std::size_t group_cap) {
  const SubwordComplex cx = cambrian_complex(sys, c);
  const FlipPoset p = make_flip_poset(cx);
  const Kappa kap(cx);
  const CambrianData cd = cambrian(*sys, c, group_cap);
  const auto group = sys->enumerate_group(group_cap);

  CambrianIsomorphismReport r;
  r.group_size = group.size();
  r.facet_count = static_cast<std::size_t>(p.size());
  r.sortable_count = cd.sortables.size();

  // Kappa's facet list and the poset's share the lexicographic order.
  std::vector<std::vector<int>> fiber(r.facet_count);
  for (std::size_t g = 0; g < group.size(); ++g)
    fiber[static_cast<std::size_t>(kap.index(group[g]))].push_back(static_cast<int>(g));

  r.fibers_have_minimum = true;
  std::vector<const Element*> minimum(r.facet_count, nullptr);
  for (std::size_t f = 0; f < r.facet_count && r.fibers_have_minimum; ++f) {
    for (int u : fiber[f]) {
      bool least = true;
      for (int v : fiber[f])
        if (!sys->weak_le(group[static_cast<std::size_t>(u)], group[static_cast<std::size_t>(v)])) {
          least = false;
          break;
        }
      if (least) {
        minimum[f] = &group[static_cast<std::size_t>(u)];
        break;
      }
    }
    if (!minimum[f]) r.fibers_have_minimum = false;
  }
  if (!r.fibers_have_minimum) throw IntegrityError("a kappa fiber has no weak-order minimum");

  r.facet_to_sortable.assign(r.facet_count, -1);
  std::set<int> hit;
  for (std::size_t f = 0; f < r.facet_count; ++f) {
    r.facet_to_sortable[f] = cd.index_of(*minimum[f]);
    if (r.facet_to_sortable[f] >= 0) hit.insert(r.facet_to_sortable[f]);
  }
  r.minima_are_sortables = hit.size() == r.facet_count && r.facet_count == r.sortable_count &&
                           std::find(r.facet_to_sortable.begin(), r.facet_to_sortable.end(), -1) ==
                               r.facet_to_sortable.end();
  if (!r.minima_are_sortables) throw IntegrityError("fiber minima are not the sortable elements");

  r.order_isomorphic = true;
  const int n = p.size();
  for (int a = 0; a < n && r.order_isomorphic; ++a)
    for (int b = 0; b < n && r.order_isomorphic; ++b)
      r.order_isomorphic = p.le(a, b) == sys->weak_le(*minimum[static_cast<std::size_t>(a)],
                                                        *minimum[static_cast<std::size_t>(b)]);
  if (!r.order_isomorphic) throw IntegrityError("fiber minimum map is not a poset isomorphism");

  std::vector<int> sortable_to_facet(r.sortable_count);
  for (std::size_t f = 0; f < r.facet_count; ++f)
    sortable_to_facet[static_cast<std::size_t>(r.facet_to_sortable[f])] = static_cast<int>(f);
  std::set<std::pair<int, int>> source_tree, sorting_tree;
  for (const auto& [child, edge] : spanning_tree_fathers(cx, TreeKind::PosSource).parent)
    source_tree.insert({p.graph.index_of(edge.facet), p.graph.index_of(child)});
  for (const auto& [child, parent] : cd.sorting_tree)
    sorting_tree.insert({sortable_to_facet[static_cast<std::size_t>(parent)], sortable_to_facet[static_cast<std::size_t>(child)]});
  std::set_difference(source_tree.begin(), source_tree.end(), sorting_tree.begin(), sorting_tree.end(),
                      std::back_inserter(r.only_in_source_tree));
  std::set_difference(sorting_tree.begin(), sorting_tree.end(), source_tree.begin(), source_tree.end(),
                      std::back_inserter(r.only_in_sorting_tree));
  return r;
}

PositionSet DuplicatedWord::facet_of(std::uint32_t eps) const {
  PositionSet I(complex.size());
  for (std::size_t t = 0; t < duplicated.size(); ++t) I.insert(duplicated[t] + static_cast<int>((eps >> t) & 1U));
  return I;
}

DuplicatedWord duplicated_complex(std::shared_ptr<const CoxeterSystem> sys, const GenWord& rho_word,
                                  const PositionSet& X) {
  sys->check_word(rho_word);
  if (!sys->is_reduced(rho_word)) throw std::invalid_argument("duplicated words need a reduced rho word");
  const int zeta = static_cast<int>(rho_word.size());
  if (X.universe() != zeta) throw std::invalid_argument("duplicated positions must lie in [|rho_word|]");
  GenWord word;
  std::vector<int> bullet, dup;
  for (int k = 1; k <= zeta; ++k) {
    word.push_back(rho_word[static_cast<std::size_t>(k - 1)]);
    bullet.push_back(static_cast<int>(word.size()));
    if (X.contains(k)) {
      dup.push_back(bullet.back());
      word.push_back(rho_word[static_cast<std::size_t>(k - 1)]);
    }
  }
  const Element rho = sys->element_of_word(rho_word);
  return DuplicatedWord{SubwordComplex(std::move(sys), std::move(word), rho), std::move(bullet), std::move(dup)};
}

}  // namespace subword
