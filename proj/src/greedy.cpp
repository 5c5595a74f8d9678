#include "subword/greedy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "subword/errors.hpp"

namespace subword {

PositionSet positive_greedy_range(const CoxeterSystem& sys, const GenWord& word, int first, int last, Element v) {
  PositionSet out(static_cast<int>(word.size()));
  for (int k = last; k >= first; --k) {
    const int q = word[static_cast<std::size_t>(k - 1)];
    if (sys.is_right_descent(v, q))
      v = sys.times_generator(v, q);
    else
      out.insert(k);
  }
  if (!v.is_identity()) throw IntegrityError("greedy sweep on a non-representable range");
  return out;
}

PositionSet negative_greedy_range(const CoxeterSystem& sys, const GenWord& word, int first, int last, Element v) {
  PositionSet out(static_cast<int>(word.size()));
  for (int k = first; k <= last; ++k) {
    const int q = word[static_cast<std::size_t>(k - 1)];
    if (sys.is_left_descent(v, q))
      v = sys.generator_times(q, v);
    else
      out.insert(k);
  }
  if (!v.is_identity()) throw IntegrityError("greedy sweep on a non-representable range");
  return out;
}

PositionSet greedy_facet(const SubwordComplex& c, Sign sign, GreedyMethod method) {
  const auto& sys = c.system();
  const int m = c.size();
  switch (method) {
    case GreedyMethod::sweep:
      return sign == Sign::positive ? positive_greedy_range(sys, c.word(), 1, m, c.rho())
                                    : negative_greedy_range(sys, c.word(), 1, m, c.rho());
    case GreedyMethod::recursion: {
      PositionSet out(m);
      Element v = c.rho();
      if (sign == Sign::positive) {
        for (int k = 1; k <= m; ++k) {
          if (absorb_left(sys, c.word(), k + 1, m, v).is_identity())
            out.insert(k);
          else
            v = sys.generator_times(c.letter(k), v);
        }
      } else {
        for (int k = m; k >= 1; --k) {
          if (absorb_right(sys, c.word(), 1, k - 1, v).is_identity())
            out.insert(k);
          else
            v = sys.times_generator(v, c.letter(k));
        }
      }
      return out;
    }
    case GreedyMethod::graph: {
      const auto g = flip_graph(c);
      const auto d = g.digraph(EdgeLabel::positive);
      const auto ends = sign == Sign::positive ? d.sources() : d.sinks();
      if (ends.size() != 1) throw IntegrityError("flip graph without a unique source or sink");
      return g.facets[static_cast<std::size_t>(ends.front())].positions;
    }
  }
  return PositionSet(m);
}

GreedyFlipReport greedy_flip_property(const SubwordComplex& c) {
  GreedyFlipReport rep;
  const int m = c.size();
  if (m == 0) return rep;
  const auto& sys = c.system();
  const Facet N = c.make_facet(greedy_facet(c, Sign::negative));
  if (c.is_flippable(N, m)) {
    rep.negative_checked = true;
    const auto G = c.flip(N, m).facet.positions;
    const auto expected = negative_greedy_range(sys, c.word(), 1, m - 1, sys.times_generator(c.rho(), c.letter(m)));
    rep.negative_ok = G == expected;
    rep.negative_flipped = G.shifted(0, m - 1);
    rep.negative_expected = expected.shifted(0, m - 1);
  }
  const Facet P = c.make_facet(greedy_facet(c, Sign::positive));
  if (c.is_flippable(P, 1)) {
    rep.positive_checked = true;
    const auto G = c.flip(P, 1).facet.positions;
    const auto expected = positive_greedy_range(sys, c.word(), 2, m, sys.generator_times(c.letter(1), c.rho()));
    rep.positive_ok = G == expected;
    rep.positive_flipped = G.shifted(-1, m - 1);
    rep.positive_expected = expected.shifted(-1, m - 1);
  }
  return rep;
}

const char* tree_kind_name(TreeKind kind) {
  switch (kind) {
    case TreeKind::PosSource: return "pos-source";
    case TreeKind::PosSink: return "pos-sink";
    case TreeKind::NegSource: return "neg-source";
    case TreeKind::NegSink: return "neg-sink";
  }
  return "?";
}

std::optional<TreeKind> parse_tree_kind(std::string_view name) {
  for (TreeKind k : kAllTreeKinds)
    if (name == tree_kind_name(k)) return k;
  return std::nullopt;
}

bool is_source_kind(TreeKind kind) { return kind == TreeKind::PosSource || kind == TreeKind::NegSource; }

EdgeLabel tree_label(TreeKind kind) {
  return kind == TreeKind::PosSource || kind == TreeKind::PosSink ? EdgeLabel::positive : EdgeLabel::negative;
}

FatherRule::FatherRule(const SubwordComplex& c, TreeKind kind)
    : c_(c),
      kind_(kind),
      positive_(greedy_facet(c, Sign::positive)),
      negative_(greedy_facet(c, Sign::negative)) {}

int FatherRule::flipped_position(const Facet& F) const {
  const auto& I = F.positions;
  const auto& sys = c_.system();
  const int m = c_.size();
  switch (kind_) {
    case TreeKind::PosSink:
      return I == negative_ ? 0 : (I - negative_).min();
    case TreeKind::NegSource:
      return I == positive_ ? 0 : (I - positive_).max();
    case TreeKind::NegSink: {
      if (I == negative_) return 0;
      Element v = sys.identity();  // product over [y] \ I
      PositionSet prefix(m);
      int y = 0;
      for (int k = 1; k <= m; ++k) {
        if (!I.contains(k)) v = sys.times_generator(v, c_.letter(k));
        prefix.insert(k);
        if ((I & prefix) != negative_greedy_range(sys, c_.word(), 1, k, v)) {
          y = k;
          break;
        }
      }
      if (!y) throw IntegrityError("negative sink father: greedy prefix never differs");
      for (int x = I.min(); x != 0; x = I.next_after(x))
        if (F.root(x) == F.root(y)) return x;
      throw IntegrityError("negative sink father: no position carries r(I,y)");
    }
    case TreeKind::PosSource: {
      if (I == positive_) return 0;
      // y is the first position of the longest suffix on which I is not greedy.
      Element v = sys.identity();  // product over [y, m] \ I
      PositionSet suffix(m);
      int y = 0;
      for (int k = m; k >= 1; --k) {
        if (!I.contains(k)) v = sys.generator_times(c_.letter(k), v);
        suffix.insert(k);
        if ((I & suffix) != positive_greedy_range(sys, c_.word(), k, m, v)) {
          y = k;
          break;
        }
      }
      if (!y) throw IntegrityError("positive source father: greedy suffix never differs");
      const RootId target = sys.negate(F.root(y));
      int x = 0;
      for (int p = I.min(); p != 0; p = I.next_after(p))
        if (F.root(p) == target) x = p;
      if (!x) throw IntegrityError("positive source father: no position carries -r(I,y)");
      return x;
    }
  }
  return 0;
}

FatherResult FatherRule::operator()(const Facet& F) const {
  const int i = flipped_position(F);
  if (!i) return RootMarker{};
  const auto res = c_.flip(F, i);
  return FatherEdge{res.facet.positions, std::min(i, res.j), std::max(i, res.j)};
}

FatherResult father(const SubwordComplex& c, const Facet& F, TreeKind kind) { return FatherRule(c, kind)(F); }

SpanningTreeResult spanning_tree_direct(const SubwordComplex&, const LabeledFlipGraph& g, TreeKind kind) {
  const auto d = g.digraph(tree_label(kind));
  const bool source = is_source_kind(kind);
  const auto ends = source ? d.sources() : d.sinks();
  if (ends.size() != 1) throw IntegrityError("flip graph without a unique source or sink");
  const auto parents = el::spanning_tree(d, ends.front(), source ? el::TreeSide::source : el::TreeSide::sink);
  SpanningTreeResult out{kind, g.facets[static_cast<std::size_t>(ends.front())].positions, {}};
  for (const auto& [child, par] : parents) {
    int k = source ? d.find_edge(par, child) : d.find_edge(child, par);
    if (k < 0) throw IntegrityError("tree edge missing from the flip graph");
    const auto& e = g.edges[static_cast<std::size_t>(k)];
    out.parent.emplace(g.facets[static_cast<std::size_t>(child)].positions,
                       FatherEdge{g.facets[static_cast<std::size_t>(par)].positions, e.pos_label, e.neg_label});
  }
  return out;
}

SpanningTreeResult spanning_tree_direct(const SubwordComplex& c, TreeKind kind, std::size_t cap) {
  return spanning_tree_direct(c, flip_graph(c, cap), kind);
}

SpanningTreeResult spanning_tree_fathers(const SubwordComplex& c, TreeKind kind, Exec exec) {
  const FatherRule rule(c, kind);
  const auto facets = facets_inductive(c, Side::right);
  std::vector<FatherResult> results(facets.size());
  const auto count = static_cast<std::ptrdiff_t>(facets.size());
#pragma omp parallel for schedule(dynamic, 8) if (exec == Exec::parallel)
  for (std::ptrdiff_t k = 0; k < count; ++k)
    results[static_cast<std::size_t>(k)] = rule(c.make_facet(facets[static_cast<std::size_t>(k)]));
  SpanningTreeResult out{kind, rule.root(), {}};
  for (std::size_t k = 0; k < facets.size(); ++k)
    if (const auto* e = std::get_if<FatherEdge>(&results[k])) out.parent.emplace(facets[k], *e);
  return out;
}

namespace {

struct PartialTree {
  PositionSet root;
  std::vector<std::pair<PositionSet, PositionSet>> edges;  // (child, father)

  void add_position(int k) {
    root.insert(k);
    for (auto& [a, b] : edges) {
      a.insert(k);
      b.insert(k);
    }
  }
};

struct TreeBuilder {
  const SubwordComplex& c;
  const CoxeterSystem& sys;

  PartialTree neg_sink(int k, const Element& v) const {
    if (k == 0) return {PositionSet(c.size()), {}};
    const int q = c.letter(k);
    if (!sys.is_right_descent(v, q)) {
      auto t = neg_sink(k - 1, v);
      t.add_position(k);
      return t;
    }
    auto without = neg_sink(k - 1, sys.times_generator(v, q));
    if (!absorb_right(sys, c.word(), 1, k - 1, v).is_identity()) return without;
    auto with = neg_sink(k - 1, v);
    with.add_position(k);
    with.edges.insert(with.edges.end(), without.edges.begin(), without.edges.end());
    with.edges.emplace_back(without.root, with.root);
    return with;
  }

  PartialTree pos_source(int k, const Element& v) const {
    if (k > c.size()) return {PositionSet(c.size()), {}};
    const int q = c.letter(k);
    if (!sys.is_left_descent(v, q)) {
      auto t = pos_source(k + 1, v);
      t.add_position(k);
      return t;
    }
    auto without = pos_source(k + 1, sys.generator_times(q, v));
    if (!absorb_left(sys, c.word(), k + 1, c.size(), v).is_identity()) return without;
    auto with = pos_source(k + 1, v);
    with.add_position(k);
    with.edges.insert(with.edges.end(), without.edges.begin(), without.edges.end());
    with.edges.emplace_back(without.root, with.root);
    return with;
  }
};

}  // namespace

SpanningTreeResult spanning_tree_inductive(const SubwordComplex& c, TreeKind kind) {
  if (kind != TreeKind::NegSink && kind != TreeKind::PosSource)
    throw std::invalid_argument(std::string("no inductive construction for the ") + tree_kind_name(kind) + " tree");
  const TreeBuilder b{c, c.system()};
  const PartialTree t = kind == TreeKind::NegSink ? b.neg_sink(c.size(), c.rho()) : b.pos_source(1, c.rho());
  SpanningTreeResult out{kind, t.root, {}};
  for (const auto& [child, par] : t.edges) {
    const int a = (child - par).min();
    const int z = (par - child).min();
    out.parent.emplace(child, FatherEdge{par, std::min(a, z), std::max(a, z)});
  }
  return out;
}

FallingSweep spherical_falling_sweep(const SubwordComplex& c) {
  if (!is_spherical(c)) throw std::invalid_argument("falling sweep needs a spherical complex");
  Facet F = c.make_facet(greedy_facet(c, Sign::positive));
  FallingSweep out;
  out.facets.push_back(F.positions);
  const auto positions = F.positions.to_vector();
  for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
    const int j = c.flip_in_place(F, *it);
    if (j < *it) throw IntegrityError("falling sweep met a decreasing flip");
    out.pos_labels.push_back(*it);
    out.neg_labels.push_back(j);
    out.facets.push_back(F.positions);
  }
  return out;
}

}  // namespace subword
