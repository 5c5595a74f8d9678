#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

const std::vector<std::string> kExampleFacets{"1 2 3 5 6", "1 2 3 6 7", "1 2 3 7 9", "1 3 4 5 6",
                                              "1 3 4 6 7", "1 3 4 7 9", "2 3 5 6 8", "2 3 6 7 8",
                                              "2 3 7 8 9", "3 4 5 6 8", "3 4 6 7 8", "3 4 7 8 9"};

std::vector<PositionSet> example_facets() {
  std::vector<PositionSet> out;
  for (const auto& f : kExampleFacets) out.push_back(ps(f, 9));
  return out;
}

RootSet complement_roots(const SubwordComplex& c, const Facet& F) {
  RootSet s;
  for (int k = 1; k <= c.size(); ++k)
    if (!F.positions.contains(k)) s.set(F.root(k).value);
  return s;
}

// Edges reversed and relabeled m + 1 - lambda-: the image of the positive
// labeling of the reversed complex.
el::LabeledDigraph dual_negative(const LabeledFlipGraph& g, int m) {
  std::vector<el::LabeledEdge> edges;
  for (const auto& e : g.edges) edges.push_back({e.to, e.from, m + 1 - e.neg_label});
  return el::LabeledDigraph(static_cast<int>(g.facets.size()), edges);
}

}  // namespace

TEST_CASE("running example facets") {
  const auto c = running_example();
  CHECK(c.size() == 9);
  CHECK(c.rho_length() == 4);
  CHECK(c.facet_size() == 5);
  CHECK(facets_inductive(c, Side::right) == example_facets());
  CHECK(facets_inductive(c, Side::left) == example_facets());
  CHECK(brute_force_facets(c) == example_facets());
}

TEST_CASE("construction and degenerate complexes") {
  const auto a2 = sys_of("A2");
  CHECK_THROWS_AS(make_complex(a2, {1}, {2}), NotRepresentable);
  CHECK_THROWS_AS(make_complex(a2, {1, 2}, {2, 1}), NotRepresentable);
  const auto empty = make_complex(a2, {}, {});
  CHECK(facets_inductive(empty, Side::right) == std::vector<PositionSet>{PositionSet(0)});
  const auto same = make_complex(sys_of("A3"), kRhoEx, kRhoEx);
  CHECK(facets_inductive(same, Side::left) == std::vector<PositionSet>{PositionSet(4)});
  const auto full = make_complex(a2, {1, 2, 2, 1}, {});
  CHECK(facets_inductive(full, Side::right) == std::vector<PositionSet>{PositionSet::full(4)});
  // A non-reduced rho word is canonicalised.
  const auto c = make_complex(sys_of("A3"), kQex, {3, 2, 3, 1, 1, 1});
  CHECK(c.rho_length() == 4);
  CHECK(c.system().is_reduced(c.rho_word()));
  CHECK(c.rho() == running_example().rho());
}

TEST_CASE("root function against the vector oracle") {
  const auto c = running_example();
  const auto& sys = c.system();
  for (const auto& I : example_facets()) {
    const auto F = c.make_facet(I);
    CHECK(F.roots == c.root_function_array(I));
    for (int k = 1; k <= 9; ++k) CHECK(sys.root(F.root(k)) == root_function_vectors(c, I, k));
    CHECK(F.root(1) == sys.simple_root(c.letter(1)));
    CHECK(complement_roots(c, F) == c.rho_inversions());
  }
  const auto F = c.make_facet(ps("1 2 3 5 6", 9));
  for (int k = 1; k <= 4; ++k) CHECK(F.root(k) == sys.simple_root(c.letter(k)));
  CHECK_THROWS_AS(c.make_facet(ps("1 2 3 4 5", 9)), std::invalid_argument);
  CHECK_FALSE(c.is_facet(ps("1 2 3", 9)));
}

TEST_CASE("flip in the running example") {
  const auto c = running_example();
  const auto F = c.make_facet(ps("1 3 4 7 9", 9));
  const auto r = c.flip(F, 1);
  CHECK(r.facet.positions == ps("3 4 7 8 9", 9));
  CHECK(r.j == 8);
  CHECK(r.sign == 1);
  CHECK(c.flip_partner(F, 1) == 8);
  const auto back = c.flip(r.facet, 8);
  CHECK(back.facet == F);
  CHECK(back.j == 1);
  CHECK(back.sign == -1);
  bool found = false;
  for (const auto& f : c.flippable(F))
    if (f.position == 1) {
      found = true;
      CHECK(f.sign == 1);
    }
  CHECK(found);
  CHECK_THROWS_AS(c.flip(F, 2), std::invalid_argument);
}

TEST_CASE("flips are involutions and match recomputation") {
  std::mt19937 rng(101);
  for (int t = 0; t < 150; ++t) {
    const auto c = random_complex(rng, 4, 10);
    const auto& sys = c.system();
    for (const auto& I : facets_inductive(c, Side::right)) {
      const auto F = c.make_facet(I);
      const auto flips = c.flippable(F);
      for (int i = I.min(); i != 0; i = I.next_after(i)) {
        const RootId r = F.root(i);
        const bool expect = c.inversion_slot(sys.abs(r)) >= 0;
        CHECK(c.is_flippable(F, i) == expect);
        const bool listed = std::any_of(flips.begin(), flips.end(), [&](const auto& f) { return f.position == i; });
        CHECK(listed == expect);
        if (!expect) continue;
        const auto res = c.flip(F, i);
        CHECK(res.facet.roots == c.root_function_array(res.facet.positions));
        CHECK(c.is_facet(res.facet.positions));
        CHECK(res.sign == (i < res.j ? 1 : -1));
        if (i < res.j) {
          CHECK(F.root(i) == F.root(res.j));
          CHECK(sys.is_positive(F.root(i)));
        } else {
          CHECK(F.root(i) == sys.negate(F.root(res.j)));
          CHECK_FALSE(sys.is_positive(F.root(i)));
        }
        const auto back = c.flip(res.facet, res.j);
        CHECK(back.facet == F);
        CHECK(back.j == i);
      }
    }
  }
}

TEST_CASE("flip graph of the running example") {
  const auto c = running_example();
  const auto g = flip_graph(c);
  CHECK(g.facets.size() == 12);
  const int from = g.index_of(ps("1 3 4 7 9", 9));
  const int to = g.index_of(ps("3 4 7 8 9", 9));
  const auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const FlipEdge& e) { return e.from == from && e.to == to; });
  REQUIRE(it != g.edges.end());
  CHECK(it->pos_label == 1);
  CHECK(it->neg_label == 8);
  const auto pos = g.digraph(EdgeLabel::positive);
  CHECK(pos.sources() == std::vector<int>{g.index_of(ps("1 2 3 5 6", 9))});
  CHECK(pos.sinks() == std::vector<int>{g.index_of(ps("3 4 7 8 9", 9))});
  CHECK(el::check_labeling(pos) == el::LabelingClass::EL);
  CHECK(el::check_labeling(g.digraph(EdgeLabel::negative)) == el::LabelingClass::EL);
  CHECK(h_vector(g) == std::vector<long long>{1, 4, 5, 2});
  CHECK(h_from_f(face_f_vector(c), c.facet_size()) == h_vector(g));
  CHECK(flip_graph(c, 12, Exec::parallel).edges == g.edges);
  CHECK_THROWS_AS(flip_graph(c, 11), CapExceeded);
  CHECK(flip_graph(make_complex(sys_of("A2"), {1, 2}, {1, 2})).edges.empty());
}

TEST_CASE("flip graph invariants on random instances") {
  std::mt19937 rng(103);
  for (int t = 0; t < 200; ++t) {
    const auto c = random_complex(rng, 4, 11);
    const auto g = flip_graph(c);
    CHECK(std::is_sorted(g.facets.begin(), g.facets.end(),
                         [](const Facet& a, const Facet& b) { return a.positions < b.positions; }));
    for (const auto& e : g.edges) {
      const auto& I = g.facets[static_cast<std::size_t>(e.from)].positions;
      const auto& J = g.facets[static_cast<std::size_t>(e.to)].positions;
      CHECK(e.pos_label < e.neg_label);
      auto a = I;
      a.erase(e.pos_label);
      auto b = J;
      b.erase(e.neg_label);
      CHECK(a == b);
    }
    const auto pos = g.digraph(EdgeLabel::positive);
    CHECK(pos.sources().size() == 1);
    CHECK(pos.sinks().size() == 1);
    const el::Reachability reach(pos);
    for (int v = 0; v < pos.num_vertices(); ++v) CHECK(reach.reaches(pos.sources()[0], v));
  }
}

TEST_CASE("positive labeling is EL, negative labeling is EL on the dual graph") {
  std::mt19937 rng(107);
  int negative_not_el = 0;
  for (int t = 0; t < 120; ++t) {
    const auto c = random_complex(rng, 4, 10);
    const auto g = flip_graph(c);
    CHECK(el::check_labeling(g.digraph(EdgeLabel::positive)) == el::LabelingClass::EL);
    const auto neg = el::check_labeling(g.digraph(EdgeLabel::negative));
    CHECK(neg != el::LabelingClass::neither);
    if (neg != el::LabelingClass::EL) ++negative_not_el;
    CHECK(el::check_labeling(dual_negative(g, c.size())) == el::LabelingClass::EL);
  }
  CHECK(negative_not_el > 0);
}

TEST_CASE("negative labeling: rising path not lexicographically first") {
  const auto c = make_complex(sys_of("C3"), {2, 3, 2, 2, 3, 1, 2}, {2, 3, 1});
  const auto g = flip_graph(c);
  REQUIRE(g.facets.size() == 4);
  const auto neg = g.digraph(EdgeLabel::negative);
  CHECK(el::check_labeling(neg) == el::LabelingClass::ER);
  const int from = g.index_of(ps("1 2 3 7", 7));
  const int to = g.index_of(ps("3 4 5 7", 7));
  const auto rising = el::monotone_paths(neg, from, to, el::Monotone::rising);
  REQUIRE(rising.size() == 1);
  CHECK(rising[0].labels == std::vector<int>{4, 5});
  const auto paths = el::all_paths(neg, from, to);
  CHECK(std::any_of(paths.begin(), paths.end(), [](const el::PathRecord& p) { return p.labels == std::vector<int>{4, 3, 5}; }));
}

TEST_CASE("rising paths follow the minimum and maximum rules") {
  std::mt19937 rng(109);
  std::vector<SubwordComplex> cases{running_example()};
  for (int t = 0; t < 40; ++t) cases.push_back(random_complex(rng, 3, 9));
  for (const auto& c : cases) {
    const auto g = flip_graph(c);
    const auto pos = g.digraph(EdgeLabel::positive);
    const auto neg = g.digraph(EdgeLabel::negative);
    const int n = pos.num_vertices();
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const auto rp = el::monotone_paths(pos, u, v, el::Monotone::rising);
        if (rp.empty()) continue;
        REQUIRE(rp.size() == 1);
        const auto& J = g.facets[static_cast<std::size_t>(v)].positions;
        for (std::size_t k = 0; k < rp[0].labels.size(); ++k) {
          const auto& Ik = g.facets[static_cast<std::size_t>(rp[0].vertices[k])].positions;
          CHECK(rp[0].labels[k] == (Ik - J).min());
        }
        const auto rn = el::monotone_paths(neg, u, v, el::Monotone::rising);
        REQUIRE(rn.size() == 1);
        const auto& I1 = g.facets[static_cast<std::size_t>(u)].positions;
        for (std::size_t k = 0; k < rn[0].labels.size(); ++k) {
          const auto& Ik1 = g.facets[static_cast<std::size_t>(rn[0].vertices[k + 1])].positions;
          CHECK(rn[0].labels[k] == (Ik1 - I1).max());
        }
      }
  }
}

TEST_CASE("right and left recursions agree with brute force") {
  std::mt19937 rng(113);
  for (int t = 0; t < 300; ++t) {
    const auto c = random_complex(rng, 4, 12);
    const auto right = facets_inductive(c, Side::right);
    CHECK(right == facets_inductive(c, Side::left));
    CHECK(right == brute_force_facets(c));
    for (const auto& I : right) CHECK(I.size() == c.facet_size());
  }
}

TEST_CASE("h-vector equals the f-vector transform") {
  std::mt19937 rng(127);
  int tested = 0, spherical = 0;
  for (int t = 0; t < 400 && tested < 60; ++t) {
    const auto c = random_complex(rng, 4, 12);
    const auto g = flip_graph(c);
    if (g.facets.size() > 200) continue;
    ++tested;
    const auto h = h_vector(g);
    CHECK(h.front() == 1);
    long long sum = 0;
    for (long long x : h) sum += x;
    CHECK(sum == static_cast<long long>(g.facets.size()));
    CHECK(h_from_f(face_f_vector(c), c.facet_size()) == h);
    if (is_spherical(c)) {
      ++spherical;
      std::vector<long long> full = h;
      full.resize(static_cast<std::size_t>(c.facet_size()) + 1, 0);
      CHECK(std::equal(full.begin(), full.end(), full.rbegin()));
    }
  }
  CHECK(tested >= 50);
  CHECK(spherical > 0);
  CHECK(h_vector(flip_graph(make_complex(sys_of("A1"), {1}, {1}))) == std::vector<long long>{1});
}

TEST_CASE("reversal") {
  const auto c = running_example();
  const auto r = reverse_complex(c);
  CHECK(r.word() == GenWord{1, 3, 2, 1, 2, 3, 1, 3, 2});
  CHECK(r.rho() == c.rho().inverse());
  CHECK(verify_reversal(c));
  CHECK(reverse_complex(r).word() == c.word());
  CHECK(reverse_complex(r).rho() == c.rho());
  std::vector<PositionSet> mirrored;
  for (const auto& I : facets_inductive(c, Side::right)) mirrored.push_back(I.reversed());
  std::sort(mirrored.begin(), mirrored.end());
  CHECK(facets_inductive(r, Side::right) == mirrored);
  const auto gr = flip_graph(r);
  CHECK(gr.facets[static_cast<std::size_t>(gr.digraph(EdgeLabel::positive).sinks()[0])].positions == ps("4 5 7 8 9", 9));
  // An increasing flip I -> J becomes the increasing flip rev J -> rev I.
  const auto g = flip_graph(c);
  for (const auto& e : g.edges) {
    const int from = gr.index_of(g.facets[static_cast<std::size_t>(e.to)].positions.reversed());
    const int to = gr.index_of(g.facets[static_cast<std::size_t>(e.from)].positions.reversed());
    const auto it = std::find_if(gr.edges.begin(), gr.edges.end(), [&](const FlipEdge& f) { return f.from == from && f.to == to; });
    REQUIRE(it != gr.edges.end());
    CHECK(e.neg_label == 10 - it->pos_label);
    CHECK(e.pos_label == 10 - it->neg_label);
  }
  std::mt19937 rng(131);
  for (int t = 0; t < 100; ++t) CHECK(verify_reversal(random_complex(rng, 4, 10)));
}

TEST_CASE("sphericity") {
  const auto a3 = sys_of("A3");
  const GenWord cw{1, 2, 3};
  GenWord word = cw;
  const auto sorting = a3->sorting_word(a3->longest_element(), cw);
  word.insert(word.end(), sorting.letters.begin(), sorting.letters.end());
  const auto camb = SubwordComplex(a3, word, a3->longest_element());
  CHECK(is_spherical(camb));
  for (const auto& I : facets_inductive(camb, Side::right)) {
    const auto F = camb.make_facet(I);
    CHECK(camb.flippable(F).size() == static_cast<std::size_t>(I.size()));
  }
  CHECK_FALSE(is_spherical(running_example()));
  CHECK(is_spherical(make_complex(sys_of("A1"), {1, 1}, {1})));
  std::mt19937 rng(137);
  for (int t = 0; t < 100; ++t) {
    const auto c = random_complex(rng, 3, 9);
    bool all = true;
    for (const auto& I : facets_inductive(c, Side::right)) {
      const auto F = c.make_facet(I);
      all = all && c.flippable(F).size() == static_cast<std::size_t>(I.size());
    }
    CHECK(is_spherical(c) == all);
  }
}

TEST_CASE("restriction: worked A5 example") {
  const auto a5 = sys_of("A5");
  const auto c = make_complex(a5, {1, 2, 4, 2, 5, 3, 1, 3, 4, 2, 5, 3, 1, 2, 4, 4, 3}, {1, 2, 3, 4, 5, 1, 4, 3});
  const auto F0 = c.make_facet(ps("2 3 5 7 8 10 12 14 15", 17));
  const std::vector<Root> span{Root{{1, 1, 0, 0, 0}}, Root{{0, 0, 1, 0, 0}}, Root{{0, 0, 0, 0, 1}}};
  const auto r = restrict(c, F0, span);
  CHECK(r.positions == std::vector<int>{2, 4, 5, 6, 8, 10, 15, 16});
  CHECK(r.complex->word() == GenWord{1, 1, 3, 2, 2, 1, 3, 3});
  CHECK(r.facet.positions == ps("1 3 5 6 7", 8));
  CHECK(r.system->type_name() == "A2xA1");
  CHECK_THROWS_AS(restrict(c, F0, {Root{{1, 0, 0, 0, 0}}, Root{{2, 0, 0, 0, 0}}}), std::invalid_argument);
}

TEST_CASE("restriction to the whole space and to one root") {
  std::mt19937 rng(139);
  for (int t = 0; t < 60; ++t) {
    const auto c = random_complex(rng, 4, 10, 1);
    const auto facets = facets_inductive(c, Side::right);
    const auto F0 = c.make_facet(facets[rng() % facets.size()]);
    const int n = c.system().rank();
    std::vector<Root> all;
    for (int s = 1; s <= n; ++s) all.push_back(c.system().root(c.system().simple_root(s)));
    const auto whole = restrict(c, F0, all);
    CHECK(whole.complex->word() == c.word());
    CHECK(whole.facet.positions == F0.positions);
    CHECK(facets_inductive(*whole.complex, Side::right) == facets);

    const RootId beta = F0.root(static_cast<int>(1 + rng() % static_cast<unsigned>(c.size())));
    const auto one = restrict(c, F0, {c.system().root(c.system().abs(beta))});
    CHECK(one.system->type_name() == "A1");
    const auto sub = facets_inductive(*one.complex, Side::right);
    const bool inverted = c.inversion_slot(c.system().abs(beta)) >= 0;
    CHECK(sub.size() == (inverted ? one.positions.size() : 1));
    for (const auto& J : sub) CHECK(c.is_facet(one.lift(J, F0.positions)));
  }
}

TEST_CASE("restricted flips match span-direction flips") {
  std::mt19937 rng(149);
  int tested = 0;
  for (int t = 0; t < 400 && tested < 60; ++t) {
    const auto c = random_complex(rng, 4, 11, 2);
    const auto& sys = c.system();
    const auto facets = facets_inductive(c, Side::right);
    const auto F0 = c.make_facet(facets[rng() % facets.size()]);
    std::vector<Root> span;
    for (int k = 0; k < 2; ++k) {
      const RootId b = sys.abs(F0.root(static_cast<int>(1 + rng() % static_cast<unsigned>(c.size()))));
      span.push_back(sys.root(b));
    }
    std::optional<Restriction> r;
    try {
      r = restrict(c, F0, span);
    } catch (const std::invalid_argument&) {
      span.pop_back();
      r = restrict(c, F0, span);
    }
    ++tested;
    std::set<int> ambient, lifted;
    for (const auto& f : c.flippable(F0)) {
      if (std::find(r->positions.begin(), r->positions.end(), f.position) == r->positions.end()) continue;
      ambient.insert(f.position);
    }
    for (const auto& f : r->complex->flippable(r->facet)) {
      const int x = r->positions[static_cast<std::size_t>(f.position - 1)];
      lifted.insert(x);
      const auto sub = r->complex->flip(r->facet, f.position);
      const auto amb = c.flip(F0, x);
      CHECK(r->lift(sub.facet.positions, F0.positions) == amb.facet.positions);
      CHECK(r->positions[static_cast<std::size_t>(sub.j - 1)] == amb.j);
      CHECK(sub.sign == amb.sign);
    }
    CHECK(ambient == lifted);
    // Order of letters is preserved.
    CHECK(std::is_sorted(r->positions.begin(), r->positions.end()));
  }
  CHECK(tested == 60);
}
