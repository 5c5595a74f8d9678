#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("type descriptors build the expected root systems") {
  CHECK(CoxeterSystem::from_spec("A3").rank() == 3);
  CHECK(CoxeterSystem::from_spec("A3").num_positive_roots() == 6);
  CHECK(CoxeterSystem::from_spec("A2xA1").rank() == 3);
  CHECK(CoxeterSystem::from_spec("A2xA1").num_positive_roots() == 4);
  CHECK(CoxeterSystem::from_spec("G2").num_positive_roots() == 6);
  for (int n = 1; n <= 10; ++n)
    CHECK(CoxeterSystem::from_spec("A" + std::to_string(n)).num_positive_roots() == n * (n + 1) / 2);
  for (int n = 2; n <= 6; ++n) {
    CHECK(CoxeterSystem::from_spec("B" + std::to_string(n)).num_positive_roots() == n * n);
    CHECK(CoxeterSystem::from_spec("C" + std::to_string(n)).num_positive_roots() == n * n);
  }
  for (int n = 4; n <= 7; ++n) CHECK(CoxeterSystem::from_spec("D" + std::to_string(n)).num_positive_roots() == n * (n - 1));
  CHECK(CoxeterSystem::from_spec("E6").num_positive_roots() == 36);
  CHECK(CoxeterSystem::from_spec("E7").num_positive_roots() == 63);
  CHECK(CoxeterSystem::from_spec("E8").num_positive_roots() == 120);
  CHECK(CoxeterSystem::from_spec("F4").num_positive_roots() == 24);
  CHECK(CoxeterSystem::from_spec("a3").num_positive_roots() == 6);
  CHECK(CoxeterSystem::from_spec("D3").num_positive_roots() == 6);
  CHECK(CoxeterSystem::from_spec("D2").num_positive_roots() == 2);
  CHECK(CoxeterSystem::from_spec("I2(6)").num_positive_roots() == 6);
  CHECK(CoxeterSystem::from_spec("I2(4)").num_positive_roots() == 4);
}

TEST_CASE("unsupported and malformed descriptors are rejected") {
  CHECK_THROWS_AS(CoxeterSystem::from_spec("H3"), UnsupportedType);
  CHECK_THROWS_AS(CoxeterSystem::from_spec("H4"), UnsupportedType);
  CHECK_THROWS_AS(CoxeterSystem::from_spec("I2(5)"), UnsupportedType);
  CHECK_THROWS_AS(CoxeterSystem::from_spec(""), ParseError);
  CHECK_THROWS_AS(CoxeterSystem::from_spec("A"), ParseError);
  CHECK_THROWS_AS(CoxeterSystem::from_spec("Q3"), ParseError);
  CHECK_THROWS_AS(CoxeterSystem::from_spec("A3x"), ParseError);
  CHECK_THROWS(CoxeterSystem::from_spec("A11"));
  CHECK_THROWS(CoxeterSystem::from_spec("A6xA5"));
  CHECK_THROWS(CoxeterSystem::from_spec("E9"));
}

TEST_CASE("Cartan conventions: short last root in B, long in C") {
  const auto b3 = CoxeterSystem::from_spec("B3");
  const auto c3 = CoxeterSystem::from_spec("C3");
  CHECK(b3.cartan(3, 2) == -2);
  CHECK(b3.cartan(2, 3) == -1);
  CHECK(c3.cartan(2, 3) == -2);
  CHECK(b3.is_root(Root{{1, 2, 2}}));
  CHECK_FALSE(b3.is_root(Root{{2, 2, 1}}));
  CHECK(c3.is_root(Root{{2, 2, 1}}));
  const auto g2 = CoxeterSystem::from_spec("G2");
  CHECK(g2.is_root(Root{{3, 2}}) != g2.is_root(Root{{2, 3}}));
}

TEST_CASE("simple reflections act through the Cartan matrix") {
  const auto a2 = CoxeterSystem::from_spec("A2");
  const Root a1{{1, 0}}, a2r{{0, 1}};
  CHECK(a2.apply_word({}, a1) == a1);
  CHECK(a2.apply_word({1}, a1) == Root{{-1, 0}});
  CHECK(a2.apply_word({1}, a2r) == Root{{1, 1}});
  CHECK(a2.apply_word({1, 2}, a1) == Root{{0, 1}});
}

TEST_CASE("elements, lengths and inversions") {
  const auto a3 = CoxeterSystem::from_spec("A3");
  CHECK(a3.element_of_word({}).is_identity());
  const Element rho = a3.element_of_word(kRhoEx);
  CHECK(a3.length(rho) == 4);
  CHECK(a3.inversions(rho).count() == 4);
  CHECK(a3.inversions(a3.identity()).none());
  CHECK(a3.length(a3.longest_element()) == 6);
  for (int s = 1; s <= 3; ++s) CHECK(a3.element_of_word({s, s}).is_identity());
  CHECK(a3.longest_element_word().size() == 6);
  CHECK(CoxeterSystem::from_spec("A1").longest_element_word() == GenWord{1});
  CHECK(CoxeterSystem::from_spec("A2").longest_element_word().size() == 3);
  for (const auto& t : kSmallTypes) {
    const auto sys = CoxeterSystem::from_spec(t);
    const auto w0 = sys.longest_element_word();
    CHECK(sys.is_reduced(w0));
    CHECK(static_cast<int>(w0.size()) == sys.num_positive_roots());
    CHECK(static_cast<int>(sys.inversions(sys.longest_element()).count()) == sys.num_positive_roots());
  }
}

TEST_CASE("group orders by enumeration") {
  CHECK(CoxeterSystem::from_spec("A3").enumerate_group().size() == 24);
  CHECK(CoxeterSystem::from_spec("A4").enumerate_group().size() == 120);
  CHECK(CoxeterSystem::from_spec("B3").enumerate_group().size() == 48);
  CHECK(CoxeterSystem::from_spec("D4").enumerate_group().size() == 192);
  CHECK(CoxeterSystem::from_spec("G2").enumerate_group().size() == 12);
  CHECK(CoxeterSystem::from_spec("F4").enumerate_group().size() == 1152);
  CHECK_THROWS_AS(CoxeterSystem::from_spec("A5").enumerate_group(100), CapExceeded);
}

TEST_CASE("length equals the inversion count read off any reduced word") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto sys = CoxeterSystem::from_spec(kSmallTypes[trial % kSmallTypes.size()]);
    GenWord w(static_cast<std::size_t>(rng() % 10));
    for (auto& q : w) q = 1 + static_cast<int>(rng() % static_cast<unsigned>(sys.rank()));
    const Element e = sys.element_of_word(w);
    const GenWord red = sys.reduced_word(e);
    CHECK(sys.is_reduced(red));
    CHECK(sys.element_of_word(red) == e);
    CHECK(static_cast<int>(red.size()) == sys.length(e));
    RootSet from_word;
    for (RootId r : sys.word_inversion_sequence(red)) {
      CHECK(sys.is_positive(r));
      from_word.set(r.value);
    }
    CHECK(from_word == sys.inversions(e));
    GenWord rev(w.rbegin(), w.rend());
    CHECK(sys.element_of_word(rev) == e.inverse());
    CHECK(sys.multiply(e, e.inverse()).is_identity());
  }
}

TEST_CASE("weak order by inversion sets matches the prefix definition on S4") {
  const auto sys = CoxeterSystem::from_spec("A3");
  const auto group = sys.enumerate_group();
  for (const auto& u : group)
    for (const auto& w : group) {
      const bool prefix = sys.length(u) + sys.length(sys.multiply(u.inverse(), w)) == sys.length(w);
      CHECK(sys.weak_le(u, w) == prefix);
    }
}

TEST_CASE("roots stay sign-coherent roots under generators") {
  std::mt19937 rng(5);
  for (const auto& t : kSmallTypes) {
    const auto sys = CoxeterSystem::from_spec(t);
    for (int id = 0; id < sys.num_roots(); ++id) {
      Root r = sys.root(RootId{static_cast<std::uint16_t>(id)});
      for (int step = 0; step < 12; ++step) {
        r = sys.apply_word({1 + static_cast<int>(rng() % static_cast<unsigned>(sys.rank()))}, r);
        CHECK(sys.is_root(r));
        CHECK((r.is_positive() || r.is_negative()));
      }
    }
    for (int s = 1; s <= sys.rank(); ++s)
      for (int id = 0; id < sys.num_roots(); ++id) {
        const RootId r{static_cast<std::uint16_t>(id)};
        CHECK(sys.act(s, sys.act(s, r)) == r);
      }
  }
}

TEST_CASE("Demazure product dominates every subword product in Bruhat order") {
  const auto a1 = CoxeterSystem::from_spec("A1");
  CHECK(a1.demazure_product({1, 1}) == a1.element_of_word({1}));
  // Not in weak order: s2 is a subword product of (1,2) but inv(s2) is not in inv(s1 s2).
  const auto a2 = CoxeterSystem::from_spec("A2");
  CHECK_FALSE(a2.weak_le(a2.element_of_word({2}), a2.demazure_product({1, 2})));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sys = CoxeterSystem::from_spec(kSmallTypes[trial % 8]);
    GenWord w(static_cast<std::size_t>(rng() % 9));
    for (auto& q : w) q = 1 + static_cast<int>(rng() % static_cast<unsigned>(sys.rank()));
    const Element d = sys.demazure_product(w);
    if (sys.is_reduced(w)) CHECK(d == sys.element_of_word(w));
    auto subword_products = [&](const GenWord& word) {
      std::vector<Element> out;
      for (std::uint32_t mask = 0; mask < (1U << word.size()); ++mask) {
        GenWord sub;
        for (std::size_t k = 0; k < word.size(); ++k)
          if ((mask >> k) & 1U) sub.push_back(word[k]);
        out.push_back(sys.element_of_word(sub));
      }
      return out;
    };
    // Bruhat ideal of d: subword products of one reduced word of d.
    const auto below_d = subword_products(sys.reduced_word(d));
    bool attained = false;
    for (const auto& e : subword_products(w)) {
      CHECK(std::find(below_d.begin(), below_d.end(), e) != below_d.end());
      if (e == d) attained = true;
    }
    CHECK(attained);
  }
}

TEST_CASE("c-sorting words") {
  const auto a3 = CoxeterSystem::from_spec("A3");
  CHECK(a3.sorting_word(a3.identity(), {1, 2, 3}).letters.empty());
  const auto w0 = a3.sorting_word(a3.longest_element(), {1, 2, 3});
  CHECK(w0.letters == GenWord{1, 2, 3, 1, 2, 1});
  CHECK(w0.positions == std::vector<int>{1, 2, 3, 4, 5, 7});
  CHECK(w0.blocks == std::vector<std::vector<int>>{{1, 2, 3}, {1, 2}, {1}});

  const auto a4 = CoxeterSystem::from_spec("A4");
  const GenWord c{4, 2, 3, 1};
  const auto w1 = a4.sorting_word(a4.element_of_word({2, 3, 1, 2}), c);
  CHECK(w1.letters == GenWord{2, 3, 1, 2});
  CHECK(w1.blocks.size() == 2);
  for (GenWord w : std::vector<GenWord>{{2, 3, 1, 2}, {2, 3, 1, 2, 1}, {2, 3, 1, 2, 3}, {2, 3, 1, 2, 3, 1}})
    CHECK(a4.is_sortable(a4.element_of_word(w), c));
  CHECK_THROWS_AS(a4.sorting_word(a4.identity(), {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(a4.sorting_word(a4.identity(), {1, 2, 3, 3}), std::invalid_argument);
}

TEST_CASE("sortability") {
  const auto a2 = CoxeterSystem::from_spec("A2");
  CHECK(a2.is_sortable(a2.identity(), {1, 2}));
  CHECK_FALSE(a2.is_sortable(a2.element_of_word({2, 1}), {1, 2}));
  CHECK(a2.is_sortable(a2.element_of_word({2, 1}), {2, 1}));
  for (const std::string t : {"A2", "A3", "B3"}) {
    const auto sys = CoxeterSystem::from_spec(t);
    GenWord c;
    for (int s = 1; s <= sys.rank(); ++s) c.push_back(s);
    do {
      CHECK(sys.is_sortable(sys.longest_element(), c));
      const auto sw = sys.sorting_word(sys.longest_element(), c);
      CHECK(sys.is_reduced(sw.letters));
      CHECK(sys.element_of_word(sw.letters) == sys.longest_element());
    } while (std::next_permutation(c.begin(), c.end()));
  }
}

TEST_CASE("word parsing") {
  CHECK(parse_word("2,3,1") == GenWord{2, 3, 1});
  CHECK(parse_word("2 3 1") == GenWord{2, 3, 1});
  CHECK(parse_word("").empty());
  CHECK(parse_word("e").empty());
  CHECK(format_word({2, 3, 1}) == "2,3,1");
  try {
    parse_word("1,2,x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse_word("0"), ParseError);
  CHECK_THROWS(CoxeterSystem::from_spec("A2").check_word({3}));
}
