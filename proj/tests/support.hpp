#pragma once

// Shared fixtures and brute-force oracles for the test suites.

#include <algorithm>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "subword/errors.hpp"
#include "subword/flipstream.hpp"
#include "subword/posets.hpp"

namespace testing {

using namespace subword;

inline std::shared_ptr<const CoxeterSystem> sys_of(const std::string& spec) {
  return std::make_shared<const CoxeterSystem>(CoxeterSystem::from_spec(spec));
}

inline const GenWord kQex{2, 3, 1, 3, 2, 1, 2, 3, 1};
inline const GenWord kRhoEx{3, 2, 3, 1};

inline SubwordComplex running_example() { return make_complex(sys_of("A3"), kQex, kRhoEx); }

inline PositionSet ps(const std::string& text, int universe) { return parse_positions(text, universe); }

inline std::vector<std::string> kSmallTypes{"A1", "A2", "A3", "A4", "B2", "B3", "C3", "B4", "C4", "D4",
                                            "F4", "G2", "A1xA1", "A2xA1", "A1xA1xA1", "B2xA1"};

/// Random word of length <= max_m on a random type of rank <= max_rank, with
/// rho the Demazure product of a random subword (hence representable).
inline SubwordComplex random_complex(std::mt19937& rng, int max_rank, int max_m, int min_m = 0) {
  std::vector<std::string> types;
  for (const auto& t : kSmallTypes)
    if (CoxeterSystem::from_spec(t).rank() <= max_rank) types.push_back(t);
  const auto sys = sys_of(types[std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng)]);
  const int m = std::uniform_int_distribution<int>(min_m, max_m)(rng);
  GenWord word(static_cast<std::size_t>(m));
  for (auto& q : word) q = std::uniform_int_distribution<int>(1, sys->rank())(rng);
  const double keep = std::uniform_real_distribution<double>(0.0, 0.9)(rng);
  GenWord sub;
  for (int q : word)
    if (std::bernoulli_distribution(keep)(rng)) sub.push_back(q);
  return SubwordComplex(sys, word, sys->demazure_product(sub));
}

/// SC(c^k w0(c), w0): the multi-cluster instances used for timing.
inline SubwordComplex multicluster(const std::shared_ptr<const CoxeterSystem>& sys, const GenWord& c, int k) {
  GenWord word;
  for (int t = 0; t < k; ++t) word.insert(word.end(), c.begin(), c.end());
  const auto w0 = sys->sorting_word(sys->longest_element(), c);
  word.insert(word.end(), w0.letters.begin(), w0.letters.end());
  return SubwordComplex(sys, word, sys->longest_element());
}

/// Facets by brute force: complements of size l(rho) that are reduced words
/// for rho.
inline std::vector<PositionSet> brute_force_facets(const SubwordComplex& c) {
  const auto& sys = c.system();
  const int m = c.size();
  std::vector<PositionSet> out;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    if (m - std::popcount(mask) != c.rho_length()) continue;
    GenWord rest;
    for (int k = 1; k <= m; ++k)
      if (!((mask >> (k - 1)) & 1U)) rest.push_back(c.letter(k));
    if (!sys.is_reduced(rest) || !(sys.element_of_word(rest) == c.rho())) continue;
    PositionSet I(m);
    for (int k = 1; k <= m; ++k)
      if ((mask >> (k - 1)) & 1U) I.insert(k);
    out.push_back(I);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// r(I, k) by applying root vectors letter by letter.
inline Root root_function_vectors(const SubwordComplex& c, const PositionSet& I, int k) {
  const auto& sys = c.system();
  GenWord prefix;
  for (int p = 1; p < k; ++p)
    if (!I.contains(p)) prefix.push_back(c.letter(p));
  return sys.apply_word(prefix, sys.root(sys.simple_root(c.letter(k))));
}

inline std::set<std::tuple<int, int, int, int>> edge_set(const LabeledFlipGraph& g) {
  std::set<std::tuple<int, int, int, int>> s;
  for (const auto& e : g.edges) s.insert({e.from, e.to, e.pos_label, e.neg_label});
  return s;
}

inline std::set<std::tuple<PositionSet, PositionSet, int, int>> tree_edges(const SpanningTreeResult& t) {
  std::set<std::tuple<PositionSet, PositionSet, int, int>> s;
  for (const auto& [child, e] : t.parent) s.insert({child, e.facet, e.pos_label, e.neg_label});
  return s;
}

}  // namespace testing
