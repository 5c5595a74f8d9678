// Serial versus parallel greedy flip streaming, and the inductive enumerator,
// on multi-cluster words c^k w0(c) in a fixed group.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <omp.h>
#include <string>

#include "subword/flipstream.hpp"

using namespace subword;

int main(int argc, char** argv) {
  if (argc > 1 && (std::string(argv[1]) == "-h" || std::string(argv[1]) == "--help")) {
    std::printf("usage: %s [type=A3] [kmax=8] [reps=3]\n", argv[0]);
    return 0;
  }
  const std::string type = argc > 1 ? argv[1] : "A3";
  const int kmax = argc > 2 ? std::atoi(argv[2]) : 8;
  const int reps = argc > 3 ? std::atoi(argv[3]) : 3;
  auto sys = std::make_shared<const CoxeterSystem>(CoxeterSystem::from_spec(type));
  GenWord c;
  for (int s = 1; s <= sys->rank(); ++s) c.push_back(s);
  const auto w0c = sys->sorting_word(sys->longest_element(), c).letters;
  std::printf("threads %d\n", omp_get_max_threads());
  std::printf("%4s %4s %10s %14s %14s %14s %10s %10s\n", "k", "m", "facets", "greedy_ns", "parallel_ns", "inductive_ns",
              "live_ints", "bound");
  for (int k = 1; k <= kmax; ++k) {
    GenWord word;
    for (int r = 0; r < k; ++r) word.insert(word.end(), c.begin(), c.end());
    word.insert(word.end(), w0c.begin(), w0c.end());
    const SubwordComplex cx(sys, word, sys->longest_element());
    const auto rep = benchmark(cx, reps);
    std::printf("%4d %4d %10llu %14.1f %14.1f %14.1f %10zu %10zu\n", k, rep.m,
                static_cast<unsigned long long>(rep.facets_greedy), rep.greedy_ns_per_facet, rep.parallel_ns_per_facet,
                rep.inductive_ns_per_facet, rep.peak_live_ints, rep.live_bound);
  }
}
