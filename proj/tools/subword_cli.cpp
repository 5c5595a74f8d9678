// Command-line front end for subword complexes.
//
// Exit codes: 0 success, 2 parse or usage error, 3 target not representable,
// 4 cap exceeded, 5 integrity failure.

#include <CLI11.hpp>
#include <json.hpp>
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <omp.h>
#include <string>

#include "subword/errors.hpp"
#include "subword/flipstream.hpp"
#include "subword/posets.hpp"
#include "subword/render.hpp"

using namespace subword;

namespace {

struct Common {
  std::string type;
  std::string word;
  std::string rho;
  std::string format = "text";
  int threads = 0;
};

std::size_t facet_cap() {
  if (const char* env = std::getenv("SUBWORD_FACET_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw ParseError("SUBWORD_FACET_CAP must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return kDefaultFacetCap;
}

std::shared_ptr<const CoxeterSystem> make_system(const std::string& type) {
  return std::make_shared<const CoxeterSystem>(CoxeterSystem::from_spec(type));
}

SubwordComplex build(const Common& o) {
  auto sys = make_system(o.type);
  return make_complex(sys, parse_word(o.word), parse_word(o.rho));
}

void add_common(CLI::App* sub, Common& o, bool formats) {
  sub->add_option("--type", o.type, "Coxeter type, e.g. A3 or A2xA1")->required();
  sub->add_option("--word", o.word, "word Q, e.g. 2,3,1,3,2,1,2,3,1")->required();
  sub->add_option("--rho", o.rho, "word for rho (need not be reduced); empty for e")->default_val("");
  sub->add_option("--threads", o.threads, "OpenMP threads (0 keeps the default)");
  if (formats) sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "dot", "json"}));
}

void apply_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

void print_facets(const std::vector<PositionSet>& facets, const std::string& format) {
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& f : facets) j.push_back(f.to_vector());
    std::cout << nlohmann::json{{"facets", j}}.dump() << "\n";
    return;
  }
  for (const auto& f : facets) std::cout << f.to_string() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Subword complexes on finite Coxeter groups (1-based positions and generators)"};
  app.require_subcommand(1);

  Common o;
  std::string algo = "greedy";
  auto* facets = app.add_subcommand("facets", "list all facets");
  add_common(facets, o, true);
  facets->add_option("--algo", algo, "greedy (streamed) or inductive")->check(CLI::IsMember({"greedy", "inductive"}));

  auto* graph = app.add_subcommand("graph", "increasing flip graph as DOT");
  add_common(graph, o, true);

  std::string kind_name = "pos-source";
  auto* tree = app.add_subcommand("tree", "canonical spanning tree as DOT");
  add_common(tree, o, true);
  tree->add_option("--kind", kind_name, "pos-source, pos-sink, neg-source or neg-sink");

  auto* stats = app.add_subcommand("stats", "summary as JSON");
  add_common(stats, o, false);

  std::string facet_text;
  auto* network = app.add_subcommand("network", "type A network as ASCII");
  add_common(network, o, false);
  network->add_option("--facet", facet_text, "facet, e.g. \"1 3 4 7 9\"");

  int reps = 3;
  auto* bench = app.add_subcommand("bench", "time the greedy flip and inductive enumerators");
  add_common(bench, o, false);
  bench->add_option("--reps", reps, "repetitions")->check(CLI::PositiveNumber);

  std::string cox;
  auto* camb = app.add_subcommand("cambrian", "Cambrian lattice and its flip poset");
  camb->add_option("--type", o.type, "Coxeter type")->required();
  camb->add_option("--cox", cox, "Coxeter word c")->required();

  std::string rho_word, dup;
  auto* dupl = app.add_subcommand("duplicate", "duplicated-word complex");
  dupl->add_option("--type", o.type, "Coxeter type")->required();
  dupl->add_option("--rho-word", rho_word, "reduced word for rho")->required();
  dupl->add_option("--dup", dup, "positions of rho_word to duplicate")->default_val("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  apply_threads(o.threads);

  if (*facets) {
    const auto c = build(o);
    if (o.format == "dot") throw ParseError("facets supports text and json");
    if (algo == "inductive") {
      print_facets(facets_inductive(c, Side::right), o.format);
    } else {
      print_facets(stream_facet_list(c, TreeKind::PosSink, o.threads > 1 ? Exec::parallel : Exec::serial), o.format);
    }
  } else if (*graph) {
    const auto c = build(o);
    const auto g = flip_graph(c, facet_cap(), o.threads > 1 ? Exec::parallel : Exec::serial);
    std::cout << graph_dot(g);
  } else if (*tree) {
    const auto kind = parse_tree_kind(kind_name);
    if (!kind) throw ParseError("unknown tree kind '" + kind_name + "'");
    const auto c = build(o);
    const auto g = flip_graph(c, facet_cap());
    std::cout << tree_dot(spanning_tree_direct(c, g, *kind), g);
  } else if (*stats) {
    std::cout << stats_json(compute_stats(build(o), facet_cap()));
  } else if (*network) {
    const auto c = build(o);
    if (facet_text.empty()) {
      std::cout << render_network(c).ascii;
    } else {
      const auto F = c.make_facet(parse_positions(facet_text, c.size()));
      std::cout << render_network(c, &F.positions).ascii;
    }
  } else if (*bench) {
    const auto c = build(o);
    const auto r = benchmark(c, reps);
    nlohmann::ordered_json j;
    j["m"] = r.m;
    j["rank"] = r.rank;
    j["facets_greedy"] = r.facets_greedy;
    j["facets_inductive"] = r.facets_inductive;
    j["greedy_ns_per_facet"] = r.greedy_ns_per_facet;
    j["inductive_ns_per_facet"] = r.inductive_ns_per_facet;
    j["parallel_ns_per_facet"] = r.parallel_ns_per_facet;
    j["peak_live_ints"] = r.peak_live_ints;
    j["live_bound"] = r.live_bound;
    j["repetitions"] = r.repetitions;
    std::cout << j.dump(2) << "\n";
  } else if (*camb) {
    auto sys = make_system(o.type);
    const GenWord c = parse_word(cox);
    const auto data = cambrian(*sys, c);
    const auto iso = verify_cambrian_isomorphism(sys, c);
    std::cout << "size " << data.sortables.size() << "\n"
              << "lattice " << (data.is_lattice ? "yes" : "no") << "\n"
              << "km_labeling " << el::to_string(el::check_labeling_fast(data.km)) << "\n"
              << "isomorphism " << (iso.ok() ? "OK" : "FAILED") << "\n"
              << "tree_edges_only_in_positive_source " << iso.only_in_source_tree.size() << "\n"
              << "tree_edges_only_in_sorting " << iso.only_in_sorting_tree.size() << "\n";
  } else if (*dupl) {
    auto sys = make_system(o.type);
    const GenWord rw = parse_word(rho_word);
    const auto d = duplicated_complex(sys, rw, parse_positions(dup, static_cast<int>(rw.size())));
    const auto g = flip_graph(d.complex, facet_cap());
    const int chi = static_cast<int>(d.duplicated.size());
    bool cube = chi == 0 ? g.edges.empty() && g.facets.size() == 1 : false;
    if (chi > 0) {
      const auto ref = el::cube_fixture(chi);
      cube = static_cast<int>(g.facets.size()) == ref.num_vertices() && g.edges.size() == ref.edges().size();
      for (const auto& e : ref.edges()) {
        if (!cube) break;
        const int u = g.index_of(d.facet_of(static_cast<std::uint32_t>(e.source)));
        const int v = g.index_of(d.facet_of(static_cast<std::uint32_t>(e.target)));
        const auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const FlipEdge& f) { return f.from == u && f.to == v; });
        cube = it != g.edges.end() && it->pos_label == d.duplicated[static_cast<std::size_t>(e.label - 1)] &&
               it->neg_label == it->pos_label + 1;
      }
    }
    std::cout << "word " << format_word(d.complex.word()) << "\n"
              << "facets " << g.facets.size() << "\n"
              << "cube d=" << chi << " " << (cube ? "yes" : "no") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedType& e) {
    std::cerr << "unsupported type: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const NotRepresentable& e) {
    std::cerr << "not representable: " << e.what() << "\n";
    return 3;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 4;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity failure: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
