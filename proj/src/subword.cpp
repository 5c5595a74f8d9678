#include "subword/subword.hpp"

#include <algorithm>
#include <tuple>
#include <numeric>
#include <stdexcept>
#include <string>

#include "subword/errors.hpp"

namespace subword {

Element absorb_right(const CoxeterSystem& sys, const GenWord& word, int first, int last, Element v,
                     PositionSet* absorbed) {
  for (int k = last; k >= first; --k) {
    const int q = word[static_cast<std::size_t>(k - 1)];
    if (sys.is_right_descent(v, q)) {
      v = sys.times_generator(v, q);
      if (absorbed) absorbed->insert(k);
    }
  }
  return v;
}

Element absorb_left(const CoxeterSystem& sys, const GenWord& word, int first, int last, Element v,
                    PositionSet* absorbed) {
  for (int k = first; k <= last; ++k) {
    const int q = word[static_cast<std::size_t>(k - 1)];
    if (sys.is_left_descent(v, q)) {
      v = sys.generator_times(q, v);
      if (absorbed) absorbed->insert(k);
    }
  }
  return v;
}

SubwordComplex::SubwordComplex(std::shared_ptr<const CoxeterSystem> system, GenWord word, const Element& rho)
    : system_(std::move(system)), word_(std::move(word)), rho_(rho) {
  if (!system_) throw std::invalid_argument("null Coxeter system");
  if (word_.size() > static_cast<std::size_t>(PositionSet::kMaxUniverse))
    throw std::invalid_argument("word longer than 1024 letters");
  system_->check_word(word_);
  if (rho_.rank() != system_->rank()) throw std::invalid_argument("element rank does not match the system");
  rho_inv_ = system_->inversions(rho_);
  rho_length_ = static_cast<int>(rho_inv_.count());
  rho_word_ = system_->reduced_word(rho_);
  inv_slot_.fill(-1);
  std::int16_t slot = 0;
  for (int k = 0; k < system_->num_positive_roots(); ++k)
    if (rho_inv_.test(static_cast<std::size_t>(k))) inv_slot_[static_cast<std::size_t>(k)] = slot++;
  if (!absorb_right(*system_, word_, 1, size(), rho_).is_identity())
    throw NotRepresentable("the word contains no reduced expression of rho = [" + format_word(rho_word_) + "]");
}

SubwordComplex make_complex(std::shared_ptr<const CoxeterSystem> system, GenWord word, const GenWord& rho_word) {
  const Element rho = system->element_of_word(rho_word);
  return SubwordComplex(std::move(system), std::move(word), rho);
}

RootId SubwordComplex::root_function(const PositionSet& I, int k) const {
  if (k < 1 || k > size()) throw std::out_of_range("position " + std::to_string(k) + " outside the word");
  Element prefix = system_->identity();
  for (int p = 1; p < k; ++p)
    if (!I.contains(p)) prefix = system_->times_generator(prefix, letter(p));
  return system_->apply(prefix, system_->simple_root(letter(k)));
}

std::vector<RootId> SubwordComplex::root_function_array(const PositionSet& I) const {
  std::vector<RootId> out(static_cast<std::size_t>(size()));
  Element prefix = system_->identity();
  for (int k = 1; k <= size(); ++k) {
    const int q = letter(k);
    out[static_cast<std::size_t>(k - 1)] = system_->apply(prefix, system_->simple_root(q));
    if (!I.contains(k)) prefix = system_->times_generator(prefix, q);
  }
  return out;
}

bool SubwordComplex::is_facet(const PositionSet& I) const {
  if (I.universe() != size() || I.size() != facet_size()) return false;
  Element w = system_->identity();
  for (int k = 1; k <= size(); ++k)
    if (!I.contains(k)) w = system_->times_generator(w, letter(k));
  return w == rho_;
}

Facet SubwordComplex::make_facet(const PositionSet& I) const {
  if (!is_facet(I)) throw std::invalid_argument("{" + I.to_string() + "} is not a facet");
  return Facet{I, root_function_array(I)};
}

bool SubwordComplex::is_flippable(const Facet& F, int i) const {
  return F.positions.contains(i) && rho_inv_.test(system_->abs(F.root(i)).value);
}

std::vector<FlippablePosition> SubwordComplex::flippable(const Facet& F) const {
  std::vector<FlippablePosition> out;
  for (int i = F.positions.min(); i != 0; i = F.positions.next_after(i)) {
    const RootId r = F.root(i);
    if (rho_inv_.test(system_->abs(r).value)) out.push_back({i, r, system_->is_positive(r) ? +1 : -1});
  }
  return out;
}

std::vector<std::pair<int, RootId>> SubwordComplex::root_configuration(const Facet& F) const {
  std::vector<std::pair<int, RootId>> out;
  for (int i = F.positions.min(); i != 0; i = F.positions.next_after(i))
    if (is_flippable(F, i)) out.emplace_back(i, F.root(i));
  return out;
}

int SubwordComplex::flip_partner(const Facet& F, int i) const {
  if (!is_flippable(F, i)) return 0;
  const RootId target = system_->abs(F.root(i));
  int found = 0;
  for (int k = 1; k <= size(); ++k) {
    if (F.positions.contains(k) || F.root(k) != target) continue;
    if (found) throw IntegrityError("two complement positions carry the same root");
    found = k;
  }
  if (!found) throw IntegrityError("flippable position without partner");
  return found;
}

int SubwordComplex::flip_in_place(Facet& F, int i) const {
  const int j = flip_partner(F, i);
  if (!j) throw std::invalid_argument("position " + std::to_string(i) + " is not flippable");
  const RootId beta = F.root(i);
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  for (int k = lo + 1; k <= hi; ++k) {
    auto& r = F.roots[static_cast<std::size_t>(k - 1)];
    r = system_->reflect(beta, r);
  }
  F.positions.erase(i);
  F.positions.insert(j);
#ifdef SUBWORD_CHECK_FLIPS
  if (F.roots != root_function_array(F.positions)) throw IntegrityError("flip update disagrees with recomputation");
#endif
  return j;
}

FlipResult SubwordComplex::flip(const Facet& F, int i) const {
  if (!F.positions.contains(i)) throw std::invalid_argument("position " + std::to_string(i) + " is not in the facet");
  Facet G = F;
  const int j = flip_in_place(G, i);
  return {std::move(G), j, i < j ? +1 : -1};
}

namespace {

struct InductiveWalker {
  const SubwordComplex& c;
  const CoxeterSystem& sys;
  const std::function<void(const PositionSet&)>& visit;
  PositionSet chosen;

  bool prefix_represents(int last, const Element& v) const {
    return absorb_right(sys, c.word(), 1, last, v).is_identity();
  }
  bool suffix_represents(int first, const Element& v) const {
    return absorb_left(sys, c.word(), first, c.size(), v).is_identity();
  }

  // Facets of SC(q_1..q_k, v), v representable in that prefix.
  void right(int k, const Element& v) {
    if (k == 0) {
      visit(chosen);
      return;
    }
    const int q = c.letter(k);
    if (!sys.is_right_descent(v, q)) {
      chosen.insert(k);
      right(k - 1, v);
      chosen.erase(k);
      return;
    }
    right(k - 1, sys.times_generator(v, q));
    if (prefix_represents(k - 1, v)) {
      chosen.insert(k);
      right(k - 1, v);
      chosen.erase(k);
    }
  }

  // Facets of SC(q_k..q_m, v), v representable in that suffix.
  void left(int k, const Element& v) {
    if (k > c.size()) {
      visit(chosen);
      return;
    }
    const int q = c.letter(k);
    if (!sys.is_left_descent(v, q)) {
      chosen.insert(k);
      left(k + 1, v);
      chosen.erase(k);
      return;
    }
    left(k + 1, sys.generator_times(q, v));
    if (suffix_represents(k + 1, v)) {
      chosen.insert(k);
      left(k + 1, v);
      chosen.erase(k);
    }
  }
};

}  // namespace

void for_each_facet_inductive(const SubwordComplex& c, Side side,
                              const std::function<void(const PositionSet&)>& visit) {
  InductiveWalker w{c, c.system(), visit, PositionSet(c.size())};
  if (side == Side::right)
    w.right(c.size(), c.rho());
  else
    w.left(1, c.rho());
}

std::vector<PositionSet> facets_inductive(const SubwordComplex& c, Side side) {
  std::vector<PositionSet> out;
  for_each_facet_inductive(c, side, [&](const PositionSet& I) { out.push_back(I); });
  std::sort(out.begin(), out.end());
  return out;
}

int LabeledFlipGraph::index_of(const PositionSet& I) const {
  const auto it = index.find(I);
  return it == index.end() ? -1 : it->second;
}

std::vector<int> LabeledFlipGraph::in_degrees() const {
  std::vector<int> deg(facets.size(), 0);
  for (const auto& e : edges) ++deg[static_cast<std::size_t>(e.to)];
  return deg;
}

el::LabeledDigraph LabeledFlipGraph::digraph(EdgeLabel label) const {
  std::vector<el::LabeledEdge> out;
  out.reserve(edges.size());
  for (const auto& e : edges)
    out.push_back({e.from, e.to, label == EdgeLabel::positive ? e.pos_label : e.neg_label});
  return el::LabeledDigraph(static_cast<int>(facets.size()), std::move(out));
}

LabeledFlipGraph flip_graph(const SubwordComplex& c, std::size_t cap, Exec exec) {
  PositionSet absorbed(c.size());
  absorb_right(c.system(), c.word(), 1, c.size(), c.rho(), &absorbed);
  std::vector<Facet> found{c.make_facet(PositionSet::full(c.size()) - absorbed)};
  std::unordered_map<PositionSet, int, PositionSetHash> seen{{found.front().positions, 0}};

  struct RawEdge {
    int from;
    PositionSet to;
    int i, j;
    RootId dir;
  };
  std::vector<RawEdge> raw;
  std::vector<int> frontier{0};
  const bool parallel = exec == Exec::parallel;
  while (!frontier.empty()) {
    std::vector<std::vector<FlipResult>> next(frontier.size());
    std::vector<std::vector<int>> outs(frontier.size());
    const auto count = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::ptrdiff_t f = 0; f < count; ++f) {
      const Facet& F = found[static_cast<std::size_t>(frontier[static_cast<std::size_t>(f)])];
      for (const auto& fp : c.flippable(F)) {
        next[static_cast<std::size_t>(f)].push_back(c.flip(F, fp.position));
        outs[static_cast<std::size_t>(f)].push_back(fp.position);
      }
    }
    std::vector<int> upcoming;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      const int from = frontier[f];
      for (std::size_t k = 0; k < next[f].size(); ++k) {
        auto& res = next[f][k];
        const int i = outs[f][k];
        if (res.sign > 0)
          raw.push_back({from, res.facet.positions, i, res.j, found[static_cast<std::size_t>(from)].root(i)});
        if (seen.contains(res.facet.positions)) continue;
        if (found.size() >= cap) throw CapExceeded("facet count exceeds cap of " + std::to_string(cap));
        seen.emplace(res.facet.positions, static_cast<int>(found.size()));
        upcoming.push_back(static_cast<int>(found.size()));
        found.push_back(std::move(res.facet));
      }
    }
    frontier = std::move(upcoming);
  }

  std::vector<int> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return found[static_cast<std::size_t>(a)].positions < found[static_cast<std::size_t>(b)].positions; });
  std::vector<int> rank(found.size());
  LabeledFlipGraph g;
  g.facets.reserve(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    rank[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    g.facets.push_back(std::move(found[static_cast<std::size_t>(order[k])]));
    g.index.emplace(g.facets.back().positions, static_cast<int>(k));
  }
  g.edges.reserve(raw.size());
  for (const auto& e : raw)
    g.edges.push_back({rank[static_cast<std::size_t>(e.from)], g.index.at(e.to), e.i, e.j, e.dir});
  std::sort(g.edges.begin(), g.edges.end(),
            [](const FlipEdge& a, const FlipEdge& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  return g;
}

std::vector<long long> h_vector(const LabeledFlipGraph& g) {
  std::vector<long long> h;
  for (int d : g.in_degrees()) {
    if (static_cast<std::size_t>(d) >= h.size()) h.resize(static_cast<std::size_t>(d) + 1, 0);
    ++h[static_cast<std::size_t>(d)];
  }
  return h;
}

std::vector<long long> face_f_vector(const SubwordComplex& c, std::uint64_t cap) {
  const int m = c.size();
  if (m >= 63 || (std::uint64_t{1} << m) > cap)
    throw CapExceeded("face enumeration over 2^" + std::to_string(m) + " subsets exceeds cap");
  const auto& sys = c.system();
  std::vector<long long> f(static_cast<std::size_t>(c.facet_size()) + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int size = std::popcount(mask);
    if (size > c.facet_size()) continue;
    // mask is a face iff the remaining letters still absorb rho
    Element v = c.rho();
    for (int k = m; k >= 1; --k) {
      if ((mask >> (k - 1)) & 1U) continue;
      const int q = c.letter(k);
      if (sys.is_right_descent(v, q)) v = sys.times_generator(v, q);
    }
    if (v.is_identity()) ++f[static_cast<std::size_t>(size)];
  }
  return f;
}

std::vector<long long> h_from_f(const std::vector<long long>& f, int d) {
  // f[i] counts faces with i elements, i.e. f_{i-1}.
  auto binom = [](long long n, long long k) {
    if (k < 0 || k > n) return 0LL;
    long long r = 1;
    for (long long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
  };
  std::vector<long long> h(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k) {
    long long s = 0;
    for (int i = 0; i <= k && i < static_cast<int>(f.size()); ++i) {
      const long long term = binom(d - i, k - i) * f[static_cast<std::size_t>(i)];
      s += ((k - i) % 2 == 0) ? term : -term;
    }
    h[static_cast<std::size_t>(k)] = s;
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

SubwordComplex reverse_complex(const SubwordComplex& c) {
  GenWord rev(c.word().rbegin(), c.word().rend());
  return SubwordComplex(c.system_ptr(), std::move(rev), c.rho().inverse());
}

bool verify_reversal(const SubwordComplex& c) {
  const auto rc = reverse_complex(c);
  const auto a = facets_inductive(c, Side::right);
  auto b = facets_inductive(rc, Side::right);
  std::vector<PositionSet> mapped;
  mapped.reserve(b.size());
  for (const auto& I : b) mapped.push_back(I.reversed());
  std::sort(mapped.begin(), mapped.end());
  return mapped == a;
}

bool is_spherical(const SubwordComplex& c) { return c.system().demazure_product(c.word()) == c.rho(); }

}  // namespace subword
