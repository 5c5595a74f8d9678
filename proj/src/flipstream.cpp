#include "subword/flipstream.hpp"

#include <algorithm>
#include <stdexcept>

#include "subword/errors.hpp"

namespace subword {

namespace {

void require_stream_kind(TreeKind kind) {
  if (kind != TreeKind::PosSink && kind != TreeKind::NegSource)
    throw std::invalid_argument("streaming needs the pos-sink or neg-source tree");
}

PositionSet stream_root(const SubwordComplex& c, TreeKind kind) {
  return greedy_facet(c, kind == TreeKind::PosSink ? Sign::negative : Sign::positive);
}

}  // namespace

std::vector<ChildFlip> children(const SubwordComplex& c, const Facet& F, TreeKind kind) {
  require_stream_kind(kind);
  const PositionSet root = stream_root(c, kind);
  const auto& sys = c.system();
  std::vector<ChildFlip> out;
  for (int i = F.positions.min(); i != 0; i = F.positions.next_after(i)) {
    const RootId r = F.root(i);
    const bool decreasing = !sys.is_positive(r);
    if (decreasing != (kind == TreeKind::PosSink)) continue;
    const int j = c.flip_partner(F, i);
    if (!j) continue;
    auto res = c.flip(F, i);
    const PositionSet rest = res.facet.positions - root;
    const int back = kind == TreeKind::PosSink ? rest.min() : rest.max();
    if (back == j) out.push_back({std::move(res.facet), i, j});
  }
  return out;
}

FacetStream::FacetStream(const SubwordComplex& c, TreeKind kind) : c_(c), kind_(kind) {
  require_stream_kind(kind);
  root_ = stream_root(c, kind);
  init(c.make_facet(root_));
}

FacetStream::FacetStream(const SubwordComplex& c, TreeKind kind, const Facet& start) : c_(c), kind_(kind) {
  require_stream_kind(kind);
  root_ = stream_root(c, kind);
  init(start);
}

void FacetStream::init(const Facet& start) {
  cur_ = start;
  partner_.assign(static_cast<std::size_t>(c_.rho_length()), 0);
  for (int k = 1; k <= c_.size(); ++k) {
    if (cur_.positions.contains(k)) continue;
    const int slot = c_.inversion_slot(cur_.root(k));
    if (slot < 0) throw IntegrityError("complement root outside inv(rho)");
    partner_[static_cast<std::size_t>(slot)] = static_cast<std::int16_t>(k);
  }
  counters_.max_live_ints = live_ints();
}

std::size_t FacetStream::live_ints() const {
  // Position sets count as ceil(m / 32) 32-bit integers each.
  const auto set_ints = (static_cast<std::size_t>(c_.size()) + 31) / 32;
  return cur_.roots.size() + partner_.size() + 2 * set_ints + 2;
}

std::size_t FacetStream::live_bound() const {
  const auto m = static_cast<std::size_t>(c_.size());
  const auto n = static_cast<std::size_t>(c_.system().rank());
  return static_cast<std::size_t>(kLiveStateConstant) * m * n + m + 2;
}

int FacetStream::find_child(int from) const {
  const auto& sys = c_.system();
  const auto& I = cur_.positions;
  const PositionSet rest = I - root_;
  std::uint64_t tests = 0;
  int found = 0;
  if (kind_ == TreeKind::PosSink) {
    // Child by a decreasing flip i -> j with F below j inside N.
    const int lim = rest.min();
    for (int i = I.next_after(from - 1); i != 0; i = I.next_after(i)) {
      ++tests;
      const RootId r = cur_.root(i);
      if (sys.is_positive(r)) continue;
      const int slot = c_.inversion_slot(sys.negate(r));
      if (slot < 0) continue;
      const int j = partner_[static_cast<std::size_t>(slot)];
      if (!root_.contains(j) && (lim == 0 || lim > j)) {
        found = i;
        break;
      }
    }
  } else {
    // Child by an increasing flip i -> j with F above j inside P.
    const int lim = rest.max();
    for (int i = I.next_after(from - 1); i != 0; i = I.next_after(i)) {
      ++tests;
      const RootId r = cur_.root(i);
      if (!sys.is_positive(r)) continue;
      const int slot = c_.inversion_slot(r);
      if (slot < 0) continue;
      const int j = partner_[static_cast<std::size_t>(slot)];
      if (!root_.contains(j) && lim < j) {
        found = i;
        break;
      }
    }
  }
  counters_.candidate_tests += tests;
  counters_.max_candidate_tests_per_facet = std::max(counters_.max_candidate_tests_per_facet, tests);
  return found;
}

int FacetStream::flip(int i) {
  const auto& sys = c_.system();
  const RootId beta = cur_.root(i);
  const RootId pos = sys.abs(beta);
  const int j = partner_[static_cast<std::size_t>(c_.inversion_slot(pos))];
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  for (int k = lo + 1; k <= hi; ++k) {
    auto& r = cur_.roots[static_cast<std::size_t>(k - 1)];
    r = sys.reflect(beta, r);
    if (k != j && !cur_.positions.contains(k))
      partner_[static_cast<std::size_t>(c_.inversion_slot(r))] = static_cast<std::int16_t>(k);
  }
  partner_[static_cast<std::size_t>(c_.inversion_slot(pos))] = static_cast<std::int16_t>(i);
  cur_.positions.erase(i);
  cur_.positions.insert(j);
  ++counters_.flips;
#ifdef SUBWORD_CHECK_FLIPS
  if (cur_.roots != c_.root_function_array(cur_.positions)) throw IntegrityError("stream flip disagrees with recomputation");
#endif
  return j;
}

bool FacetStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    ++counters_.yielded;
    return true;
  }
  while (true) {
    const int i = find_child(resume_);
    if (i) {
      flip(i);
      ++depth_;
      resume_ = 1;
      counters_.max_depth = std::max(counters_.max_depth, depth_);
      counters_.max_live_ints = std::max(counters_.max_live_ints, live_ints());
      ++counters_.yielded;
      return true;
    }
    if (depth_ == 0) {
      done_ = true;
      return false;
    }
    const PositionSet rest = cur_.positions - root_;
    const int up = kind_ == TreeKind::PosSink ? rest.min() : rest.max();
    resume_ = flip(up) + 1;
    --depth_;
  }
}

StreamCounters stream_facets(const SubwordComplex& c, TreeKind kind, const std::function<void(const Facet&)>& visit) {
  FacetStream s(c, kind);
  while (s.next()) visit(s.current());
  return s.counters();
}

std::vector<PositionSet> stream_facet_list(const SubwordComplex& c, TreeKind kind, Exec exec) {
  std::vector<PositionSet> out;
  if (exec == Exec::serial) {
    stream_facets(c, kind, [&](const Facet& F) { out.push_back(F.positions); });
    return out;
  }
  const Facet root = c.make_facet(stream_root(c, kind));
  const auto kids = children(c, root, kind);
  std::vector<std::vector<PositionSet>> parts(kids.size());
  const auto count = static_cast<std::ptrdiff_t>(kids.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    FacetStream s(c, kind, kids[static_cast<std::size_t>(k)].facet);
    while (s.next()) parts[static_cast<std::size_t>(k)].push_back(s.current().positions);
  }
  out.push_back(root.positions);
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const auto k = v.size() / 2;
  return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

template <class F>
double time_ns(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::nano>(t1 - t0).count();
}

}  // namespace

BenchmarkReport benchmark(const SubwordComplex& c, int repetitions, TreeKind kind) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be positive");
  BenchmarkReport rep;
  rep.m = c.size();
  rep.rank = c.system().rank();
  rep.repetitions = repetitions;
  std::vector<double> greedy, inductive, parallel;
  for (int r = 0; r <= repetitions; ++r) {  // r == 0 is the warm-up
    std::uint64_t ng = 0, ni = 0;
    StreamCounters counters;
    const double tg = time_ns([&] { counters = stream_facets(c, kind, [&](const Facet&) { ++ng; }); });
    const double ti = time_ns([&] { for_each_facet_inductive(c, Side::right, [&](const PositionSet&) { ++ni; }); });
    std::size_t np = 0;
    const double tp = time_ns([&] { np = stream_facet_list(c, kind, Exec::parallel).size(); });
    if (np != ng) throw IntegrityError("parallel stream count differs from the serial one");
    rep.facets_greedy = ng;
    rep.facets_inductive = ni;
    rep.peak_live_ints = std::max(rep.peak_live_ints, counters.max_live_ints);
    if (r == 0) continue;
    greedy.push_back(tg / static_cast<double>(ng));
    inductive.push_back(ti / static_cast<double>(ni));
    parallel.push_back(tp / static_cast<double>(np));
  }
  rep.greedy_ns_per_facet = median(greedy);
  rep.inductive_ns_per_facet = median(inductive);
  rep.parallel_ns_per_facet = median(parallel);
  rep.live_bound = FacetStream(c, kind).live_bound();
  return rep;
}

}  // namespace subword
