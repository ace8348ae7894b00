#include "hb/search_engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "hb/hausdorff_metrics.hpp"
#include "hb/reference_oracles.hpp"

namespace hb {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double log2_or_zero(std::size_t n) { return n < 2 ? 0.0 : std::log2(static_cast<double>(n)); }

std::uint64_t stage_seed(std::uint64_t seed, std::uint32_t stage) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stage};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace

const char* to_string(Stage stage) {
  switch (stage) {
    case Stage::Shortcut: return "shortcut";
    case Stage::One: return "stage1";
    case Stage::Two: return "stage2";
    case Stage::Three: return "stage3";
    case Stage::Fallback: return "fallback";
  }
  return "?";
}

double default_t(std::size_t n, std::size_t k) {
  return std::sqrt(static_cast<double>(n) * static_cast<double>(k) / std::max(1.0, log2_or_zero(n)));
}

std::uint64_t sample_size(std::size_t n, double t, std::uint32_t c) {
  return static_cast<std::uint64_t>(std::ceil(c * static_cast<double>(n) * t * log2_or_zero(n)));
}

SearchEngine::SearchEngine(PointSet P) : points_(std::move(P)), index_(points_), pairs_(points_) {
  const auto start = Clock::now();
  decider_ = std::make_unique<SweepDecider>(points_);
  prepare_seconds_ = seconds_since(start);
}

Solution SearchEngine::solve(std::size_t k, const TuningParams& params, std::uint64_t seed) const {
  return SearchRun(*this, k, params, seed).run();
}

Solution solve(const PointSet& P, std::size_t k, const TuningParams& params, std::uint64_t seed) {
  return SearchEngine(P).solve(k, params, seed);
}

SearchRun::SearchRun(const SearchEngine& engine, std::size_t k, TuningParams params, std::uint64_t seed)
    : engine_(engine), k_(k), params_(std::move(params)), seed_(seed) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  const std::size_t n = engine.points().size();
  stats_.t = params_.t_override ? *params_.t_override : default_t(n, k);
  if (!(stats_.t > 0)) throw std::invalid_argument("t must be positive");
  const double gap = std::max(1.0, params_.sample_constant * static_cast<double>(n) / stats_.t);
  stats_.iteration_cap = static_cast<std::size_t>(std::ceil(params_.stage3_cap_constant * gap)) + 16;
  stats_.stage_seconds[0] = engine.prepare_seconds();
}

const DeciderVerdict& SearchRun::verdict(const SquaredDistance& v, ThresholdMode mode) {
  Key key{v, mode};
  auto it = cache_.find(key);
  if (it != cache_.end()) {
    ++stats_.cached_verdicts;
    return it->second;
  }
  DeciderVerdict result = engine_.decider().decide(Threshold{v, mode}, k_);
  ++stats_.decider_calls;
  const auto s = static_cast<std::size_t>(stage_);
  if (s >= 1 && s <= 3) ++stats_.stage_calls[s];
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

TestOutcome SearchRun::test_optimal(const SquaredDistance& v) {
  tested_.push_back(v);
  const DeciderVerdict closed = verdict(v, ThresholdMode::Closed);
  if (!closed.feasible) return {TestKind::GoRight, {}};

  const Key open_key{v, ThresholdMode::Open};
  if (!cache_.contains(open_key) && hausdorff_sq(engine_.points(), closed.subset).value_sq < v) {
    cache_.emplace(open_key, closed);
    ++stats_.open_calls_derived;
    return {TestKind::GoLeft, closed.subset};
  }
  if (verdict(v, ThresholdMode::Open).feasible) return {TestKind::GoLeft, closed.subset};
  return {TestKind::IsOptimal, closed.subset};
}

std::optional<Solution> SearchRun::probe(const SquaredDistance& v) {
  if (!interval_.contains(v)) throw InvariantViolation("probe value outside the active interval");
  TestOutcome outcome = test_optimal(v);
  switch (outcome.kind) {
    case TestKind::IsOptimal:
      return finish(std::move(outcome.subset), v, stage_);
    case TestKind::GoLeft:
      interval_.high = v;
      break;
    case TestKind::GoRight:
      interval_.low = v;
      break;
  }
  check_invariants();
  return std::nullopt;
}

void SearchRun::begin_stage(Stage stage) {
  stage_ = stage;
  stage_started_ = Clock::now();
}

void SearchRun::end_stage() {
  const auto s = static_cast<std::size_t>(stage_);
  if (s >= 1 && s <= 3) stats_.stage_seconds[s] += seconds_since(stage_started_);
}

Solution SearchRun::finish(std::vector<std::size_t> subset, SquaredDistance value, Stage stage) {
  end_stage();
  Solution s;
  s.subset = std::move(subset);
  s.ropt_sq = params_.inject_fault ? SquaredDistance(value.numerator() * 2 + 1, value.denominator())
                                   : std::move(value);
  s.ropt_float = std::sqrt(s.ropt_sq.to_double());
  stats_.finished_in = stage;
  s.stats = stats_;
  return s;
}

void SearchRun::check_invariants() {
  if (!params_.instrumentation) return;
  ++stats_.invariant_checks;
  const Decider& d = engine_.decider();
  if (d.decide(Threshold::closed(interval_.low), k_).feasible)
    throw InvariantViolation("closed decision feasible at the interval's low end");
  if (interval_.high && !d.decide(Threshold::closed(*interval_.high), k_).feasible)
    throw InvariantViolation("closed decision exceeds k at the interval's high end");
  if (engine_.points().size() <= 12) {
    if (!brute_optimum_) brute_optimum_ = brute_solve(engine_.points(), k_).ropt_sq;
    if (!interval_.contains(*brute_optimum_)) throw InvariantViolation("optimum left the active interval");
  }
}

std::optional<Solution> SearchRun::hull_vertex_shortcut() {
  const ExtremalIndex& idx = engine_.index();
  if (idx.hull_size() > k_) return std::nullopt;
  std::vector<std::size_t> subset;
  for (const Point& v : idx.hull().vertices()) subset.push_back(v.index());
  std::sort(subset.begin(), subset.end());
  return finish(std::move(subset), SquaredDistance(), Stage::Shortcut);
}

std::optional<Solution> SearchRun::stage1() {
  begin_stage(Stage::One);
  const PairwiseSelector& pairs = engine_.pair_distances();
  std::size_t lo = 0;
  std::size_t hi = pairs.distinct_count();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++stats_.stage1_steps;
    const SquaredDistance v = pairs.distinct(mid);
    if (auto done = probe(v)) return done;
    if (interval_.low == v) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  end_stage();
  return std::nullopt;
}

std::optional<Solution> SearchRun::stage2() {
  begin_stage(Stage::Two);
  const std::size_t n = engine_.points().size();
  stats_.sample_bag_size = sample_size(n, stats_.t, params_.sample_constant);
  if (n < 2) {
    end_stage();
    return std::nullopt;
  }
  const SampleBag bag =
      draw_sample_bag(engine_.index(), engine_.points(), stats_.sample_bag_size, interval_, stage_seed(seed_, 2));
  stats_.candidate_count = bag.values.size();

  std::vector<SquaredDistance> candidates;
  candidates.reserve(bag.values.size());
  for (const CriticalValue& c : bag.values) candidates.push_back(c.value_sq);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  stats_.candidate_distinct = candidates.size();

  std::size_t lo = 0;
  std::size_t hi = candidates.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++stats_.stage2_steps;
    if (auto done = probe(candidates[mid])) return done;
    if (interval_.low == candidates[mid]) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  end_stage();
  return std::nullopt;
}

SquaredDistance SearchRun::peel_value(const std::vector<std::size_t>& subset) {
  const PointSet& P = engine_.points();
  const PointSet Q = P.subset(subset);
  std::optional<SquaredDistance> alpha;
  if (convex_hull(Q).size() >= 2) {
    alpha = hausdorff_sq_via_lines(Q, engine_.index()).value_sq;
    if (params_.instrumentation && *alpha != hausdorff_sq(Q, P).value_sq) ++stats_.alpha_mismatches;
    const bool inside = interval_.low < *alpha && (!interval_.high || *alpha <= *interval_.high);
    if (!inside) alpha.reset();
  }
  if (!alpha) {
    ++stats_.alpha_fallbacks;
    alpha = hausdorff_sq(Q, P).value_sq;
    if (*alpha <= interval_.low) throw InvariantViolation("a feasible subset beats the interval's low end");
  }
  return *alpha;
}

Solution SearchRun::stage3() {
  begin_stage(Stage::Three);
  if (!interval_.high) throw InvariantViolation("peeling needs a finite upper end");
  for (;;) {
    if (stats_.peel_iterations >= stats_.iteration_cap) {
      stats_.fallback = true;
      end_stage();
      stage_ = Stage::Fallback;
      const OracleReport report = baseline_solve(engine_.decider(), engine_.index(), k_);
      stats_.decider_calls += report.decide_calls;
      return finish(report.subset, report.ropt_sq, Stage::Fallback);
    }
    ++stats_.peel_iterations;
    const SquaredDistance high = *interval_.high;
    const DeciderVerdict closed = verdict(high, ThresholdMode::Closed);
    if (!closed.feasible) throw InvariantViolation("closed decision exceeds k at the interval's high end");
    SquaredDistance alpha = peel_value(closed.subset);
    if (alpha == high) {
      ++stats_.alpha_equals_high;
      const DeciderVerdict open = verdict(high, ThresholdMode::Open);
      if (!open.feasible) throw InvariantViolation("the interval's high end is itself optimal");
      alpha = peel_value(open.subset);
    }
    if (auto done = probe(alpha)) return *done;
  }
}

Solution SearchRun::run() {
  if (auto done = hull_vertex_shortcut()) return *done;
  interval_ = SearchInterval{SquaredDistance(), std::nullopt};
  check_invariants();
  std::optional<Solution> result = stage1();
  if (!result) result = stage2();
  if (!result) result = stage3();
  return *result;
}

}  // namespace hb
