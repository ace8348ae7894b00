#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "hb/canonical_values.hpp"
#include "hb/decider.hpp"

namespace hb {

/// (low, high) with kopt(low) > k, kopt(high) <= k and the optimum strictly inside.
using SearchInterval = OpenInterval;

struct TuningParams {
  std::optional<double> t_override;
  std::uint32_t sample_constant = 4;
  std::uint32_t stage3_cap_constant = 8;
  bool instrumentation = false;
  // Test fixture: corrupts the reported optimum so that verification must fail.
  bool inject_fault = false;
};

enum class Stage { Shortcut = 0, One = 1, Two = 2, Three = 3, Fallback = 4 };

const char* to_string(Stage stage);

struct RunStats {
  std::size_t decider_calls = 0;
  std::array<std::size_t, 4> stage_calls{};  // indexed by Stage 1..3, slot 0 unused
  std::size_t stage1_steps = 0;
  std::size_t stage2_steps = 0;
  std::uint64_t sample_bag_size = 0;  // m
  std::size_t candidate_count = 0;    // |U|, with multiplicity
  std::size_t candidate_distinct = 0;
  std::size_t peel_iterations = 0;  // X
  std::size_t alpha_fallbacks = 0;
  std::size_t alpha_equals_high = 0;
  std::size_t open_calls_derived = 0;
  std::size_t cached_verdicts = 0;
  std::size_t alpha_mismatches = 0;      // instrumentation only
  std::size_t invariant_checks = 0;      // instrumentation only
  bool fallback = false;
  Stage finished_in = Stage::Shortcut;
  double t = 0;
  std::size_t iteration_cap = 0;
  std::array<double, 4> stage_seconds{};  // slot 0 holds preparation time
};

struct Solution {
  std::vector<std::size_t> subset;
  SquaredDistance ropt_sq;
  double ropt_float = 0;
  RunStats stats;
};

enum class TestKind { IsOptimal, GoLeft, GoRight };

struct TestOutcome {
  TestKind kind;
  std::vector<std::size_t> subset;  // the closed-threshold subset when feasible
};

double default_t(std::size_t n, std::size_t k);
std::uint64_t sample_size(std::size_t n, double t, std::uint32_t c);

/// Everything that depends only on P: the decider, the extremal index and the sorted
/// pair distances. Build once and share between runs; all members are immutable.
class SearchEngine {
 public:
  explicit SearchEngine(PointSet P);

  const PointSet& points() const { return points_; }
  const ExtremalIndex& index() const { return index_; }
  const Decider& decider() const { return *decider_; }
  const PairwiseSelector& pair_distances() const { return pairs_; }
  double prepare_seconds() const { return prepare_seconds_; }

  Solution solve(std::size_t k, const TuningParams& params, std::uint64_t seed) const;

 private:
  PointSet points_;
  ExtremalIndex index_;
  std::unique_ptr<Decider> decider_;
  PairwiseSelector pairs_;
  double prepare_seconds_ = 0;
};

/// One solve in progress. The stage methods may be driven individually; each keeps the
/// interval invariants and returns a solution once optimality has been certified.
class SearchRun {
 public:
  SearchRun(const SearchEngine& engine, std::size_t k, TuningParams params, std::uint64_t seed);

  const SearchInterval& interval() const { return interval_; }
  void set_interval(SearchInterval interval) { interval_ = std::move(interval); }
  const RunStats& stats() const { return stats_; }
  /// Every value handed to test_optimal, in order.
  const std::vector<SquaredDistance>& tested() const { return tested_; }

  /// Both decisions at v (the open one is derived when the closed subset is strictly inside).
  TestOutcome test_optimal(const SquaredDistance& v);

  std::optional<Solution> hull_vertex_shortcut();
  std::optional<Solution> stage1();
  std::optional<Solution> stage2();
  Solution stage3();
  Solution run();

 private:
  struct Key {
    SquaredDistance value;
    ThresholdMode mode;
    bool operator<(const Key& o) const {
      if (value != o.value) return value < o.value;
      return mode < o.mode;
    }
  };

  const DeciderVerdict& verdict(const SquaredDistance& v, ThresholdMode mode);
  std::optional<Solution> probe(const SquaredDistance& v);
  Solution finish(std::vector<std::size_t> subset, SquaredDistance value, Stage stage);
  SquaredDistance peel_value(const std::vector<std::size_t>& subset);
  void check_invariants();
  void begin_stage(Stage stage);
  void end_stage();

  const SearchEngine& engine_;
  std::size_t k_;
  TuningParams params_;
  std::uint64_t seed_;
  Stage stage_ = Stage::Shortcut;
  std::chrono::steady_clock::time_point stage_started_;
  SearchInterval interval_;
  RunStats stats_;
  std::map<Key, DeciderVerdict> cache_;
  std::vector<SquaredDistance> tested_;
  std::optional<SquaredDistance> brute_optimum_;
};

Solution solve(const PointSet& P, std::size_t k, const TuningParams& params, std::uint64_t seed);

}  // namespace hb
