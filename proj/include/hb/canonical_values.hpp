#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hb/extremal_index.hpp"

namespace hb {

using Rng = std::mt19937_64;

/// Open interval (low, high) of squared distances; an absent high stands for +infinity.
struct OpenInterval {
  SquaredDistance low;
  std::optional<SquaredDistance> high;

  bool contains(const SquaredDistance& v) const { return low < v && (!high || v < *high); }
};

/// The retained part U of a sample of line values, in draw order.
struct SampleBag {
  std::vector<CriticalValue> values;
  std::uint64_t draws = 0;
  std::uint64_t source_size = 0;
  std::uint64_t rng_seed = 0;
};

/// All C(n,2) squared pair distances, materialized and sorted once.
class PairwiseSelector {
 public:
  explicit PairwiseSelector(const PointSet& P);

  std::uint64_t size() const { return total_; }
  /// rank-th smallest, 1-based, counting multiplicity. Throws std::out_of_range.
  SquaredDistance select(std::uint64_t rank) const;

  /// Distinct values in increasing order.
  std::size_t distinct_count() const;
  SquaredDistance distinct(std::size_t i) const;

 private:
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> compact_;
  std::vector<std::size_t> compact_distinct_;
  std::vector<SquaredDistance> big_;
  std::vector<std::size_t> big_distinct_;
};

SquaredDistance pairwise_rank_select(const PointSet& P, std::uint64_t rank);

/// One uniformly drawn ordered pair (a, b), a != b, evaluated as line_height.
CriticalValue sample_line_value(const ExtremalIndex& idx, const PointSet& P, Rng& rng);

/// m draws as in sample_line_value from a generator seeded with `seed`, keeping those
/// strictly inside the interval. Consumes the generator exactly like m calls to
/// sample_line_value would.
SampleBag draw_sample_bag(const ExtremalIndex& idx, const PointSet& P, std::uint64_t m,
                          const OpenInterval& interval, std::uint64_t seed);

/// The strictly positive pair distances and line heights of P, sorted and deduplicated.
/// Each entry keeps the first defining configuration in (pair before line, then index)
/// order. Stored compactly so that a few thousand points stay practical; P and idx
/// must outlive the table.
class CanonicalTable {
 public:
  CanonicalTable(const PointSet& P, const ExtremalIndex& idx);

  std::size_t size() const { return entries_.size(); }
  SquaredDistance value(std::size_t i) const;
  CriticalValue at(std::size_t i) const;
  double approx(std::size_t i) const { return entries_[i].approx; }

  /// Position of the first entry >= v.
  std::size_t lower_bound(const SquaredDistance& v) const;
  bool contains(const SquaredDistance& v) const;

 private:
  struct Entry {
    double approx;
    std::uint32_t a;
    std::uint32_t b;
    std::uint32_t p;
  };
  static constexpr std::uint32_t kPair = 0xffffffffu;

  int compare_exact(const Entry& x, const Entry& y) const;
  SquaredDistance exact(const Entry& e) const;
  detail::WideRatio wide(const Entry& e) const;

  const PointSet* points_;
  const ConvexPolygon* hull_;
  bool fast_;
  std::vector<Entry> entries_;
};

std::vector<CriticalValue> enumerate_canonical_set(const PointSet& P);

}  // namespace hb
