#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hb/extremal_index.hpp"

namespace hb {

enum class ThresholdMode { Closed, Open };

/// Closed accepts D_H^2 <= value_sq, Open accepts D_H^2 < value_sq.
struct Threshold {
  SquaredDistance value_sq;
  ThresholdMode mode = ThresholdMode::Closed;

  static Threshold closed(SquaredDistance v) { return {std::move(v), ThresholdMode::Closed}; }
  static Threshold open(SquaredDistance v) { return {std::move(v), ThresholdMode::Open}; }
};

bool satisfies(const SquaredDistance& value, const Threshold& t);
const char* to_string(ThresholdMode mode);

/// Either "kopt > k" (feasible == false) or a minimum-cardinality subset meeting
/// the threshold. Subset indices are ascending.
struct DeciderVerdict {
  bool feasible = false;
  std::size_t kopt = 0;
  std::vector<std::size_t> subset;

  static DeciderVerdict exceeds() { return {}; }
  static DeciderVerdict found(std::vector<std::size_t> subset);
};

/// Raised when a checked decider observes a verdict that breaks its contract.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Contract shared by all deciders: deterministic, pure, bound to one point set.
class Decider {
 public:
  virtual ~Decider() = default;
  virtual const PointSet& points() const = 0;
  virtual DeciderVerdict decide(const Threshold& t, std::size_t k) const = 0;
};

/// Exact decider by an angular sweep over all ordered point pairs.
///
/// A subset Q meets the threshold iff, for every vertex q of CH(Q), each line through q
/// whose direction lies between the incoming and outgoing hull edge keeps all of P within
/// the threshold on its outer side. The sweep walks candidate edges in direction order and
/// tracks, per point and per edge count, which start points can reach it through valid
/// turns; the cheapest closed walk gives kopt. Preprocessing sorts the n(n-1) pairs once.
class SweepDecider final : public Decider {
 public:
  explicit SweepDecider(const PointSet& P);
  ~SweepDecider() override;
  SweepDecider(SweepDecider&&) noexcept;
  SweepDecider& operator=(SweepDecider&&) noexcept;

  const PointSet& points() const override;
  DeciderVerdict decide(const Threshold& t, std::size_t k) const override;

  static constexpr std::size_t kMaxPoints = 32767;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Minimum Hausdorff value per subset size, over all subsets in convex position.
/// Exponential; limited to n <= 16.
class ExhaustiveTable {
 public:
  struct Best {
    SquaredDistance value_sq;
    std::vector<std::size_t> subset;
  };

  explicit ExhaustiveTable(const PointSet& P);

  static constexpr std::size_t kMaxPoints = 16;

  /// best(c) for c in [1, n]; absent when no size-c subset is in convex position.
  const std::optional<Best>& best(std::size_t size) const { return best_[size]; }
  std::size_t max_size() const { return best_.size() - 1; }

 private:
  std::vector<std::optional<Best>> best_;
};

class ExhaustiveDecider final : public Decider {
 public:
  explicit ExhaustiveDecider(const PointSet& P);
  const PointSet& points() const override { return points_; }
  DeciderVerdict decide(const Threshold& t, std::size_t k) const override;

 private:
  PointSet points_;
  ExhaustiveTable table_;
};

/// Wraps a decider and re-evaluates every feasible subset with hausdorff_sq.
class CheckedDecider final : public Decider {
 public:
  explicit CheckedDecider(const Decider& inner) : inner_(inner) {}
  const PointSet& points() const override { return inner_.points(); }
  DeciderVerdict decide(const Threshold& t, std::size_t k) const override;

 private:
  const Decider& inner_;
};

DeciderVerdict decide(const PointSet& P, const Threshold& t, std::size_t k);
DeciderVerdict brute_decide(const PointSet& P, const Threshold& t, std::size_t k);

}  // namespace hb
