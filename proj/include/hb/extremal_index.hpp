#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "hb/exact_geometry.hpp"

namespace hb {

/// Query direction, compared projectively and never normalized.
struct Direction {
  Direction(Integer x, Integer y);
  Integer dx;
  Integer dy;
};

struct PairDistance {
  std::size_t i;
  std::size_t j;
};

struct LineHeight {
  std::size_t a;
  std::size_t b;
  std::size_t p;
};

struct CriticalValue {
  SquaredDistance value_sq;
  std::variant<PairDistance, LineHeight> kind;
};

/// Normal fan of the hull of a point set: answers "which point maximizes <p, u>"
/// by binary search over the counterclockwise hull edge directions.
class ExtremalIndex {
 public:
  explicit ExtremalIndex(const PointSet& ps);

  const ConvexPolygon& hull() const { return hull_; }
  std::size_t hull_size() const { return hull_.size(); }

  /// Hull position of the extremal vertex; ties resolve to the lexicographically smallest.
  /// When probes is given, the number of fan boundaries inspected is added to it.
  std::size_t extremal_position(const Direction& u, std::size_t* probes = nullptr) const;
  const Point& extremal(const Direction& u) const { return hull_[extremal_position(u)]; }

  /// Fast variant for compact hulls and |dx|, |dy| < 2^62.
  bool compact() const { return compact_; }
  std::size_t extremal_position(std::int64_t dx, std::int64_t dy) const;

  /// Height of the farthest point strictly left of the line a->b, unreduced.
  /// Requires compact points and a compact index. Sets *witness to the extremal hull position.
  detail::WideRatio line_height_wide(const Point& a, const Point& b, std::size_t* witness = nullptr) const;

 private:
  std::size_t resolve_tie(std::size_t i) const;

  ConvexPolygon hull_;
  std::vector<Integer> ex_;
  std::vector<Integer> ey_;
  std::vector<std::int64_t> cex_;
  std::vector<std::int64_t> cey_;
  bool compact_ = false;
};

ExtremalIndex build(const PointSet& ps);
const Point& extremal(const ExtremalIndex& idx, const Direction& u);
CriticalValue line_height(const ExtremalIndex& idx, const Point& a, const Point& b);

}  // namespace hb
