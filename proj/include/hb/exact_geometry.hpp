#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hb/number.hpp"

namespace hb {

/// Integer-coordinate planar point. The index is the point's ordinal in the
/// PointSet it was drawn from.
class Point {
 public:
  Point(Integer x, Integer y, std::size_t index = 0);
  Point(std::int64_t x, std::int64_t y, std::size_t index = 0);

  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }
  std::size_t index() const { return index_; }

  // True when both coordinates lie in [-2^29, 2^29]; cx/cy are valid only then.
  bool compact() const { return compact_; }
  std::int64_t cx() const { return cx_; }
  std::int64_t cy() const { return cy_; }

 private:
  Integer x_;
  Integer y_;
  std::size_t index_;
  std::int64_t cx_ = 0;
  std::int64_t cy_ = 0;
  bool compact_ = false;
};

bool same_location(const Point& a, const Point& b);
bool lex_less(const Point& a, const Point& b);

/// Deduplicated, indexed point sequence.
class PointSet {
 public:
  using Coordinates = std::vector<std::pair<Integer, Integer>>;

  /// Removes coordinate duplicates, keeping first occurrences in input order.
  /// Point i of the result has index i; input_position(i) is its original position.
  explicit PointSet(const Coordinates& coords);
  static PointSet from_i64(const std::vector<std::pair<std::int64_t, std::int64_t>>& coords);

  /// A set of points that carry indices of some parent set. Indices must be unique.
  static PointSet from_points(std::vector<Point> points);

  /// Points of this set at the given positions, keeping their indices.
  PointSet subset(std::span<const std::size_t> positions) const;

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t input_position(std::size_t i) const { return input_positions_[i]; }
  bool compact() const { return compact_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  PointSet() = default;

  std::vector<Point> points_;
  std::vector<std::size_t> input_positions_;
  bool compact_ = true;
};

struct DirectedLine {
  DirectedLine(Point from, Point to);
  Point a;
  Point b;
};

/// Counterclockwise strictly convex polygon; may degenerate to a point or a segment.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> ccw_vertices);

  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

 private:
  struct Trusted {};
  ConvexPolygon(std::vector<Point> ccw_vertices, Trusted);
  friend ConvexPolygon convex_hull(std::span<const Point> points);

  std::vector<Point> vertices_;
};

int orientation(const Point& a, const Point& b, const Point& c);
SquaredDistance sq_dist(const Point& p, const Point& q);
bool left_of(const DirectedLine& l, const Point& p);
SquaredDistance sq_dist_point_line(const Point& p, const DirectedLine& l);
SquaredDistance sq_dist_point_segment(const Point& p, const Point& a, const Point& b);
ConvexPolygon convex_hull(const PointSet& ps);
ConvexPolygon convex_hull(std::span<const Point> points);
SquaredDistance sq_dist_point_convex_polygon(const Point& p, const ConvexPolygon& poly);

}  // namespace hb
