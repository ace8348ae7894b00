#include "hb/exact_geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hb {

namespace {

bool fits_compact(const Integer& v) {
  return v >= -detail::kCompactBound && v <= detail::kCompactBound;
}

bool all_compact(const Point& a, const Point& b) { return a.compact() && b.compact(); }
bool all_compact(const Point& a, const Point& b, const Point& c) {
  return a.compact() && b.compact() && c.compact();
}

int sign_of(const Integer& v) { return v.sign(); }
int sign_of(i128 v) { return (v > 0) - (v < 0); }

Integer cross_big(const Point& a, const Point& b, const Point& c) {
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

i128 cross_small(const Point& a, const Point& b, const Point& c) {
  return static_cast<i128>(b.cx() - a.cx()) * (c.cy() - a.cy()) -
         static_cast<i128>(b.cy() - a.cy()) * (c.cx() - a.cx());
}

Integer dot_big(const Point& a, const Point& b, const Point& c) {
  return (b.x() - a.x()) * (c.x() - a.x()) + (b.y() - a.y()) * (c.y() - a.y());
}

i128 dot_small(const Point& a, const Point& b, const Point& c) {
  return static_cast<i128>(b.cx() - a.cx()) * (c.cx() - a.cx()) +
         static_cast<i128>(b.cy() - a.cy()) * (c.cy() - a.cy());
}

struct SmallRatio {
  u128 num;
  u128 den;
};

struct BigRatio {
  Integer num;
  Integer den;
};

int compare(const SmallRatio& a, const SmallRatio& b) {
  return detail::compare_ratio(a.num, a.den, b.num, b.den);
}

int compare(const BigRatio& a, const BigRatio& b) {
  const Integer lhs = a.num * b.den;
  const Integer rhs = b.num * a.den;
  return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

SmallRatio segment_small(const Point& p, const Point& a, const Point& b) {
  const i128 len = dot_small(a, b, b);
  const i128 t = dot_small(a, b, p);
  if (len == 0 || t <= 0) return {static_cast<u128>(dot_small(a, p, p)), 1};
  if (t >= len) return {static_cast<u128>(dot_small(b, p, p)), 1};
  const u128 c = detail::abs_wide(cross_small(a, b, p));
  return {c * c, static_cast<u128>(len)};
}

BigRatio segment_big(const Point& p, const Point& a, const Point& b) {
  Integer len = dot_big(a, b, b);
  const Integer t = dot_big(a, b, p);
  if (len.is_zero() || t.sign() <= 0) return {dot_big(a, p, p), 1};
  if (t >= len) return {dot_big(b, p, p), 1};
  const Integer c = cross_big(a, b, p);
  return {c * c, std::move(len)};
}

template <class Ratio, class SegmentFn, class CrossSign>
Ratio polygon_distance(const Point& p, const ConvexPolygon& poly, SegmentFn segment, CrossSign cross_sign) {
  const std::size_t m = poly.size();
  if (m == 1) return segment(p, poly[0], poly[0]);
  if (m == 2) return segment(p, poly[0], poly[1]);
  bool inside = true;
  for (std::size_t i = 0; i < m && inside; ++i) inside = cross_sign(poly[i], poly.vertex(i + 1), p) >= 0;
  if (inside) return Ratio{0, 1};
  Ratio best = segment(p, poly[0], poly[1]);
  for (std::size_t i = 1; i < m; ++i) {
    Ratio r = segment(p, poly[i], poly.vertex(i + 1));
    if (compare(r, best) < 0) best = std::move(r);
  }
  return best;
}

}  // namespace

Point::Point(Integer x, Integer y, std::size_t index) : x_(std::move(x)), y_(std::move(y)), index_(index) {
  compact_ = fits_compact(x_) && fits_compact(y_);
  if (compact_) {
    cx_ = static_cast<std::int64_t>(x_);
    cy_ = static_cast<std::int64_t>(y_);
  }
}

Point::Point(std::int64_t x, std::int64_t y, std::size_t index) : Point(Integer(x), Integer(y), index) {}

bool same_location(const Point& a, const Point& b) {
  if (all_compact(a, b)) return a.cx() == b.cx() && a.cy() == b.cy();
  return a.x() == b.x() && a.y() == b.y();
}

bool lex_less(const Point& a, const Point& b) {
  if (all_compact(a, b)) return a.cx() < b.cx() || (a.cx() == b.cx() && a.cy() < b.cy());
  return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
}

PointSet::PointSet(const Coordinates& coords) {
  std::map<std::pair<Integer, Integer>, bool> seen;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!seen.emplace(coords[i], true).second) continue;
    points_.emplace_back(coords[i].first, coords[i].second, points_.size());
    input_positions_.push_back(i);
    compact_ = compact_ && points_.back().compact();
  }
  if (points_.empty()) throw std::invalid_argument("a point set needs at least one point");
}

PointSet PointSet::from_i64(const std::vector<std::pair<std::int64_t, std::int64_t>>& coords) {
  Coordinates big;
  big.reserve(coords.size());
  for (const auto& [x, y] : coords) big.emplace_back(Integer(x), Integer(y));
  return PointSet(big);
}

PointSet PointSet::from_points(std::vector<Point> points) {
  if (points.empty()) throw std::invalid_argument("a point set needs at least one point");
  std::vector<std::size_t> ids;
  for (const auto& p : points) ids.push_back(p.index());
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("point indices must be unique");
  PointSet out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.compact_ = out.compact_ && points[i].compact();
    out.input_positions_.push_back(i);
  }
  out.points_ = std::move(points);
  return out;
}

PointSet PointSet::subset(std::span<const std::size_t> positions) const {
  std::vector<Point> chosen;
  chosen.reserve(positions.size());
  for (std::size_t pos : positions) {
    if (pos >= points_.size()) throw std::out_of_range("subset position out of range");
    chosen.push_back(points_[pos]);
  }
  return from_points(std::move(chosen));
}

DirectedLine::DirectedLine(Point from, Point to) : a(std::move(from)), b(std::move(to)) {
  if (same_location(a, b)) throw std::invalid_argument("a directed line needs two distinct points");
}

ConvexPolygon::ConvexPolygon(std::vector<Point> ccw_vertices, Trusted) : vertices_(std::move(ccw_vertices)) {}

ConvexPolygon::ConvexPolygon(std::vector<Point> ccw_vertices) : vertices_(std::move(ccw_vertices)) {
  const std::size_t m = vertices_.size();
  if (m == 0) throw std::invalid_argument("a polygon needs at least one vertex");
  if (m == 2 && same_location(vertices_[0], vertices_[1]))
    throw std::invalid_argument("segment endpoints must differ");
  if (m < 3) return;
  std::size_t descents = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (orientation(vertices_[i], vertex(i + 1), vertex(i + 2)) <= 0)
      throw std::invalid_argument("polygon is not strictly convex and counterclockwise");
    if (lex_less(vertex(i + 1), vertices_[i]) && !lex_less(vertex(i + 2), vertex(i + 1))) ++descents;
  }
  // A simple convex polygon switches from moving lexicographically down to up exactly once.
  if (descents != 1) throw std::invalid_argument("polygon winds more than once");
}

int orientation(const Point& a, const Point& b, const Point& c) {
  if (all_compact(a, b, c)) return sign_of(cross_small(a, b, c));
  return sign_of(cross_big(a, b, c));
}

SquaredDistance sq_dist(const Point& p, const Point& q) {
  if (all_compact(p, q)) return SquaredDistance::from_wide(static_cast<u128>(dot_small(p, q, q)), 1);
  return SquaredDistance(dot_big(p, q, q));
}

bool left_of(const DirectedLine& l, const Point& p) { return orientation(l.a, l.b, p) > 0; }

SquaredDistance sq_dist_point_line(const Point& p, const DirectedLine& l) {
  if (all_compact(p, l.a, l.b)) {
    const u128 c = detail::abs_wide(cross_small(l.a, l.b, p));
    return SquaredDistance::from_wide(c * c, static_cast<u128>(dot_small(l.a, l.b, l.b)));
  }
  const Integer c = cross_big(l.a, l.b, p);
  return SquaredDistance(c * c, dot_big(l.a, l.b, l.b));
}

SquaredDistance sq_dist_point_segment(const Point& p, const Point& a, const Point& b) {
  if (all_compact(p, a, b)) {
    const SmallRatio r = segment_small(p, a, b);
    return SquaredDistance::from_wide(r.num, r.den);
  }
  BigRatio r = segment_big(p, a, b);
  return SquaredDistance(std::move(r.num), std::move(r.den));
}

ConvexPolygon convex_hull(const PointSet& ps) { return convex_hull(std::span<const Point>(ps.points())); }

ConvexPolygon convex_hull(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty set");
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), lex_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end(), same_location), sorted.end());
  if (sorted.size() <= 2) return ConvexPolygon(std::move(sorted), ConvexPolygon::Trusted{});

  std::vector<Point> hull;
  hull.reserve(2 * sorted.size());
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t floor = hull.size();
    for (const Point& p : sorted) {
      while (hull.size() >= floor + 2 && orientation(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(sorted.begin(), sorted.end());
  }
  if (hull.size() == 2 && same_location(hull[0], hull[1])) hull.pop_back();
  return ConvexPolygon(std::move(hull), ConvexPolygon::Trusted{});
}

SquaredDistance sq_dist_point_convex_polygon(const Point& p, const ConvexPolygon& poly) {
  bool compact = p.compact();
  for (const Point& v : poly.vertices()) compact = compact && v.compact();
  if (compact) {
    const auto cs = [](const Point& a, const Point& b, const Point& c) { return sign_of(cross_small(a, b, c)); };
    const SmallRatio r = polygon_distance<SmallRatio>(p, poly, segment_small, cs);
    return SquaredDistance::from_wide(r.num, r.den);
  }
  const auto cb = [](const Point& a, const Point& b, const Point& c) { return sign_of(cross_big(a, b, c)); };
  BigRatio r = polygon_distance<BigRatio>(p, poly, segment_big, cb);
  return SquaredDistance(std::move(r.num), std::move(r.den));
}

}  // namespace hb
