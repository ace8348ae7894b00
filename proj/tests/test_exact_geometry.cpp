#include <gtest/gtest.h>

#include <random>

#include "hb/exact_geometry.hpp"
#include "support.hpp"

using namespace hb;
using hbtest::sq;

namespace {

Point P(std::int64_t x, std::int64_t y, std::size_t i = 0) { return Point(x, y, i); }

ConvexPolygon square4() { return convex_hull(hbtest::make({{0, 0}, {4, 0}, {4, 4}, {0, 4}})); }

}  // namespace

TEST(Orientation, SignOfTurn) {
  EXPECT_EQ(orientation(P(0, 0), P(1, 0), P(0, 1)), 1);
  EXPECT_EQ(orientation(P(0, 0), P(1, 1), P(2, 2)), 0);
  EXPECT_EQ(orientation(P(0, 0), P(0, 1), P(1, 0)), -1);
}

TEST(Orientation, HugeCoordinatesStayExact) {
  const Integer big = Integer(1) << 200;
  const Point a(big, big), b(big + 1, big), c(big, big + 1);
  EXPECT_EQ(orientation(a, b, c), 1);
  EXPECT_EQ(orientation(a, b, Point(big + 2, big)), 0);
}

TEST(SqDist, Examples) {
  EXPECT_EQ(sq_dist(P(0, 0), P(3, 4)), sq(25));
  EXPECT_EQ(sq_dist(P(2, 2), P(0, 0)), sq(8));
  EXPECT_TRUE(sq_dist(P(5, -7), P(5, -7)).is_zero());
}

TEST(LeftOf, StrictHalfplane) {
  const DirectedLine l(P(0, 0), P(4, 0));
  EXPECT_TRUE(left_of(l, P(2, 2)));
  EXPECT_FALSE(left_of(l, P(2, 0)));
  EXPECT_FALSE(left_of(DirectedLine(P(4, 0), P(0, 0)), P(2, 2)));
  EXPECT_THROW(DirectedLine(P(1, 1), P(1, 1)), std::invalid_argument);
}

TEST(SqDistPointLine, Examples) {
  EXPECT_EQ(sq_dist_point_line(P(2, 2), DirectedLine(P(0, 0), P(4, 0))), sq(4));
  EXPECT_EQ(sq_dist_point_line(P(0, 0), DirectedLine(P(4, 0), P(0, 4))), sq(8));
  EXPECT_TRUE(sq_dist_point_line(P(2, 2), DirectedLine(P(0, 0), P(4, 4))).is_zero());
  EXPECT_EQ(sq_dist_point_line(P(0, 1), DirectedLine(P(0, 0), P(3, 1))), SquaredDistance(9, 10));
}

TEST(SqDistPointSegment, Examples) {
  EXPECT_EQ(sq_dist_point_segment(P(2, 2), P(0, 0), P(4, 0)), sq(4));
  EXPECT_EQ(sq_dist_point_segment(P(6, 0), P(0, 0), P(4, 0)), sq(4));
  EXPECT_EQ(sq_dist_point_segment(P(2, 2), P(0, 0), P(0, 0)), sq(8));
}

TEST(ConvexHull, Examples) {
  const ConvexPolygon sqr = convex_hull(hbtest::s5());
  ASSERT_EQ(sqr.size(), 4u);
  for (const Point& v : sqr.vertices()) EXPECT_NE(v.index(), 4u);

  const ConvexPolygon seg = convex_hull(hbtest::make({{0, 0}, {1, 1}, {2, 2}}));
  ASSERT_EQ(seg.size(), 2u);
  EXPECT_TRUE((seg[0].index() == 0 && seg[1].index() == 2) || (seg[0].index() == 2 && seg[1].index() == 0));

  const ConvexPolygon one = convex_hull(hbtest::make({{7, -3}}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].cx(), 7);
}

TEST(ConvexHull, DropsCollinearEdgePointsAndKeepsIndices) {
  const PointSet ps = hbtest::make({{0, 0}, {2, 0}, {4, 0}, {4, 4}, {2, 4}, {0, 4}, {0, 2}});
  const ConvexPolygon h = convex_hull(ps);
  ASSERT_EQ(h.size(), 4u);
  for (const Point& v : h.vertices()) EXPECT_TRUE(same_location(v, ps[v.index()]));
}

TEST(ConvexPolygonCtor, RejectsNonConvexInput) {
  EXPECT_THROW(ConvexPolygon({P(0, 0), P(0, 4), P(4, 4), P(4, 0)}), std::invalid_argument);
  EXPECT_THROW(ConvexPolygon({P(0, 0), P(2, 0), P(4, 0), P(0, 4)}), std::invalid_argument);
  EXPECT_NO_THROW(ConvexPolygon({P(0, 0), P(4, 0), P(4, 4), P(0, 4)}));
}

TEST(SqDistPointConvexPolygon, Examples) {
  const ConvexPolygon s = square4();
  EXPECT_TRUE(sq_dist_point_convex_polygon(P(2, 2), s).is_zero());
  EXPECT_EQ(sq_dist_point_convex_polygon(P(6, 6), s), sq(8));
  EXPECT_EQ(sq_dist_point_convex_polygon(P(2, -3), s), sq(9));
  EXPECT_TRUE(sq_dist_point_convex_polygon(P(4, 2), s).is_zero());
}

TEST(PointSet, DeduplicatesKeepingFirstOccurrence) {
  const PointSet ps = hbtest::make({{1, 1}, {2, 2}, {1, 1}, {3, 3}});
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[2].cx(), 3);
  EXPECT_EQ(ps[2].index(), 2u);
  EXPECT_EQ(ps.input_position(2), 3u);
}

TEST(GeometryProperties, OrientationAntisymmetricAndTranslationInvariant) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> c(-1000, 1000);
  for (int i = 0; i < 2000; ++i) {
    const Point a = P(c(rng), c(rng)), b = P(c(rng), c(rng)), d = P(c(rng), c(rng));
    const int o = orientation(a, b, d);
    EXPECT_EQ(orientation(b, a, d), -o);
    EXPECT_EQ(orientation(a, d, b), -o);
    EXPECT_EQ(orientation(d, b, a), -o);
    const std::int64_t tx = c(rng), ty = c(rng);
    EXPECT_EQ(orientation(P(a.cx() + tx, a.cy() + ty), P(b.cx() + tx, b.cy() + ty), P(d.cx() + tx, d.cy() + ty)), o);
  }
}

TEST(GeometryProperties, SegmentDistanceBoundsLineDistance) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> c(-50, 50);
  for (int i = 0; i < 5000; ++i) {
    const Point p = P(c(rng), c(rng)), a = P(c(rng), c(rng)), b = P(c(rng), c(rng));
    if (same_location(a, b)) continue;
    const SquaredDistance seg = sq_dist_point_segment(p, a, b);
    const SquaredDistance line = sq_dist_point_line(p, DirectedLine(a, b));
    EXPECT_GE(seg, line);
    const std::int64_t dot_a = (p.cx() - a.cx()) * (b.cx() - a.cx()) + (p.cy() - a.cy()) * (b.cy() - a.cy());
    const std::int64_t dot_b = (p.cx() - b.cx()) * (a.cx() - b.cx()) + (p.cy() - b.cy()) * (a.cy() - b.cy());
    EXPECT_EQ(seg == line, dot_a >= 0 && dot_b >= 0);
  }
}

TEST(GeometryProperties, PolygonDistanceMatchesEdgeScan) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 10000; ++i) {
    std::uniform_int_distribution<std::size_t> count(1, 8);
    const PointSet ps = hbtest::random_set(rng, count(rng), 40);
    const ConvexPolygon poly = convex_hull(ps);
    std::uniform_int_distribution<std::int64_t> c(-60, 60);
    const Point p = P(c(rng), c(rng));
    SquaredDistance best = sq_dist(p, poly[0]);
    bool inside = poly.size() >= 3;
    for (std::size_t e = 0; e < poly.size(); ++e) {
      const SquaredDistance d = sq_dist_point_segment(p, poly.vertex(e), poly.vertex(e + 1));
      if (d < best) best = d;
      if (orientation(poly.vertex(e), poly.vertex(e + 1), p) < 0) inside = false;
    }
    if (inside) best = SquaredDistance();
    ASSERT_EQ(sq_dist_point_convex_polygon(p, poly), best);
  }
}

TEST(GeometryProperties, HullContainsEveryInputPoint) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 500; ++i) {
    const PointSet ps = hbtest::random_set(rng, 3 + i % 60, i % 2 ? 10 : 100000);
    const ConvexPolygon h = convex_hull(ps);
    for (const Point& v : h.vertices()) EXPECT_TRUE(same_location(v, ps[v.index()]));
    if (h.size() < 3) continue;
    for (const Point& p : ps)
      for (std::size_t e = 0; e < h.size(); ++e) ASSERT_GE(orientation(h.vertex(e), h.vertex(e + 1), p), 0);
  }
}

TEST(GeometryProperties, CompactAndBigArithmeticAgree) {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<std::int64_t> c(-1000, 1000);
  const Integer shift = Integer(1) << 90;
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t v[6] = {c(rng), c(rng), c(rng), c(rng), c(rng), c(rng)};
    const Point a = P(v[0], v[1]), b = P(v[2], v[3]), p = P(v[4], v[5]);
    const Point A(Integer(v[0]) + shift, Integer(v[1]) - shift), B(Integer(v[2]) + shift, Integer(v[3]) - shift),
        Q(Integer(v[4]) + shift, Integer(v[5]) - shift);
    EXPECT_EQ(orientation(a, b, p), orientation(A, B, Q));
    EXPECT_EQ(sq_dist_point_segment(p, a, b), sq_dist_point_segment(Q, A, B));
    if (!same_location(a, b))
      EXPECT_EQ(sq_dist_point_line(p, DirectedLine(a, b)), sq_dist_point_line(Q, DirectedLine(A, B)));
  }
}
