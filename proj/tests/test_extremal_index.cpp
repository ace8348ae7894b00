#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hb/extremal_index.hpp"
#include "support.hpp"

using namespace hb;
using hbtest::sq;

namespace {

Integer dot(const Point& p, const Direction& u) { return p.x() * u.dx + p.y() * u.dy; }

SquaredDistance brute_height(const PointSet& ps, const Point& a, const Point& b) {
  SquaredDistance best;
  for (const Point& p : ps) {
    if (orientation(a, b, p) <= 0) continue;
    SquaredDistance d = sq_dist_point_line(p, DirectedLine(a, b));
    if (d > best) best = d;
  }
  return best;
}

}  // namespace

TEST(ExtremalIndexBuild, FanSizes) {
  EXPECT_EQ(ExtremalIndex(hbtest::s5()).hull_size(), 4u);
  EXPECT_EQ(ExtremalIndex(hbtest::make({{0, 0}, {1, 1}, {2, 2}})).hull_size(), 2u);
  const ExtremalIndex single(hbtest::make({{3, 3}}));
  EXPECT_EQ(single.hull_size(), 1u);
  EXPECT_EQ(single.extremal(Direction(1, -5)).cx(), 3);
}

TEST(Extremal, SquareExamplesWithLexicographicTieBreak) {
  const ExtremalIndex idx(hbtest::s5());
  const Point& a = idx.extremal(Direction(1, 2));
  EXPECT_EQ(std::make_pair(a.cx(), a.cy()), std::make_pair(std::int64_t{4}, std::int64_t{4}));
  const Point& b = idx.extremal(Direction(0, 1));
  EXPECT_EQ(std::make_pair(b.cx(), b.cy()), std::make_pair(std::int64_t{0}, std::int64_t{4}));
  const Point& c = idx.extremal(Direction(-1, 0));
  EXPECT_EQ(std::make_pair(c.cx(), c.cy()), std::make_pair(std::int64_t{0}, std::int64_t{0}));
  EXPECT_EQ(extremal(idx, Direction(1, 0)).cx(), 4);
  EXPECT_EQ(extremal(idx, Direction(1, 0)).cy(), 0);
}

TEST(Extremal, SegmentHullHalfCircles) {
  const ExtremalIndex idx(hbtest::make({{0, 0}, {1, 1}, {2, 2}}));
  EXPECT_EQ(idx.extremal(Direction(1, 0)).cx(), 2);
  EXPECT_EQ(idx.extremal(Direction(-1, 3)).cx(), 2);
  EXPECT_EQ(idx.extremal(Direction(-1, 0)).cx(), 0);
  EXPECT_EQ(idx.extremal(Direction(1, -1)).cx(), 0);  // tie, lexicographically smallest
}

TEST(Extremal, ZeroDirectionRejected) { EXPECT_THROW(Direction(0, 0), std::invalid_argument); }

TEST(LineHeight, Examples) {
  const PointSet s5 = hbtest::s5();
  const ExtremalIndex idx(s5);
  const CriticalValue v = line_height(idx, s5[0], s5[1]);
  EXPECT_EQ(v.value_sq, sq(16));
  const auto& kind = std::get<LineHeight>(v.kind);
  EXPECT_TRUE(kind.p == 2 || kind.p == 3);

  const PointSet t = hbtest::tri();
  const ExtremalIndex ti(t);
  const CriticalValue h = line_height(ti, t[1], t[2]);
  EXPECT_EQ(h.value_sq, sq(8));
  EXPECT_EQ(std::get<LineHeight>(h.kind).p, 0u);
  EXPECT_TRUE(line_height(ti, t[1], t[0]).value_sq.is_zero());
  EXPECT_THROW(line_height(ti, t[0], t[0]), std::invalid_argument);
}

TEST(ExtremalProperties, MatchesLinearScan) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::int64_t> dir(-1000000, 1000000);
  for (int set = 0; set < 50; ++set) {
    const PointSet ps = hbtest::random_set(rng, 5 + (set * 37) % 496, set % 3 ? 1000 : 40);
    const ExtremalIndex idx(ps);
    for (int q = 0; q < 1000; ++q) {
      std::int64_t dx = dir(rng), dy = dir(rng);
      if (q % 7 == 0) dy = 0;
      if (dx == 0 && dy == 0) dx = 1;
      const Direction u(dx, dy);
      Integer best = dot(ps[0], u);
      for (const Point& p : ps) best = std::max(best, dot(p, u));
      ASSERT_EQ(dot(idx.extremal(u), u), best);
    }
  }
}

TEST(ExtremalProperties, QueryCostIsLogarithmic) {
  std::mt19937_64 rng(22);
  const PointSet ps = hbtest::generated(Shape::Convex, 400, 32768, 5);
  const ExtremalIndex idx(ps);
  const auto bound = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(idx.hull_size())))) + 3;
  std::uniform_int_distribution<std::int64_t> dir(-1000, 1000);
  for (int q = 0; q < 1000; ++q) {
    std::size_t probes = 0;
    idx.extremal_position(Direction(dir(rng), dir(rng) | 1), &probes);
    ASSERT_LE(probes, bound);
  }
}

TEST(LineHeightProperties, MatchesHalfplaneBruteForce) {
  std::mt19937_64 rng(23);
  for (int set = 0; set < 30; ++set) {
    const std::size_t n = 2 + set * 2;
    const PointSet ps = set % 2 ? hbtest::random_set(rng, n, 30) : hbtest::generated(hbtest::kShapes[set / 2 % 4], n, 60, set);
    const ExtremalIndex idx(ps);
    for (const Point& a : ps)
      for (const Point& b : ps)
        if (a.index() != b.index()) ASSERT_EQ(line_height(idx, a, b).value_sq, brute_height(ps, a, b));
  }
}

TEST(ExtremalProperties, PermutationDoesNotChangeAnswers) {
  std::mt19937_64 rng(24);
  for (int set = 0; set < 20; ++set) {
    const PointSet ps = hbtest::random_set(rng, 60, 25);
    std::vector<std::pair<std::int64_t, std::int64_t>> shuffled;
    for (const Point& p : ps) shuffled.push_back({p.cx(), p.cy()});
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const PointSet qs = hbtest::make(shuffled);
    const ExtremalIndex a(ps), b(qs);
    std::uniform_int_distribution<std::int64_t> dir(-50, 50);
    for (int q = 0; q < 300; ++q) {
      std::int64_t dx = dir(rng), dy = dir(rng);
      if (dx == 0 && dy == 0) dy = 1;
      const Point& pa = a.extremal(Direction(dx, dy));
      const Point& pb = b.extremal(Direction(dx, dy));
      ASSERT_TRUE(same_location(pa, pb));
    }
  }
}
