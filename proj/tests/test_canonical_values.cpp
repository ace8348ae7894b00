#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <variant>

#include "hb/canonical_values.hpp"
#include "hb/hausdorff_metrics.hpp"
#include "support.hpp"

using namespace hb;
using hbtest::sq;

namespace {

std::vector<SquaredDistance> sorted_pairs(const PointSet& P) {
  std::vector<SquaredDistance> out;
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j) out.push_back(sq_dist(P[i], P[j]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SquaredDistance> values_of(const std::vector<CriticalValue>& cs) {
  std::vector<SquaredDistance> out;
  for (const CriticalValue& c : cs) out.push_back(c.value_sq);
  return out;
}

}  // namespace

TEST(RankSelect, Examples) {
  const PointSet line = hbtest::make({{0, 0}, {1, 0}, {3, 0}});
  EXPECT_EQ(pairwise_rank_select(line, 1), sq(1));
  EXPECT_EQ(pairwise_rank_select(line, 2), sq(4));
  EXPECT_EQ(pairwise_rank_select(line, 3), sq(9));
  EXPECT_THROW(pairwise_rank_select(line, 0), std::out_of_range);
  EXPECT_THROW(pairwise_rank_select(line, 4), std::out_of_range);
  EXPECT_EQ(pairwise_rank_select(hbtest::s5(), 10), sq(32));
  EXPECT_EQ(pairwise_rank_select(hbtest::s5(), 4), sq(8));
  EXPECT_EQ(pairwise_rank_select(hbtest::s5(), 5), sq(16));
  EXPECT_THROW(pairwise_rank_select(hbtest::make({{1, 1}}), 1), std::out_of_range);
}

TEST(RankSelect, DistinctValues) {
  const PairwiseSelector sel(hbtest::s5());
  ASSERT_EQ(sel.size(), 10u);
  ASSERT_EQ(sel.distinct_count(), 3u);
  EXPECT_EQ(sel.distinct(0), sq(8));
  EXPECT_EQ(sel.distinct(1), sq(16));
  EXPECT_EQ(sel.distinct(2), sq(32));
}

TEST(RankSelect, MatchesSortingForEveryRank) {
  std::mt19937_64 rng(51);
  for (int inst = 0; inst < 40; ++inst) {
    const PointSet P = hbtest::random_set(rng, 2 + inst * 5 % 99, inst % 2 ? 20 : 100000);
    const std::vector<SquaredDistance> expect = sorted_pairs(P);
    const PairwiseSelector sel(P);
    ASSERT_EQ(sel.size(), expect.size());
    for (std::size_t r = 1; r <= expect.size(); ++r) ASSERT_EQ(sel.select(r), expect[r - 1]);
  }
}

TEST(RankSelect, WideCoordinates) {
  const Integer big = Integer(1) << 80;
  const PointSet P(PointSet::Coordinates{{0, 0}, {big, 0}, {0, 3}});
  EXPECT_EQ(pairwise_rank_select(P, 1), sq(9));
  EXPECT_EQ(pairwise_rank_select(P, 3), SquaredDistance(big * big + 9));
}

TEST(SampleLineValue, TriangleDistribution) {
  const PointSet T = hbtest::tri();
  const ExtremalIndex idx(T);
  Rng rng(5);
  std::map<std::string, int> counts;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) {
    const CriticalValue v = sample_line_value(idx, T, rng);
    ASSERT_TRUE(std::holds_alternative<LineHeight>(v.kind));
    std::ostringstream s;
    s << v.value_sq;
    ++counts[s.str()];
  }
  ASSERT_EQ(counts.size(), 3u);
  // Ordered pairs give heights 16, 0, 0, 8, 16, 0.
  EXPECT_NEAR(counts["0"] / double(draws), 0.5, 0.01);
  EXPECT_NEAR(counts["8"] / double(draws), 1.0 / 6, 0.01);
  EXPECT_NEAR(counts["16"] / double(draws), 1.0 / 3, 0.01);
}

TEST(SampleBag, Examples) {
  const PointSet T = hbtest::tri();
  const ExtremalIndex idx(T);
  const SampleBag empty = draw_sample_bag(idx, T, 0, OpenInterval{SquaredDistance(), std::nullopt}, 1);
  EXPECT_TRUE(empty.values.empty());
  EXPECT_EQ(empty.draws, 0u);

  const SampleBag mid = draw_sample_bag(idx, T, 600, OpenInterval{sq(1), sq(100)}, 9);
  EXPECT_EQ(mid.draws, 600u);
  EXPECT_EQ(mid.source_size, 6u);
  EXPECT_GT(mid.values.size(), 300u);
  for (const CriticalValue& c : mid.values) EXPECT_TRUE(c.value_sq == sq(8) || c.value_sq == sq(16));

  EXPECT_TRUE(draw_sample_bag(idx, T, 600, OpenInterval{sq(32), sq(33)}, 9).values.empty());
}

TEST(SampleBag, AgreesWithRepeatedSingleDraws) {
  std::mt19937_64 gen(52);
  for (int inst = 0; inst < 12; ++inst) {
    const PointSet P = inst % 3 == 0 ? [&] {
      PointSet::Coordinates c;
      std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
      for (int i = 0; i < 30; ++i) c.push_back({Integer(d(gen)) << 40, Integer(d(gen)) << 40});
      return PointSet(c);
    }()
                                     : hbtest::random_set(gen, 40, 1000);
    const ExtremalIndex idx(P);
    const OpenInterval iv{inst % 2 ? sq(100) : SquaredDistance(), std::nullopt};
    const SampleBag bag = draw_sample_bag(idx, P, 500, iv, 1000 + inst);
    Rng rng(1000 + inst);
    std::vector<SquaredDistance> expect;
    for (int i = 0; i < 500; ++i) {
      const CriticalValue v = sample_line_value(idx, P, rng);
      if (iv.contains(v.value_sq)) expect.push_back(v.value_sq);
    }
    ASSERT_EQ(values_of(bag.values), expect);
  }
}

TEST(SampleBag, Reproducible) {
  std::mt19937_64 gen(53);
  const PointSet P = hbtest::random_set(gen, 200, 5000);
  const ExtremalIndex idx(P);
  const OpenInterval iv{sq(50), sq(4000000)};
  const SampleBag a = draw_sample_bag(idx, P, 3000, iv, 77);
  const SampleBag b = draw_sample_bag(idx, P, 3000, iv, 77);
  const SampleBag c = draw_sample_bag(idx, P, 3000, iv, 78);
  EXPECT_EQ(values_of(a.values), values_of(b.values));
  EXPECT_NE(values_of(a.values), values_of(c.values));
}

TEST(SampleLineValue, ChiSquareUniformOverOrderedPairs) {
  // Pairs with distinct coordinates and the identity of each draw recovered from its
  // LineHeight record; the statistic uses n(n-1) - 1 = 379 degrees of freedom.
  int passes = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 gen(seed * 31);
    const PointSet P = hbtest::random_set(gen, 20, 1000000);
    ASSERT_EQ(P.size(), 20u);
    const ExtremalIndex idx(P);
    Rng rng(seed);
    std::vector<int> counts(20 * 20, 0);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
      const LineHeight h = std::get<LineHeight>(sample_line_value(idx, P, rng).kind);
      ++counts[h.a * 20 + h.b];
    }
    const double expect = draws / 380.0;
    double chi = 0;
    for (std::size_t a = 0; a < 20; ++a)
      for (std::size_t b = 0; b < 20; ++b) {
        if (a == b) {
          ASSERT_EQ(counts[a * 20 + b], 0);
          continue;
        }
        const double d = counts[a * 20 + b] - expect;
        chi += d * d / expect;
      }
    // Upper 1% point of chi-square with 379 degrees of freedom is about 447.
    if (chi < 447.0) ++passes;
  }
  EXPECT_GE(passes, 9);
}

TEST(CanonicalSet, Examples) {
  EXPECT_EQ(values_of(enumerate_canonical_set(hbtest::tri())), (std::vector{sq(8), sq(16), sq(32)}));
  EXPECT_EQ(values_of(enumerate_canonical_set(hbtest::s5())), (std::vector{sq(8), sq(16), sq(32)}));
  EXPECT_EQ(values_of(enumerate_canonical_set(hbtest::make({{0, 0}, {3, 4}}))), (std::vector{sq(25)}));
  EXPECT_TRUE(enumerate_canonical_set(hbtest::make({{2, 2}})).empty());
}

TEST(CanonicalSet, StrictlyIncreasingAndComplete) {
  std::mt19937_64 gen(54);
  for (int inst = 0; inst < 30; ++inst) {
    const PointSet P = hbtest::random_set(gen, 3 + inst % 25, inst % 2 ? 10 : 1000);
    const std::vector<SquaredDistance> xi = values_of(enumerate_canonical_set(P));
    for (std::size_t i = 1; i < xi.size(); ++i) ASSERT_LT(xi[i - 1], xi[i]);
    ASSERT_TRUE(xi.empty() || SquaredDistance() < xi.front());
    const ExtremalIndex idx(P);
    for (std::size_t a = 0; a < P.size(); ++a)
      for (std::size_t b = 0; b < P.size(); ++b) {
        if (a == b) continue;
        const SquaredDistance d = sq_dist(P[a], P[b]);
        ASSERT_TRUE(std::binary_search(xi.begin(), xi.end(), d));
        const SquaredDistance h = line_height(idx, P[a], P[b]).value_sq;
        if (SquaredDistance() < h) ASSERT_TRUE(std::binary_search(xi.begin(), xi.end(), h));
      }
    ASSERT_EQ(values_of(enumerate_canonical_set(P)), xi);
  }
}

TEST(CanonicalSet, TableLookupAndWideAgreement) {
  std::mt19937_64 gen(55);
  const PointSet P = hbtest::random_set(gen, 25, 300);
  PointSet::Coordinates scaled;
  for (const Point& p : P) scaled.push_back({p.x() << 40, p.y() << 40});
  const PointSet Q(scaled);
  const ExtremalIndex ip(P), iq(Q);
  const CanonicalTable tp(P, ip), tq(Q, iq);
  ASSERT_EQ(tp.size(), tq.size());
  const Integer f = Integer(1) << 80;
  for (std::size_t i = 0; i < tp.size(); ++i) {
    ASSERT_EQ(SquaredDistance(tp.value(i).numerator() * f, tp.value(i).denominator()), tq.value(i));
    ASSERT_TRUE(tp.contains(tp.value(i)));
    ASSERT_EQ(tp.lower_bound(tp.value(i)), i);
  }
  EXPECT_FALSE(tp.contains(midpoint(tp.value(0), tp.value(1))));
  EXPECT_EQ(tp.lower_bound(SquaredDistance()), 0u);
}
