#include <gtest/gtest.h>

#include <random>

#include "hb/hausdorff_metrics.hpp"
#include "support.hpp"

using namespace hb;
using hbtest::sq;

TEST(HausdorffSq, Examples) {
  const PointSet s5 = hbtest::s5();
  const HausdorffResult one = hausdorff_sq(s5, std::vector<std::size_t>{0});
  EXPECT_EQ(one.value_sq, sq(32));
  EXPECT_EQ(one.witness_point.index(), 2u);
  EXPECT_TRUE(std::holds_alternative<HullVertex>(one.witness_feature));

  EXPECT_TRUE(hausdorff_sq(s5, std::vector<std::size_t>{0, 1, 2, 3}).value_sq.is_zero());

  const HausdorffResult diag = hausdorff_sq(s5, std::vector<std::size_t>{0, 2});
  EXPECT_EQ(diag.value_sq, sq(8));
  EXPECT_EQ(diag.witness_point.index(), 1u);
  EXPECT_TRUE(std::holds_alternative<HullEdgeLine>(diag.witness_feature));
}

TEST(HausdorffSq, RejectsForeignSubsets) {
  const PointSet s5 = hbtest::s5();
  const PointSet other = hbtest::make({{9, 9}});
  EXPECT_THROW(hausdorff_sq(other, s5), std::invalid_argument);
  EXPECT_THROW(hausdorff_sq(s5, std::vector<std::size_t>{7}), std::out_of_range);
}

TEST(HausdorffViaLines, Examples) {
  const PointSet s5 = hbtest::s5();
  const ExtremalIndex idx(s5);
  EXPECT_EQ(hausdorff_sq_via_lines(s5, std::vector<std::size_t>{0, 1}, idx).value_sq, sq(16));
  EXPECT_TRUE(hausdorff_sq_via_lines(s5, std::vector<std::size_t>{0, 1, 2, 3}, idx).value_sq.is_zero());
  EXPECT_EQ(hausdorff_sq_via_lines(s5, std::vector<std::size_t>{0, 2}, idx).value_sq, sq(8));
  EXPECT_THROW(hausdorff_sq_via_lines(s5, std::vector<std::size_t>{4}, idx), std::invalid_argument);
}

TEST(HausdorffProperties, LineValueNeverExceedsExactValue) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 400; ++i) {
    const PointSet P = hbtest::random_set(rng, 4 + i % 40, i % 2 ? 12 : 500);
    const ExtremalIndex idx(P);
    std::vector<std::size_t> subset;
    for (std::size_t j = 0; j < P.size(); ++j)
      if (rng() % 3 == 0) subset.push_back(j);
    if (subset.size() < 2) subset = {0, P.size() - 1};
    if (convex_hull(P.subset(subset)).size() < 2) continue;
    const HausdorffResult exact = hausdorff_sq(P, subset);
    const HausdorffResult lines = hausdorff_sq_via_lines(P, subset, idx);
    ASSERT_LE(lines.value_sq, exact.value_sq);
    if (std::holds_alternative<HullEdgeLine>(exact.witness_feature)) ASSERT_EQ(lines.value_sq, exact.value_sq);
  }
}

TEST(HausdorffProperties, SelfDistanceIsZeroAndSupersetsNeverWorse) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    const PointSet P = hbtest::random_set(rng, 2 + i % 50, 100);
    EXPECT_TRUE(hausdorff_sq(P, P).value_sq.is_zero());
    std::vector<std::size_t> small, large;
    for (std::size_t j = 0; j < P.size(); ++j) {
      const auto r = rng() % 4;
      if (r == 0) small.push_back(j);
      if (r <= 1) large.push_back(j);
    }
    if (small.empty()) continue;
    EXPECT_LE(hausdorff_sq(P, large).value_sq, hausdorff_sq(P, small).value_sq);
  }
}
