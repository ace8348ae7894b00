#pragma once

#include <random>
#include <utility>
#include <vector>

#include "hb/exact_geometry.hpp"
#include "hb/generators.hpp"

namespace hbtest {

inline hb::PointSet make(std::vector<std::pair<std::int64_t, std::int64_t>> coords) {
  return hb::PointSet::from_i64(coords);
}

// Square with its center.
inline hb::PointSet s5() { return make({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}}); }
// Right triangle.
inline hb::PointSet tri() { return make({{0, 0}, {4, 0}, {0, 4}}); }

inline hb::PointSet random_set(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> c(-bound, bound);
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({c(rng), c(rng)});
  return hb::PointSet::from_i64(pts);
}

inline hb::PointSet generated(hb::Shape shape, std::size_t n, std::int64_t bound, std::uint64_t seed) {
  return hb::to_point_set(hb::generate(shape, n, bound, seed));
}

inline constexpr hb::Shape kShapes[] = {hb::Shape::UniformDisk, hb::Shape::Grid, hb::Shape::Convex,
                                        hb::Shape::Clustered};

inline hb::SquaredDistance sq(std::int64_t v) { return hb::SquaredDistance(hb::Integer(v)); }

}  // namespace hbtest
