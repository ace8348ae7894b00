#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hb/instance_io.hpp"

namespace hb {

enum class Shape { UniformDisk, Grid, Convex, Clustered };

const char* to_string(Shape shape);
std::optional<Shape> parse_shape(std::string_view text);

inline constexpr std::int64_t kDefaultCoordBound = 32768;

/// n distinct integer points with coordinates in [-bound, bound], a pure function of
/// (shape, n, bound, seed). Throws std::invalid_argument when the request cannot be met.
///   uniform-disk: uniform lattice points of the disk of radius bound
///   grid: n cells of the centered s x s lattice, s = ceil(sqrt n), spacing floor(bound / s)
///   convex: n vertices of the hull of rounded points on the circle of radius bound
///   clustered: Gaussian clumps around uniform centers
InstanceFile generate(Shape shape, std::size_t n, std::int64_t bound, std::uint64_t seed);

}  // namespace hb
