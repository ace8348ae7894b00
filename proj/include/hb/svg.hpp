#pragma once

#include <iosfwd>
#include <span>

#include "hb/exact_geometry.hpp"

namespace hb {

/// Draws P, CH(P), CH(Q) for the chosen subset and the segment realizing the Hausdorff
/// distance. Presentation only; coordinates are converted to doubles.
void write_svg(std::ostream& out, const PointSet& P, std::span<const std::size_t> subset);

}  // namespace hb
