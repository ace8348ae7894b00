#pragma once

#include <span>
#include <variant>

#include "hb/extremal_index.hpp"

namespace hb {

struct HullVertex {
  std::size_t q;
};

struct HullEdgeLine {
  std::size_t a;
  std::size_t b;
};

/// The witness lies inside or on CH(Q); only possible when the distance is zero.
struct Contained {};

using WitnessFeature = std::variant<HullVertex, HullEdgeLine, Contained>;

struct HausdorffResult {
  SquaredDistance value_sq;
  Point witness_point;
  WitnessFeature witness_feature;
};

/// max over p in P of the squared distance from p to CH(Q). Q must carry indices of P
/// with matching coordinates; throws std::invalid_argument otherwise.
HausdorffResult hausdorff_sq(const PointSet& Q, const PointSet& P);
HausdorffResult hausdorff_sq(const PointSet& P, std::span<const std::size_t> subset);

/// Largest line height over the hull edges of Q, each oriented with P's outside on
/// its left. Requires CH(Q) to have at least two vertices. Never exceeds hausdorff_sq.
HausdorffResult hausdorff_sq_via_lines(const PointSet& Q, const ExtremalIndex& idx);
HausdorffResult hausdorff_sq_via_lines(const PointSet& P, std::span<const std::size_t> subset,
                                       const ExtremalIndex& idx);

}  // namespace hb
