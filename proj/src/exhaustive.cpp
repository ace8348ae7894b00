#include <bit>

#include "hb/decider.hpp"
#include "hb/hausdorff_metrics.hpp"

namespace hb {

ExhaustiveTable::ExhaustiveTable(const PointSet& P) : best_(P.size() + 1) {
  const std::size_t n = P.size();
  if (n > kMaxPoints) throw std::invalid_argument("exhaustive search is limited to 16 points");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<Point> chosen;
  std::vector<std::size_t> ids;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    chosen.clear();
    ids.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        chosen.push_back(P[i]);
        ids.push_back(i);
      }
    }
    const ConvexPolygon hull = convex_hull(std::span<const Point>(chosen));
    if (hull.size() != chosen.size()) continue;
    SquaredDistance worst;
    for (const Point& p : P) {
      SquaredDistance d = sq_dist_point_convex_polygon(p, hull);
      if (d > worst) worst = std::move(d);
    }
    auto& slot = best_[chosen.size()];
    if (!slot || worst < slot->value_sq) slot = Best{std::move(worst), ids};
  }
}

ExhaustiveDecider::ExhaustiveDecider(const PointSet& P) : points_(P), table_(P) {}

DeciderVerdict ExhaustiveDecider::decide(const Threshold& t, std::size_t k) const {
  if (k == 0) throw std::invalid_argument("k must be positive");
  const std::size_t limit = std::min(k, table_.max_size());
  for (std::size_t c = 1; c <= limit; ++c) {
    const auto& best = table_.best(c);
    if (best && satisfies(best->value_sq, t)) return DeciderVerdict::found(best->subset);
  }
  return DeciderVerdict::exceeds();
}

DeciderVerdict brute_decide(const PointSet& P, const Threshold& t, std::size_t k) {
  return ExhaustiveDecider(P).decide(t, k);
}

}  // namespace hb
