#include "hb/hausdorff_metrics.hpp"

#include <stdexcept>

namespace hb {

namespace {

void require_subset(const PointSet& Q, const PointSet& P) {
  for (const Point& q : Q) {
    if (q.index() >= P.size() || !same_location(P[q.index()], q))
      throw std::invalid_argument("Q is not a subset of P");
  }
}

WitnessFeature classify(const Point& p, const ConvexPolygon& hull, const SquaredDistance& value) {
  if (value.is_zero()) return Contained{};
  if (hull.size() == 1) return HullVertex{hull[0].index()};
  const std::size_t edges = hull.size() == 2 ? 1 : hull.size();
  for (std::size_t i = 0; i < edges; ++i) {
    const Point& a = hull[i];
    const Point& b = hull.vertex(i + 1);
    if (sq_dist_point_segment(p, a, b) != value) continue;
    if (sq_dist(p, a) == value) return HullVertex{a.index()};
    if (sq_dist(p, b) == value) return HullVertex{b.index()};
    return HullEdgeLine{a.index(), b.index()};
  }
  throw std::logic_error("no hull feature realizes the distance");
}

}  // namespace

HausdorffResult hausdorff_sq(const PointSet& Q, const PointSet& P) {
  require_subset(Q, P);
  const ConvexPolygon hull = convex_hull(Q);
  std::size_t arg = 0;
  SquaredDistance best;
  for (std::size_t i = 0; i < P.size(); ++i) {
    SquaredDistance d = sq_dist_point_convex_polygon(P[i], hull);
    if (d > best) {
      best = std::move(d);
      arg = i;
    }
  }
  WitnessFeature feature = classify(P[arg], hull, best);
  return {std::move(best), P[arg], feature};
}

HausdorffResult hausdorff_sq(const PointSet& P, std::span<const std::size_t> subset) {
  return hausdorff_sq(P.subset(subset), P);
}

HausdorffResult hausdorff_sq_via_lines(const PointSet& Q, const ExtremalIndex& idx) {
  const ConvexPolygon hull = convex_hull(Q);
  if (hull.size() < 2) throw std::invalid_argument("line-based evaluation needs a hull with two vertices");
  HausdorffResult out{SquaredDistance(), hull[0], Contained{}};
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull.vertex(i + 1);
    // Interior of CH(Q) is left of a->b, so P's outside is left of b->a.
    CriticalValue cv = line_height(idx, b, a);
    if (cv.value_sq > out.value_sq) {
      const std::size_t w = std::get<LineHeight>(cv.kind).p;
      for (const Point& v : idx.hull().vertices()) {
        if (v.index() == w) out.witness_point = v;
      }
      out.value_sq = std::move(cv.value_sq);
      out.witness_feature = HullEdgeLine{a.index(), b.index()};
    }
  }
  return out;
}

HausdorffResult hausdorff_sq_via_lines(const PointSet& P, std::span<const std::size_t> subset,
                                       const ExtremalIndex& idx) {
  return hausdorff_sq_via_lines(P.subset(subset), idx);
}

}  // namespace hb
