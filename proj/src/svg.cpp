#include "hb/svg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "hb/hausdorff_metrics.hpp"

namespace hb {
namespace {

struct Xy {
  double x;
  double y;
};

Xy to_xy(const Point& p) { return {to_double(p.x()), to_double(p.y())}; }

Xy nearest_on_segment(Xy p, Xy a, Xy b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0) return a;
  const double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  return {a.x + t * dx, a.y + t * dy};
}

Xy nearest_on_polygon(Xy p, const ConvexPolygon& poly) {
  Xy best = to_xy(poly[0]);
  double best_d = INFINITY;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Xy q = nearest_on_segment(p, to_xy(poly.vertex(i)), to_xy(poly.vertex(i + 1)));
    const double d = std::hypot(q.x - p.x, q.y - p.y);
    if (d < best_d) {
      best_d = d;
      best = q;
    }
  }
  return best;
}

// SVG's y axis points down, so every y is negated.
void polygon(std::ostream& out, const ConvexPolygon& poly, const char* style) {
  out << "<polygon points=\"";
  for (const Point& v : poly.vertices()) {
    const Xy c = to_xy(v);
    out << c.x << ',' << -c.y << ' ';
  }
  out << "\" vector-effect=\"non-scaling-stroke\" " << style << "/>\n";
}

}  // namespace

void write_svg(std::ostream& out, const PointSet& P, std::span<const std::size_t> subset) {
  double lo_x = INFINITY, lo_y = INFINITY, hi_x = -INFINITY, hi_y = -INFINITY;
  for (const Point& p : P) {
    const Xy c = to_xy(p);
    lo_x = std::min(lo_x, c.x);
    hi_x = std::max(hi_x, c.x);
    lo_y = std::min(lo_y, c.y);
    hi_y = std::max(hi_y, c.y);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  const double pad = 0.05 * span;
  const double r = 0.006 * span;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo_x - pad << ' ' << -hi_y - pad << ' '
      << hi_x - lo_x + 2 * pad << ' ' << hi_y - lo_y + 2 * pad << "\">\n";
  polygon(out, convex_hull(P), "fill=\"#eef3fb\" stroke=\"#5577aa\"");
  for (const Point& p : P) {
    const Xy c = to_xy(p);
    out << "<circle cx=\"" << c.x << "\" cy=\"" << -c.y << "\" r=\"" << r << "\" fill=\"#333\"/>\n";
  }
  if (!subset.empty()) {
    const PointSet Q = P.subset(subset);
    const ConvexPolygon hq = convex_hull(Q);
    polygon(out, hq, "fill=\"none\" stroke=\"#cc3311\"");
    for (const Point& q : Q) {
      const Xy c = to_xy(q);
      out << "<circle cx=\"" << c.x << "\" cy=\"" << -c.y << "\" r=\"" << 1.8 * r << "\" fill=\"#cc3311\"/>\n";
    }
    const HausdorffResult h = hausdorff_sq(Q, P);
    const Xy w = to_xy(h.witness_point);
    const Xy foot = nearest_on_polygon(w, hq);
    out << "<line x1=\"" << w.x << "\" y1=\"" << -w.y << "\" x2=\"" << foot.x << "\" y2=\"" << -foot.y
        << "\" stroke=\"#228833\" vector-effect=\"non-scaling-stroke\" stroke-dasharray=\"4\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace hb
