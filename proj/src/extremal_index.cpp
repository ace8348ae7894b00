#include "hb/extremal_index.hpp"

#include <stdexcept>

#include "hb/detail/angular.hpp"

namespace hb {

namespace {

constexpr std::int64_t kQueryBound = std::int64_t{1} << 62;

// Largest i with key(e_i) <= key(w); reports whether the keys are equal.
template <class T, class W>
std::size_t fan_search(const std::vector<T>& ex, const std::vector<T>& ey, const T& wx, const T& wy, bool* tie,
                       std::size_t* probes) {
  const detail::AngularOrder<T, W> order{ex[0], ey[0]};
  std::size_t lo = 0;
  std::size_t hi = ex.size();
  std::size_t inspected = 0;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++inspected;
    if (order.compare(ex[mid], ey[mid], wx, wy) <= 0) lo = mid;
    else hi = mid;
  }
  ++inspected;
  *tie = order.compare(ex[lo], ey[lo], wx, wy) == 0;
  if (probes) *probes += inspected;
  return lo;
}

}  // namespace

Direction::Direction(Integer x, Integer y) : dx(std::move(x)), dy(std::move(y)) {
  if (dx.is_zero() && dy.is_zero()) throw std::invalid_argument("direction must be nonzero");
}

ExtremalIndex::ExtremalIndex(const PointSet& ps) : hull_(convex_hull(ps)) {
  const std::size_t h = hull_.size();
  compact_ = true;
  for (const Point& v : hull_.vertices()) compact_ = compact_ && v.compact();
  if (h < 2) return;
  for (std::size_t i = 0; i < h; ++i) {
    const Point& a = hull_[i];
    const Point& b = hull_.vertex(i + 1);
    ex_.push_back(b.x() - a.x());
    ey_.push_back(b.y() - a.y());
    if (compact_) {
      cex_.push_back(b.cx() - a.cx());
      cey_.push_back(b.cy() - a.cy());
    }
  }
}

std::size_t ExtremalIndex::resolve_tie(std::size_t i) const {
  const std::size_t j = (i + 1) % hull_.size();
  return lex_less(hull_[i], hull_[j]) ? i : j;
}

std::size_t ExtremalIndex::extremal_position(const Direction& u, std::size_t* probes) const {
  if (hull_.size() == 1) {
    if (probes) *probes += 1;
    return 0;
  }
  bool tie = false;
  std::size_t i;
  const bool small = compact_ && u.dx > -kQueryBound && u.dx < kQueryBound && u.dy > -kQueryBound &&
                     u.dy < kQueryBound;
  if (small) {
    const auto dx = static_cast<std::int64_t>(u.dx);
    const auto dy = static_cast<std::int64_t>(u.dy);
    i = fan_search<std::int64_t, i128>(cex_, cey_, -dy, dx, &tie, probes);
  } else {
    const Integer wx = -u.dy;
    i = fan_search<Integer, Integer>(ex_, ey_, wx, u.dx, &tie, probes);
  }
  return tie ? resolve_tie(i) : (i + 1) % hull_.size();
}

std::size_t ExtremalIndex::extremal_position(std::int64_t dx, std::int64_t dy) const {
  if (hull_.size() == 1) return 0;
  bool tie = false;
  const std::size_t i = fan_search<std::int64_t, i128>(cex_, cey_, -dy, dx, &tie, nullptr);
  return tie ? resolve_tie(i) : (i + 1) % hull_.size();
}

detail::WideRatio ExtremalIndex::line_height_wide(const Point& a, const Point& b, std::size_t* witness) const {
  const std::int64_t dx = b.cx() - a.cx();
  const std::int64_t dy = b.cy() - a.cy();
  const std::size_t pos = extremal_position(-dy, dx);
  if (witness) *witness = pos;
  const Point& p = hull_[pos];
  const i128 cross = static_cast<i128>(dx) * (p.cy() - a.cy()) - static_cast<i128>(dy) * (p.cx() - a.cx());
  const u128 len = static_cast<u128>(static_cast<i128>(dx) * dx + static_cast<i128>(dy) * dy);
  if (cross <= 0) return {0, 1};
  const u128 c = static_cast<u128>(cross);
  return {c * c, len};
}

ExtremalIndex build(const PointSet& ps) { return ExtremalIndex(ps); }

const Point& extremal(const ExtremalIndex& idx, const Direction& u) { return idx.extremal(u); }

CriticalValue line_height(const ExtremalIndex& idx, const Point& a, const Point& b) {
  if (same_location(a, b)) throw std::invalid_argument("line_height needs two distinct points");
  const Point& p = idx.extremal(Direction(a.y() - b.y(), b.x() - a.x()));
  const LineHeight kind{a.index(), b.index(), p.index()};
  if (orientation(a, b, p) <= 0) return {SquaredDistance(), kind};
  return {sq_dist_point_line(p, DirectedLine(a, b)), kind};
}

}  // namespace hb
