#include "hb/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace hb {
namespace {

using Cell = std::pair<std::int64_t, std::int64_t>;

class Collector {
 public:
  explicit Collector(std::size_t n) : n_(n) {}
  bool add(std::int64_t x, std::int64_t y) {
    if (done() || !seen_.insert({x, y}).second) return false;
    order_.push_back({x, y});
    return true;
  }
  bool done() const { return order_.size() >= n_; }
  const std::vector<Cell>& points() const { return order_; }

 private:
  std::size_t n_;
  std::set<Cell> seen_;
  std::vector<Cell> order_;
};

std::vector<Cell> uniform_disk(std::size_t n, std::int64_t bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  Collector out(n);
  const double r2 = static_cast<double>(bound) * static_cast<double>(bound);
  while (!out.done()) {
    const std::int64_t x = coord(rng);
    const std::int64_t y = coord(rng);
    if (static_cast<double>(x) * x + static_cast<double>(y) * y <= r2) out.add(x, y);
  }
  return out.points();
}

std::vector<Cell> grid(std::size_t n, std::int64_t bound, std::mt19937_64& rng) {
  const auto side = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  const std::int64_t spacing = bound / side;
  if (spacing < 1) throw std::invalid_argument("grid does not fit inside the coordinate bound");
  const std::int64_t offset = (side - 1) * spacing / 2;
  std::vector<Cell> cells;
  for (std::int64_t j = 0; j < side; ++j)
    for (std::int64_t i = 0; i < side; ++i) cells.push_back({i * spacing - offset, j * spacing - offset});
  if (cells.size() > n) {
    std::shuffle(cells.begin(), cells.end(), rng);
    cells.resize(n);
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
      return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
  }
  return cells;
}

std::vector<Point> disk_hull_candidates(std::int64_t radius) {
  std::vector<Point> pts;
  const i128 r2 = static_cast<i128>(radius) * radius;
  for (std::int64_t x = -radius; x <= radius; ++x) {
    const i128 rest = r2 - static_cast<i128>(x) * x;
    auto y = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
    while (static_cast<i128>(y) * y > rest) --y;
    while (static_cast<i128>(y + 1) * (y + 1) <= rest) ++y;
    pts.emplace_back(x, y, pts.size());
    if (y != 0) pts.emplace_back(x, -y, pts.size());
  }
  return pts;
}

// A random n-subset of the hull vertices of the lattice points in a disk. The smallest
// adequate radius is used and the result scaled up towards the bound.
std::vector<Cell> convex(std::size_t n, std::int64_t bound, std::mt19937_64& rng) {
  std::int64_t radius = std::min<std::int64_t>(bound, 16 + static_cast<std::int64_t>(std::pow(n / 3.0, 1.5)));
  std::vector<Point> hull;
  for (;;) {
    const std::vector<Point> pts = disk_hull_candidates(radius);
    hull = convex_hull(std::span<const Point>(pts)).vertices();
    if (hull.size() >= n || radius == bound) break;
    radius = std::min(bound, 2 * radius);
  }
  if (hull.size() < n) throw std::invalid_argument("too few lattice points in convex position for this bound");
  const std::int64_t scale = bound / radius;
  std::vector<std::size_t> keep(hull.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  std::shuffle(keep.begin(), keep.end(), rng);
  keep.resize(n);
  std::sort(keep.begin(), keep.end());
  std::vector<Cell> out;
  for (std::size_t i : keep) out.push_back({hull[i].cx() * scale, hull[i].cy() * scale});
  return out;
}

std::vector<Cell> clustered(std::size_t n, std::int64_t bound, std::mt19937_64& rng) {
  const std::size_t clusters = std::max<std::size_t>(1, n / 20);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<std::pair<double, double>> centers;
  while (centers.size() < clusters) {
    const double x = unit(rng);
    const double y = unit(rng);
    if (x * x + y * y <= 1.0) centers.push_back({0.8 * bound * x, 0.8 * bound * y});
  }
  std::uniform_int_distribution<std::size_t> pick(0, clusters - 1);
  std::normal_distribution<double> spread(0.0, std::max(1.0, bound / 10.0));
  Collector out(n);
  while (!out.done()) {
    const auto& c = centers[pick(rng)];
    const auto x = std::clamp<std::int64_t>(std::llround(c.first + spread(rng)), -bound, bound);
    const auto y = std::clamp<std::int64_t>(std::llround(c.second + spread(rng)), -bound, bound);
    out.add(x, y);
  }
  return out.points();
}

}  // namespace

const char* to_string(Shape shape) {
  switch (shape) {
    case Shape::UniformDisk: return "uniform-disk";
    case Shape::Grid: return "grid";
    case Shape::Convex: return "convex";
    case Shape::Clustered: return "clustered";
  }
  return "?";
}

std::optional<Shape> parse_shape(std::string_view text) {
  for (Shape s : {Shape::UniformDisk, Shape::Grid, Shape::Convex, Shape::Clustered})
    if (text == to_string(s)) return s;
  return std::nullopt;
}

InstanceFile generate(Shape shape, std::size_t n, std::int64_t bound, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (shape != Shape::Grid && bound < static_cast<std::int64_t>(n))
    throw std::invalid_argument("coordinate bound must be at least n");
  if (bound > (std::int64_t{1} << 52)) throw std::invalid_argument("coordinate bound must stay below 2^52");
  std::mt19937_64 rng(seed);
  std::vector<Cell> cells;
  switch (shape) {
    case Shape::UniformDisk: cells = uniform_disk(n, bound, rng); break;
    case Shape::Grid: cells = grid(n, bound, rng); break;
    case Shape::Convex: cells = convex(n, bound, rng); break;
    case Shape::Clustered: cells = clustered(n, bound, rng); break;
  }
  InstanceFile inst;
  inst.name = std::string(to_string(shape)) + "-" + std::to_string(n);
  inst.seed = seed;
  for (const auto& [x, y] : cells) inst.coords.emplace_back(Integer(x), Integer(y));
  return inst;
}

}  // namespace hb
