#include "hb/canonical_values.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hb {
namespace {

std::uint64_t compact_sq_dist(const Point& p, const Point& q) {
  const std::int64_t dx = p.cx() - q.cx();
  const std::int64_t dy = p.cy() - q.cy();
  return static_cast<std::uint64_t>(dx * dx) + static_cast<std::uint64_t>(dy * dy);
}

SquaredDistance reduced(const detail::WideRatio& r) {
  if (r.num == 0) return SquaredDistance();
  const u128 g = detail::gcd_wide(r.num, r.den);
  return SquaredDistance::from_wide(r.num / g, r.den / g);
}

std::uint64_t ordered_pairs(std::size_t n) { return static_cast<std::uint64_t>(n) * (n - 1); }

// Both samplers decode the same uniform draw so that they consume the generator alike.
std::pair<std::size_t, std::size_t> draw_pair(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, ordered_pairs(n) - 1);
  const std::uint64_t code = pick(rng);
  const std::size_t a = static_cast<std::size_t>(code / (n - 1));
  std::size_t b = static_cast<std::size_t>(code % (n - 1));
  if (b >= a) ++b;
  return {a, b};
}

bool fast_path(const ExtremalIndex& idx, const PointSet& P) { return idx.compact() && P.compact(); }

}  // namespace

PairwiseSelector::PairwiseSelector(const PointSet& P) {
  const std::size_t n = P.size();
  total_ = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (P.compact()) {
    compact_.reserve(total_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) compact_.push_back(compact_sq_dist(P[i], P[j]));
    std::sort(compact_.begin(), compact_.end());
    for (std::size_t i = 0; i < compact_.size(); ++i)
      if (i == 0 || compact_[i] != compact_[i - 1]) compact_distinct_.push_back(i);
  } else {
    big_.reserve(total_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) big_.push_back(sq_dist(P[i], P[j]));
    std::sort(big_.begin(), big_.end());
    for (std::size_t i = 0; i < big_.size(); ++i)
      if (i == 0 || big_[i] != big_[i - 1]) big_distinct_.push_back(i);
  }
}

SquaredDistance PairwiseSelector::select(std::uint64_t rank) const {
  if (rank < 1 || rank > total_) throw std::out_of_range("pair distance rank out of range");
  if (!compact_.empty()) return SquaredDistance(Integer(compact_[rank - 1]));
  return big_[rank - 1];
}

std::size_t PairwiseSelector::distinct_count() const {
  return compact_.empty() ? big_distinct_.size() : compact_distinct_.size();
}

SquaredDistance PairwiseSelector::distinct(std::size_t i) const {
  if (!compact_.empty()) return SquaredDistance(Integer(compact_[compact_distinct_.at(i)]));
  return big_[big_distinct_.at(i)];
}

SquaredDistance pairwise_rank_select(const PointSet& P, std::uint64_t rank) {
  if (P.size() < 2) throw std::out_of_range("pair distance selection needs two points");
  return PairwiseSelector(P).select(rank);
}

CriticalValue sample_line_value(const ExtremalIndex& idx, const PointSet& P, Rng& rng) {
  if (P.size() < 2) throw std::invalid_argument("sampling needs two points");
  const auto [a, b] = draw_pair(P.size(), rng);
  return line_height(idx, P[a], P[b]);
}

SampleBag draw_sample_bag(const ExtremalIndex& idx, const PointSet& P, std::uint64_t m,
                          const OpenInterval& interval, std::uint64_t seed) {
  SampleBag bag;
  bag.draws = m;
  bag.rng_seed = seed;
  if (m == 0) return bag;
  if (P.size() < 2) throw std::invalid_argument("sampling needs two points");
  bag.source_size = ordered_pairs(P.size());
  Rng rng(seed);

  const bool wide_bounds = interval.low.has_wide() && (!interval.high || interval.high->has_wide());
  if (!fast_path(idx, P) || !wide_bounds) {
    for (std::uint64_t i = 0; i < m; ++i) {
      CriticalValue v = sample_line_value(idx, P, rng);
      if (interval.contains(v.value_sq)) bag.values.push_back(std::move(v));
    }
    return bag;
  }

  const u128 lo_num = interval.low.wide_numerator();
  const u128 lo_den = interval.low.wide_denominator();
  for (std::uint64_t i = 0; i < m; ++i) {
    const auto [a, b] = draw_pair(P.size(), rng);
    std::size_t witness = 0;
    const detail::WideRatio r = idx.line_height_wide(P[a], P[b], &witness);
    if (detail::compare_ratio(r.num, r.den, lo_num, lo_den) <= 0) continue;
    if (interval.high &&
        detail::compare_ratio(r.num, r.den, interval.high->wide_numerator(), interval.high->wide_denominator()) >= 0)
      continue;
    bag.values.push_back({reduced(r), LineHeight{P[a].index(), P[b].index(), idx.hull()[witness].index()}});
  }
  return bag;
}

CanonicalTable::CanonicalTable(const PointSet& P, const ExtremalIndex& idx)
    : points_(&P), hull_(&idx.hull()), fast_(fast_path(idx, P)) {
  const std::size_t n = P.size();
  if (n < 2) return;
  const bool fast = fast_;
  entries_.reserve(static_cast<std::size_t>(ordered_pairs(n)) + n * (n - 1) / 2);

  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const double d = fast ? static_cast<double>(compact_sq_dist(P[i], P[j])) : sq_dist(P[i], P[j]).to_double();
      if (d == 0) continue;
      entries_.push_back({d, i, j, kPair});
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (fast) {
        std::size_t witness = 0;
        const detail::WideRatio r = idx.line_height_wide(P[a], P[b], &witness);
        if (r.num == 0) continue;
        entries_.push_back({detail::approx(r), a, b, static_cast<std::uint32_t>(witness)});
      } else {
        const std::size_t witness = idx.extremal_position(Direction(P[a].y() - P[b].y(), P[b].x() - P[a].x()));
        if (orientation(P[a], P[b], idx.hull()[witness]) <= 0) continue;
        const Entry e{0.0, a, b, static_cast<std::uint32_t>(witness)};
        entries_.push_back({exact(e).to_double(), a, b, e.p});
      }
    }
  }

  std::sort(entries_.begin(), entries_.end(), [this](const Entry& x, const Entry& y) {
    const int c = compare_exact(x, y);
    if (c != 0) return c < 0;
    const bool xl = x.p != kPair;
    const bool yl = y.p != kPair;
    if (xl != yl) return !xl;
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.p < y.p;
  });
  const auto last = std::unique(entries_.begin(), entries_.end(),
                                [this](const Entry& x, const Entry& y) { return compare_exact(x, y) == 0; });
  entries_.erase(last, entries_.end());
  entries_.shrink_to_fit();
}

detail::WideRatio CanonicalTable::wide(const Entry& e) const {
  const PointSet& P = *points_;
  if (e.p == kPair) return {compact_sq_dist(P[e.a], P[e.b]), 1};
  const Point& a = P[e.a];
  const Point& b = P[e.b];
  const Point& p = (*hull_)[e.p];
  const std::int64_t dx = b.cx() - a.cx();
  const std::int64_t dy = b.cy() - a.cy();
  const i128 cross = static_cast<i128>(dx) * (p.cy() - a.cy()) - static_cast<i128>(dy) * (p.cx() - a.cx());
  const u128 c = static_cast<u128>(cross);
  return {c * c, static_cast<u128>(static_cast<i128>(dx) * dx + static_cast<i128>(dy) * dy)};
}

SquaredDistance CanonicalTable::exact(const Entry& e) const {
  const PointSet& P = *points_;
  if (e.p == kPair) return sq_dist(P[e.a], P[e.b]);
  return sq_dist_point_line((*hull_)[e.p], DirectedLine(P[e.a], P[e.b]));
}

int CanonicalTable::compare_exact(const Entry& x, const Entry& y) const {
  const double slack = 1e-9 * std::max(x.approx, y.approx);
  if (x.approx < y.approx - slack) return -1;
  if (x.approx > y.approx + slack) return 1;
  if (fast_) return detail::compare(wide(x), wide(y));
  const auto c = exact(x) <=> exact(y);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

SquaredDistance CanonicalTable::value(std::size_t i) const { return exact(entries_.at(i)); }

CriticalValue CanonicalTable::at(std::size_t i) const {
  const Entry& e = entries_.at(i);
  const PointSet& P = *points_;
  if (e.p == kPair) return {exact(e), PairDistance{P[e.a].index(), P[e.b].index()}};
  return {exact(e), LineHeight{P[e.a].index(), P[e.b].index(), (*hull_)[e.p].index()}};
}

std::size_t CanonicalTable::lower_bound(const SquaredDistance& v) const {
  std::size_t lo = 0;
  std::size_t hi = entries_.size();
  const double va = v.to_double();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const Entry& e = entries_[mid];
    int c;
    if (e.approx < va * (1 - 1e-9)) {
      c = -1;
    } else if (e.approx > va * (1 + 1e-9)) {
      c = 1;
    } else {
      const auto o = exact(e) <=> v;
      c = o < 0 ? -1 : (o > 0 ? 1 : 0);
    }
    if (c < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

bool CanonicalTable::contains(const SquaredDistance& v) const {
  const std::size_t i = lower_bound(v);
  return i < entries_.size() && value(i) == v;
}

std::vector<CriticalValue> enumerate_canonical_set(const PointSet& P) {
  const ExtremalIndex idx(P);
  const CanonicalTable table(P, idx);
  std::vector<CriticalValue> out;
  out.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) out.push_back(table.at(i));
  return out;
}

}  // namespace hb
