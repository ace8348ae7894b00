#include "hb/decider.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <variant>

#include "hb/detail/angular.hpp"
#include "hb/hausdorff_metrics.hpp"

namespace hb {

bool satisfies(const SquaredDistance& value, const Threshold& t) {
  return t.mode == ThresholdMode::Closed ? value <= t.value_sq : value < t.value_sq;
}

const char* to_string(ThresholdMode mode) { return mode == ThresholdMode::Closed ? "closed" : "open"; }

DeciderVerdict DeciderVerdict::found(std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  DeciderVerdict v;
  v.feasible = true;
  v.kopt = subset.size();
  v.subset = std::move(subset);
  return v;
}

namespace {

bool accepts(int cmp, ThresholdMode mode) { return mode == ThresholdMode::Closed ? cmp <= 0 : cmp < 0; }

struct CompactArith {
  using T = std::int64_t;
  using W = i128;
  static T x(const Point& p) { return p.cx(); }
  static T y(const Point& p) { return p.cy(); }
  // Sign of v^2/den - rho for v >= 0.
  static int compare_square(const W& v, const W& den, const SquaredDistance& rho) {
    const u128 c = static_cast<u128>(v);
    return compare_ratio(c * c, static_cast<u128>(den), rho);
  }
  static int compare_value(const W& v, const SquaredDistance& rho) {
    return compare_ratio(static_cast<u128>(v), u128{1}, rho);
  }
  static double approx(const W& v) { return static_cast<double>(v); }
  static std::size_t extremal(const ExtremalIndex& idx, const T& ux, const T& uy) {
    return idx.extremal_position(ux, uy);
  }
};

struct BigArith {
  using T = Integer;
  using W = Integer;
  static const T& x(const Point& p) { return p.x(); }
  static const T& y(const Point& p) { return p.y(); }
  static int compare_square(const W& v, const W& den, const SquaredDistance& rho) {
    return compare_ratio(W(v * v), den, rho);
  }
  static int compare_value(const W& v, const SquaredDistance& rho) { return compare_ratio(v, W(1), rho); }
  static double approx(const W& v) { return to_double(v); }
  static std::size_t extremal(const ExtremalIndex& idx, const T& ux, const T& uy) {
    return idx.extremal_position(Direction(ux, uy));
  }
};

constexpr std::uint16_t kSameDirection = 1u << 15;
constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

template <class A>
class SweepCore {
 public:
  using T = typename A::T;
  using W = typename A::W;

  SweepCore(const PointSet& P, const ExtremalIndex& idx);
  DeciderVerdict decide(const Threshold& t, std::size_t k) const;

  // Directed pair a->b; the high bit of a_ marks "same direction as the previous entry".
  struct Entry {
    std::uint16_t a_;
    std::uint16_t b_;
    float cap;
  };

  static std::uint32_t source(const Entry& e) { return e.a_ & ~kSameDirection; }
  static std::uint32_t target(const Entry& e) { return e.b_; }
  static bool continues_group(const Entry& e) { return (e.a_ & kSameDirection) != 0; }

  class Pass;
  class ReachTracker;
  class PathTracker;

 private:
  template <class Tracker>
  void sweep(Pass& pass, Tracker& tracker) const;

  W dist2(std::size_t p, std::size_t hull_pos) const {
    const W dx = W(hx_[hull_pos]) - xs_[p];
    const W dy = W(hy_[hull_pos]) - ys_[p];
    return dx * dx + dy * dy;
  }

  const ExtremalIndex& idx_;
  std::size_t n_;
  std::vector<T> xs_, ys_;
  std::vector<std::size_t> hull_;
  std::vector<T> hx_, hy_;
  std::vector<Entry> entries_;
};

template <class A>
SweepCore<A>::SweepCore(const PointSet& P, const ExtremalIndex& idx) : idx_(idx), n_(P.size()) {
  for (const Point& p : P) {
    xs_.push_back(A::x(p));
    ys_.push_back(A::y(p));
  }
  for (const Point& v : idx.hull().vertices()) {
    hull_.push_back(v.index());
    hx_.push_back(A::x(v));
    hy_.push_back(A::y(v));
  }
  if (n_ < 2) return;

  const detail::AngularOrder<T, W> global{T(1), T(0)};
  const auto dir_compare = [&](std::uint32_t c1, std::uint32_t c2) {
    const std::uint32_t a1 = c1 / n_, b1 = c1 % n_, a2 = c2 / n_, b2 = c2 % n_;
    return global.compare(T(xs_[b1] - xs_[a1]), T(ys_[b1] - ys_[a1]), T(xs_[b2] - xs_[a2]), T(ys_[b2] - ys_[a2]));
  };
  struct Keyed {
    double angle;
    std::uint32_t code;
  };
  constexpr double kAngleSlack = 1e-9;
  std::vector<Keyed> keyed;
  keyed.reserve(n_ * (n_ - 1));
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (a == b) continue;
      double angle = std::atan2(A::approx(W(ys_[b]) - ys_[a]), A::approx(W(xs_[b]) - xs_[a]));
      if (angle < 0) angle += 2 * std::numbers::pi;
      keyed.push_back({angle, static_cast<std::uint32_t>(a * n_ + b)});
    }
  }
  std::sort(keyed.begin(), keyed.end(), [&](const Keyed& u, const Keyed& v) {
    if (std::abs(u.angle - v.angle) > kAngleSlack || !std::isfinite(u.angle - v.angle)) return u.angle < v.angle;
    const int c = dir_compare(u.code, v.code);
    return c != 0 ? c < 0 : u.code < v.code;
  });

  entries_.resize(keyed.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    const std::uint32_t code = keyed[i].code;
    auto a = static_cast<std::uint16_t>(code / n_);
    if (i > 0 && std::abs(keyed[i].angle - keyed[i - 1].angle) <= kAngleSlack &&
        dir_compare(keyed[i - 1].code, code) == 0)
      a |= kSameDirection;
    entries_[i] = {a, static_cast<std::uint16_t>(code % n_), 0.0f};
  }
  std::vector<Keyed>().swap(keyed);

  // Right-side cap of every directed pair, by rotating a pointer around the hull.
  const std::size_t h = hull_.size();
  std::size_t ptr = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    Entry& e = entries_[i];
    const std::uint32_t a = source(e), b = target(e);
    const T dx = xs_[b] - xs_[a];
    const T dy = ys_[b] - ys_[a];
    const T ux = dy;
    const T uy = -dx;
    const auto height = [&](std::size_t j) { return W(hx_[j]) * ux + W(hy_[j]) * uy; };
    if (h > 1 && (i == 0 || !continues_group(e))) {
      if (i == 0) {
        ptr = A::extremal(idx_, ux, uy);
      } else {
        W cur = height(ptr);
        for (;;) {
          const std::size_t next = (ptr + 1) % h;
          W v = height(next);
          if (v <= cur) break;
          ptr = next;
          cur = std::move(v);
        }
        if (height((ptr + h - 1) % h) > cur) ptr = A::extremal(idx_, ux, uy);
      }
    }
    const W cap = W(hx_[ptr] - xs_[a]) * ux + W(hy_[ptr] - ys_[a]) * uy;
    if (cap > 0) {
      const double c = A::approx(cap);
      e.cap = static_cast<float>(c * c / A::approx(W(dx) * dx + W(dy) * dy));
    } else {
      e.cap = 0.0f;
    }
  }
}

// Per-call state shared by both sweeps: the threshold, the reference direction, edge
// validity, and each point's lazily built list of "reset" directions. A reset direction
// of point p is the left normal of (v - p) for a hull vertex v beyond the threshold from p;
// a walk may not turn through such a direction while standing at p.
template <class A>
class SweepCore<A>::Pass {
 public:
  Pass(const SweepCore& core, const Threshold& t, T rx, T ry)
      : core_(core),
        rho_(t.value_sq),
        mode_(t.mode),
        order_{std::move(rx), std::move(ry)},
        offset_(core.n_, 0),
        end_(core.n_, 0),
        cursor_(core.n_, 0),
        ready_(core.n_, 0) {
    const detail::AngularOrder<T, W> global{T(1), T(0)};
    const auto& entries = core.entries_;
    std::size_t lo = 0, hi = entries.size();
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const Entry& e = entries[mid];
      const std::uint32_t a = core.source(e), b = core.target(e);
      if (global.compare(T(core.xs_[b] - core.xs_[a]), T(core.ys_[b] - core.ys_[a]), order_.rx, order_.ry) < 0)
        lo = mid + 1;
      else
        hi = mid;
    }
    first_ = lo == entries.size() ? 0 : lo;
    const double rho = t.value_sq.to_double();
    if (std::isfinite(rho) && rho > 1e-30 && rho < 1e30) {
      surely_below_ = static_cast<float>(rho * (1 - 1e-5));
      surely_above_ = static_cast<float>(rho * (1 + 1e-5));
    }
  }

  std::size_t first() const { return first_; }

  bool valid(const Entry& e) const {
    if (e.cap < surely_below_) return true;
    if (e.cap > surely_above_) return false;
    return valid_exact(core_.source(e), core_.target(e));
  }

  bool valid_exact(std::size_t a, std::size_t b) const {
    const T dx = core_.xs_[b] - core_.xs_[a];
    const T dy = core_.ys_[b] - core_.ys_[a];
    const std::size_t v = A::extremal(core_.idx_, dy, T(-dx));
    const W cap = W(core_.hx_[v] - core_.xs_[a]) * dy - W(core_.hy_[v] - core_.ys_[a]) * dx;
    if (cap <= 0) return true;
    return accepts(A::compare_square(cap, W(dx) * dx + W(dy) * dy, rho_), mode_);
  }

  /// Advances p's reset cursor up to (not including) direction (ex, ey).
  /// Returns true if any reset direction was crossed.
  bool advance(std::size_t p, const T& ex, const T& ey) {
    ensure(p);
    bool crossed = false;
    while (cursor_[p] < end_[p]) {
      const std::size_t v = pool_[cursor_[p]];
      const T zx = core_.ys_[p] - core_.hy_[v];
      const T zy = core_.hx_[v] - core_.xs_[p];
      if (order_.compare(zx, zy, ex, ey) >= 0) break;
      ++cursor_[p];
      crossed = true;
    }
    return crossed;
  }

  /// True when p has no reset direction left ahead of the last advance.
  bool exhausted(std::size_t p) const { return cursor_[p] == end_[p]; }

 private:
  void ensure(std::size_t p) {
    if (ready_[p]) return;
    ready_[p] = 1;
    const std::size_t begin = pool_.size();
    const std::size_t h = core_.hull_.size();
    std::size_t lowest = 0;
    for (std::size_t v = 0; v < h; ++v) {
      if (accepts(A::compare_value(core_.dist2(p, v), rho_), mode_)) continue;
      pool_.push_back(static_cast<std::uint32_t>(v));
      if (pool_.size() - begin > 1 && before(p, v, pool_[begin + lowest])) lowest = pool_.size() - 1 - begin;
    }
    std::rotate(pool_.begin() + begin, pool_.begin() + begin + lowest, pool_.end());
    offset_[p] = cursor_[p] = static_cast<std::uint32_t>(begin);
    end_[p] = static_cast<std::uint32_t>(pool_.size());
  }

  bool before(std::size_t p, std::size_t v1, std::size_t v2) const {
    return order_.compare(T(core_.ys_[p] - core_.hy_[v1]), T(core_.hx_[v1] - core_.xs_[p]),
                          T(core_.ys_[p] - core_.hy_[v2]), T(core_.hx_[v2] - core_.xs_[p])) < 0;
  }

  const SweepCore& core_;
  const SquaredDistance& rho_;
  ThresholdMode mode_;
  float surely_below_ = 0.0f;
  float surely_above_ = std::numeric_limits<float>::infinity();
  detail::AngularOrder<T, W> order_;
  std::size_t first_ = 0;
  std::vector<std::uint32_t> pool_;
  std::vector<std::uint32_t> offset_, end_, cursor_;
  std::vector<std::uint8_t> ready_;
};

// Bitset reachability: row p holds, for each edge count j, the starts that can reach p
// with a valid walk of j edges since p's last reset. Once a cycle of length m is certain,
// only walks that could close with fewer edges are tracked.
template <class A>
class SweepCore<A>::ReachTracker {
 public:
  using Word = std::uint64_t;

  ReachTracker(std::size_t n, std::size_t layers, const std::vector<std::size_t>& starts)
      : layers_(layers),
        limit_(layers),
        words_((starts.size() + 63) / 64),
        bits_(n * layers * words_, 0),
        active_(n, 0),
        start_bit_(n, -1) {
    for (std::size_t i = 0; i < starts.size(); ++i) {
      const std::size_t s = starts[i];
      start_bit_[s] = static_cast<std::int64_t>(i);
      row(s)[i / 64] |= Word{1} << (i % 64);
      active_[s] = 1;
    }
  }

  std::size_t row_size() const { return layers_ * words_; }
  Word* row(std::size_t p) { return bits_.data() + p * row_size(); }
  bool active(std::size_t p) const { return active_[p] != 0; }

  void reset(std::size_t p) {
    std::fill_n(row(p), row_size(), Word{0});
    active_[p] = 0;
  }

  /// Extends walks at `from` by one edge into b; returns the shortest cycle closed at b, or 0.
  std::uint32_t transfer(const Word* from, std::size_t b) {
    Word* to = row(b);
    const std::int64_t sb = start_bit_[b];
    std::uint32_t closed = 0;
    bool wrote = false;
    for (std::size_t j = 0; j < limit_; ++j) {
      const Word* src = from + j * words_;
      bool any = false;
      for (std::size_t w = 0; w < words_; ++w) any = any || src[w] != 0;
      if (!any) continue;
      if (closed == 0 && sb >= 0 && ((src[sb / 64] >> (sb % 64)) & 1)) closed = static_cast<std::uint32_t>(j + 1);
      if (j + 1 < limit_) {
        Word* dst = to + (j + 1) * words_;
        for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w];
        wrote = true;
      }
    }
    if (wrote) active_[b] = 1;
    return closed;
  }

  void accept(std::size_t s, std::uint32_t length) {
    if (length >= best_) return;
    best_ = length;
    start_ = s;
    limit_ = length - 1;
  }

  bool done() const { return best_ <= 2; }
  std::uint32_t best() const { return best_; }
  std::size_t start() const { return start_; }

 private:
  std::size_t layers_;
  std::size_t limit_;
  std::size_t words_;
  std::vector<Word> bits_;
  std::vector<std::uint8_t> active_;
  std::vector<std::int64_t> start_bit_;
  std::uint32_t best_ = kUnreached;
  std::size_t start_ = 0;
};

// Single-start walk recording predecessor links, to recover one optimal cycle.
template <class A>
class SweepCore<A>::PathTracker {
 public:
  using Word = std::int32_t;

  PathTracker(std::size_t n, std::size_t layers, std::size_t start)
      : layers_(layers), start_(start), slots_(n * layers, -1), active_(n, 0) {
    nodes_.push_back({static_cast<std::uint32_t>(start), -1});
    slots_[start * layers_] = 0;
    active_[start] = 1;
  }

  std::size_t row_size() const { return layers_; }
  Word* row(std::size_t p) { return slots_.data() + p * layers_; }
  bool active(std::size_t p) const { return active_[p] != 0; }

  void reset(std::size_t p) {
    std::fill_n(row(p), layers_, -1);
    active_[p] = 0;
  }

  std::uint32_t transfer(const Word* from, std::size_t b) {
    Word* to = row(b);
    std::uint32_t closed = 0;
    for (std::size_t j = 0; j < layers_; ++j) {
      if (from[j] < 0) continue;
      if (b == start_ && j + 1 == layers_) {
        pending_ = from[j];
        closed = static_cast<std::uint32_t>(layers_);
      }
      if (j + 1 < layers_ && to[j + 1] < 0) {
        to[j + 1] = static_cast<Word>(nodes_.size());
        nodes_.push_back({static_cast<std::uint32_t>(b), from[j]});
        active_[b] = 1;
      }
    }
    return closed;
  }

  void accept(std::size_t, std::uint32_t) { closing_ = pending_; }
  bool done() const { return closing_ >= 0; }

  std::vector<std::size_t> cycle() const {
    std::vector<std::size_t> out;
    for (std::int32_t node = closing_; node >= 0; node = nodes_[node].second) out.push_back(nodes_[node].first);
    return out;
  }

 private:
  std::size_t layers_;
  std::size_t start_;
  std::vector<Word> slots_;
  std::vector<std::uint8_t> active_;
  std::vector<std::pair<std::uint32_t, std::int32_t>> nodes_;
  std::int32_t pending_ = -1;
  std::int32_t closing_ = -1;
};

template <class A>
template <class Tracker>
void SweepCore<A>::sweep(Pass& pass, Tracker& tracker) const {
  using Word = typename Tracker::Word;
  const std::size_t total = entries_.size();
  const std::size_t width = tracker.row_size();
  const std::size_t first = pass.first();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> batch;
  std::vector<Word> snapshots;

  const auto direction = [&](const Entry& e) {
    return std::pair<T, T>(T(xs_[target(e)] - xs_[source(e)]), T(ys_[target(e)] - ys_[source(e)]));
  };

  // Entries first..total-1 then 0..first-1; entry 0 always opens a group.
  for (std::size_t part = 0; part < 2; ++part) {
    const std::size_t begin = part == 0 ? first : 0;
    const std::size_t end = part == 0 ? total : first;
    for (std::size_t i = begin; i < end;) {
      std::size_t stop = i + 1;
      while (stop < end && continues_group(entries_[stop])) ++stop;
      if (stop == i + 1) {
        const Entry& e = entries_[i];
        const std::uint32_t a = source(e), b = target(e);
        if (tracker.active(a) && pass.valid(e)) {
          const auto [ex, ey] = direction(e);
          if (pass.advance(a, ex, ey)) tracker.reset(a);
          if (tracker.active(a)) {
            if (pass.advance(b, ex, ey)) tracker.reset(b);
            const std::uint32_t closed = tracker.transfer(tracker.row(a), b);
            if (closed && pass.exhausted(b)) {
              tracker.accept(b, closed);
              if (tracker.done()) return;
            }
          }
        }
      } else {
        batch.clear();
        snapshots.clear();
        const auto [ex, ey] = direction(entries_[i]);
        for (std::size_t g = i; g < stop; ++g) {
          const Entry& e = entries_[g];
          const std::uint32_t a = source(e), b = target(e);
          if (!tracker.active(a) || !pass.valid(e)) continue;
          if (pass.advance(a, ex, ey)) tracker.reset(a);
          if (!tracker.active(a)) continue;
          batch.emplace_back(a, b);
          snapshots.insert(snapshots.end(), tracker.row(a), tracker.row(a) + width);
        }
        for (std::size_t q = 0; q < batch.size(); ++q) {
          const std::uint32_t b = batch[q].second;
          if (pass.advance(b, ex, ey)) tracker.reset(b);
          const std::uint32_t closed = tracker.transfer(snapshots.data() + q * width, b);
          if (closed && pass.exhausted(b)) {
            tracker.accept(b, closed);
            if (tracker.done()) return;
          }
        }
      }
      i = stop;
    }
  }
}

template <class A>
DeciderVerdict SweepCore<A>::decide(const Threshold& t, std::size_t k) const {
  const SquaredDistance& rho = t.value_sq;
  const std::size_t h = hull_.size();
  if (rho.is_zero()) {
    if (t.mode == ThresholdMode::Open || h > k) return DeciderVerdict::exceeds();
    return DeciderVerdict::found(hull_);
  }

  for (std::size_t p = 0; p < n_; ++p) {
    bool covers = true;
    for (std::size_t v = 0; v < h && covers; ++v) covers = accepts(A::compare_value(dist2(p, v), rho), t.mode);
    if (covers) return DeciderVerdict::found({p});
  }
  if (k < 2) return DeciderVerdict::exceeds();
  const std::size_t layers = std::min(k, h);

  // Reference direction: the candidate tangent direction admitting the fewest starts.
  // Every feasible cycle has a vertex whose turning range contains it.
  std::vector<std::size_t> starts;
  T best_rx = T(1), best_ry = T(0);
  std::size_t best_count = n_ + 1;
  for (std::size_t v = 0; v < h && best_count > 0; ++v) {
    const std::size_t prev = (v + h - 1) % h, next = (v + 1) % h;
    const T ox = hx_[next] - hx_[v], oy = hy_[next] - hy_[v];
    const T ix = hx_[v] - hx_[prev], iy = hy_[v] - hy_[prev];
    const T cand[2][2] = {{ox, oy}, {T(ox + ix), T(oy + iy)}};
    for (const auto& c : cand) {
      const T& rx = c[0];
      const T& ry = c[1];
      if (rx == 0 && ry == 0) continue;
      const W len = W(rx) * rx + W(ry) * ry;
      std::size_t count = 0;
      for (std::size_t s = 0; s < n_ && count < best_count; ++s) {
        const W cap = W(hx_[v] - xs_[s]) * ry - W(hy_[v] - ys_[s]) * rx;
        if (cap <= 0 || accepts(A::compare_square(cap, len, rho), t.mode)) ++count;
      }
      if (count < best_count) {
        best_count = count;
        best_rx = rx;
        best_ry = ry;
      }
    }
  }
  if (best_count == 0) return DeciderVerdict::exceeds();
  {
    const W len = W(best_rx) * best_rx + W(best_ry) * best_ry;
    const std::size_t anchor = A::extremal(idx_, best_ry, T(-best_rx));
    for (std::size_t s = 0; s < n_; ++s) {
      const W cap = W(hx_[anchor] - xs_[s]) * best_ry - W(hy_[anchor] - ys_[s]) * best_rx;
      if (cap <= 0 || accepts(A::compare_square(cap, len, rho), t.mode)) starts.push_back(s);
    }
  }

  // A closing walk is final exactly when the start has no reset direction left: any
  // remaining one would fall inside the start's turning range.
  std::uint32_t m = kUnreached;
  std::size_t chosen = 0;
  {
    Pass pass(*this, t, best_rx, best_ry);
    ReachTracker reach(n_, layers, starts);
    sweep(pass, reach);
    m = reach.best();
    chosen = reach.start();
  }
  if (m == kUnreached) return DeciderVerdict::exceeds();

  Pass pass(*this, t, best_rx, best_ry);
  PathTracker path(n_, m, chosen);
  sweep(pass, path);
  std::vector<std::size_t> cycle = path.cycle();
  if (cycle.size() != m) throw InvariantViolation("sweep decider lost its witness cycle");
  return DeciderVerdict::found(std::move(cycle));
}

}  // namespace

struct SweepDecider::Impl {
  explicit Impl(const PointSet& P) : points(P), index(P) {
    if (P.size() > kMaxPoints) throw std::invalid_argument("point set too large for the sweep decider");
    if (P.compact()) core.template emplace<SweepCore<CompactArith>>(points, index);
    else core.template emplace<SweepCore<BigArith>>(points, index);
  }

  PointSet points;
  ExtremalIndex index;
  std::variant<std::monostate, SweepCore<CompactArith>, SweepCore<BigArith>> core;
};

SweepDecider::SweepDecider(const PointSet& P) : impl_(std::make_unique<Impl>(P)) {}
SweepDecider::~SweepDecider() = default;
SweepDecider::SweepDecider(SweepDecider&&) noexcept = default;
SweepDecider& SweepDecider::operator=(SweepDecider&&) noexcept = default;

const PointSet& SweepDecider::points() const { return impl_->points; }

DeciderVerdict SweepDecider::decide(const Threshold& t, std::size_t k) const {
  if (k == 0) throw std::invalid_argument("k must be positive");
  return std::visit(
      [&](const auto& core) -> DeciderVerdict {
        if constexpr (std::is_same_v<std::decay_t<decltype(core)>, std::monostate>) {
          throw std::logic_error("sweep decider is not initialized");
        } else {
          return core.decide(t, k);
        }
      },
      impl_->core);
}

DeciderVerdict CheckedDecider::decide(const Threshold& t, std::size_t k) const {
  DeciderVerdict v = inner_.decide(t, k);
  if (!v.feasible) return v;
  if (v.kopt > k || v.subset.size() != v.kopt)
    throw InvariantViolation("decider returned a subset larger than k");
  const HausdorffResult r = hausdorff_sq(inner_.points(), v.subset);
  if (!satisfies(r.value_sq, t)) throw InvariantViolation("decider returned a subset that misses the threshold");
  return v;
}

DeciderVerdict decide(const PointSet& P, const Threshold& t, std::size_t k) {
  return SweepDecider(P).decide(t, k);
}

}  // namespace hb
