#pragma once

namespace hb::detail {

/// Counterclockwise angular position relative to a reference direction (rx, ry),
/// measured in [0, 2pi). T is the coordinate type, W a type wide enough for products.
template <class T, class W>
struct AngularOrder {
  T rx;
  T ry;

  int half(const T& x, const T& y) const {
    const W c = W(rx) * y - W(ry) * x;
    if (c > 0) return 0;
    if (c < 0) return 1;
    return (W(rx) * x + W(ry) * y) > 0 ? 0 : 1;
  }

  /// -1, 0 or +1 as (x1, y1) comes before, together with, or after (x2, y2).
  int compare(const T& x1, const T& y1, const T& x2, const T& y2) const {
    const int h1 = half(x1, y1);
    const int h2 = half(x2, y2);
    if (h1 != h2) return h1 < h2 ? -1 : 1;
    const W c = W(x1) * y2 - W(y1) * x2;
    return c > 0 ? -1 : (c < 0 ? 1 : 0);
  }
};

}  // namespace hb::detail
