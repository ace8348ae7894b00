#pragma once

#include <cstdint>

namespace hb {

using i128 = __int128;
using u128 = unsigned __int128;

namespace detail {

struct U256 {
  u128 hi;
  u128 lo;
};

inline U256 mul_wide(u128 a, u128 b) {
  const std::uint64_t a0 = static_cast<std::uint64_t>(a);
  const std::uint64_t a1 = static_cast<std::uint64_t>(a >> 64);
  const std::uint64_t b0 = static_cast<std::uint64_t>(b);
  const std::uint64_t b1 = static_cast<std::uint64_t>(b >> 64);
  const u128 p00 = static_cast<u128>(a0) * b0;
  const u128 p01 = static_cast<u128>(a0) * b1;
  const u128 p10 = static_cast<u128>(a1) * b0;
  const u128 p11 = static_cast<u128>(a1) * b1;
  const u128 mid = (p00 >> 64) + static_cast<std::uint64_t>(p01) + static_cast<std::uint64_t>(p10);
  U256 r;
  r.lo = (mid << 64) | static_cast<std::uint64_t>(p00);
  r.hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return r;
}

// Sign of a*b - c*d, exact for all unsigned 128-bit operands.
inline int compare_products(u128 a, u128 b, u128 c, u128 d) {
  const U256 x = mul_wide(a, b);
  const U256 y = mul_wide(c, d);
  if (x.hi != y.hi) return x.hi < y.hi ? -1 : 1;
  if (x.lo != y.lo) return x.lo < y.lo ? -1 : 1;
  return 0;
}

// Sign of n1/d1 - n2/d2 for positive denominators.
inline int compare_ratio(u128 n1, u128 d1, u128 n2, u128 d2) {
  return compare_products(n1, d2, n2, d1);
}

// Unreduced non-negative ratio num/den with den > 0.
struct WideRatio {
  u128 num;
  u128 den;
};

inline int compare(const WideRatio& a, const WideRatio& b) { return compare_ratio(a.num, a.den, b.num, b.den); }

inline double approx(const WideRatio& r) { return static_cast<double>(r.num) / static_cast<double>(r.den); }

inline u128 abs_wide(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

inline u128 gcd_wide(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Coordinates within this bound keep differences below 2^30. Cross and dot products
// of such vectors, or of a difference with a sum of two differences, stay below 2^62
// and their squares fit in 128 bits.
inline constexpr std::int64_t kCompactBound = std::int64_t{1} << 29;

}  // namespace detail
}  // namespace hb
