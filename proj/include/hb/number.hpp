#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "hb/detail/wide.hpp"

namespace hb {

using Integer = boost::multiprecision::cpp_int;

Integer to_integer(i128 v);
Integer to_integer(u128 v);
std::optional<u128> to_u128(const Integer& v);
std::optional<std::int64_t> to_i64(const Integer& v);
double to_double(const Integer& v);

// Parses an optionally signed decimal integer. Returns nullopt on any malformed input.
std::optional<Integer> parse_integer(std::string_view text);

/// Non-negative rational in lowest terms; the comparison currency for every
/// squared distance, critical value and threshold.
class SquaredDistance {
 public:
  SquaredDistance();
  explicit SquaredDistance(Integer value);
  SquaredDistance(Integer numerator, Integer denominator);

  static SquaredDistance from_wide(u128 numerator, u128 denominator);
  static SquaredDistance parse(std::string_view text);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Present when both terms fit in 128 unsigned bits.
  bool has_wide() const { return wide_; }
  u128 wide_numerator() const { return wide_num_; }
  u128 wide_denominator() const { return wide_den_; }

  double to_double() const;
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const SquaredDistance& a, const SquaredDistance& b);
  friend bool operator==(const SquaredDistance& a, const SquaredDistance& b);

 private:
  void refresh_wide();

  Integer num_;
  Integer den_;
  bool wide_ = true;
  u128 wide_num_ = 0;
  u128 wide_den_ = 1;
};

/// Exact value strictly between a and b (their arithmetic mean).
SquaredDistance midpoint(const SquaredDistance& a, const SquaredDistance& b);

/// Sign of num/den - value, with den > 0.
int compare_ratio(u128 num, u128 den, const SquaredDistance& value);
int compare_ratio(const Integer& num, const Integer& den, const SquaredDistance& value);

std::ostream& operator<<(std::ostream& os, const SquaredDistance& v);

}  // namespace hb
