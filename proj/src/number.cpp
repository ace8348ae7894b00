#include "hb/number.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hb {

namespace {

const Integer& u128_max() {
  static const Integer value = to_integer(~u128{0});
  return value;
}

}  // namespace

Integer to_integer(i128 v) { return Integer(v); }

Integer to_integer(u128 v) { return Integer(v); }

std::optional<u128> to_u128(const Integer& v) {
  if (v.sign() < 0 || v > u128_max()) return std::nullopt;
  return static_cast<u128>(v);
}

std::optional<std::int64_t> to_i64(const Integer& v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
    return std::nullopt;
  return static_cast<std::int64_t>(v);
}

double to_double(const Integer& v) { return v.convert_to<double>(); }

std::optional<Integer> parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) return std::nullopt;
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') return std::nullopt;
    value *= 10;
    value += c - '0';
  }
  if (negative) value = -value;
  return value;
}

SquaredDistance::SquaredDistance() : num_(0), den_(1) {}

SquaredDistance::SquaredDistance(Integer value) : num_(std::move(value)), den_(1) {
  if (num_.sign() < 0) throw std::invalid_argument("squared distance must be non-negative");
  refresh_wide();
}

SquaredDistance::SquaredDistance(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.sign() <= 0) throw std::invalid_argument("denominator must be positive");
  if (num_.sign() < 0) throw std::invalid_argument("squared distance must be non-negative");
  if (num_.is_zero()) {
    den_ = 1;
  } else {
    const Integer g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  refresh_wide();
}

SquaredDistance SquaredDistance::from_wide(u128 numerator, u128 denominator) {
  if (denominator == 0) throw std::invalid_argument("denominator must be positive");
  SquaredDistance out;
  if (numerator == 0) return out;
  const u128 g = detail::gcd_wide(numerator, denominator);
  out.wide_num_ = numerator / g;
  out.wide_den_ = denominator / g;
  out.num_ = to_integer(out.wide_num_);
  out.den_ = to_integer(out.wide_den_);
  out.wide_ = true;
  return out;
}

SquaredDistance SquaredDistance::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = parse_integer(text.substr(0, slash));
  if (!num) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Integer den = 1;
  if (slash != std::string_view::npos) {
    const auto d = parse_integer(text.substr(slash + 1));
    if (!d) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    den = *d;
  }
  return SquaredDistance(*num, den);
}

void SquaredDistance::refresh_wide() {
  const auto n = to_u128(num_);
  const auto d = to_u128(den_);
  wide_ = n.has_value() && d.has_value();
  wide_num_ = wide_ ? *n : 0;
  wide_den_ = wide_ ? *d : 1;
}

double SquaredDistance::to_double() const {
  if (den_ == 1) return hb::to_double(num_);
  using Float = boost::multiprecision::cpp_bin_float_double;
  return static_cast<double>(Float(num_) / Float(den_));
}

std::string SquaredDistance::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::strong_ordering operator<=>(const SquaredDistance& a, const SquaredDistance& b) {
  int s;
  if (a.wide_ && b.wide_) {
    s = detail::compare_ratio(a.wide_num_, a.wide_den_, b.wide_num_, b.wide_den_);
  } else {
    const Integer lhs = a.num_ * b.den_;
    const Integer rhs = b.num_ * a.den_;
    s = lhs.compare(rhs);
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const SquaredDistance& a, const SquaredDistance& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

SquaredDistance midpoint(const SquaredDistance& a, const SquaredDistance& b) {
  return SquaredDistance(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                         2 * a.denominator() * b.denominator());
}

int compare_ratio(u128 num, u128 den, const SquaredDistance& value) {
  if (value.has_wide())
    return detail::compare_ratio(num, den, value.wide_numerator(), value.wide_denominator());
  return compare_ratio(to_integer(num), to_integer(den), value);
}

int compare_ratio(const Integer& num, const Integer& den, const SquaredDistance& value) {
  const Integer lhs = num * value.denominator();
  const Integer rhs = value.numerator() * den;
  return lhs.compare(rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
}

std::ostream& operator<<(std::ostream& os, const SquaredDistance& v) { return os << v.to_string(); }

}  // namespace hb
