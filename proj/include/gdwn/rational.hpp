#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "gdwn/error.hpp"

namespace gdwn {

/// Exact non-negative-denominator rational, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const auto g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  /// "3/2", "2" or "0.25" (finite decimals only).
  static Rational parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return static_cast<__int128>(x.num_) * y.den_ <=> static_cast<__int128>(y.num_) * x.den_;
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return from128(static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_,
                   static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return from128(static_cast<__int128>(x.num_) * y.den_ - static_cast<__int128>(y.num_) * x.den_,
                   static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator*(const Rational& x, std::int64_t k) {
    return from128(static_cast<__int128>(x.num_) * k, x.den_);
  }

  /// floor(x / step) for step > 0.
  static std::int64_t floor_div(const Rational& x, const Rational& step);

 private:
  static Rational from128(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace gdwn
