#include "gdwn/rational.hpp"

#include <charconv>
#include <limits>

namespace gdwn {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  return v;
}

}  // namespace

Rational Rational::from128(__int128 num, __int128 den) {
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  if (num > kMax || num < -kMax || den > kMax) throw Error(ErrorCode::Overflow, "rational overflow");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

Rational Rational::parse(const std::string& text) {
  if (const auto slash = text.find('/'); slash != std::string::npos)
    return Rational(parse_int(std::string_view(text).substr(0, slash)),
                    parse_int(std::string_view(text).substr(slash + 1)));
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const auto frac_len = text.size() - dot - 1;
    if (frac_len > 17) throw Error(ErrorCode::ParseError, "too many decimals: '" + text + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(parse_int(digits), den);
  }
  return Rational(parse_int(text));
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t Rational::floor_div(const Rational& x, const Rational& step) {
  // x / step = (xn * sd) / (xd * sn)
  const __int128 num = static_cast<__int128>(x.num_) * step.den_;
  const __int128 den = static_cast<__int128>(x.den_) * step.num_;
  __int128 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return static_cast<std::int64_t>(q);
}

}  // namespace gdwn
