#include "tfaest/time.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace tfaest {

TimePoint::TimePoint(std::int64_t integer) : value_(integer) {
  if (integer < 0)
    throw std::invalid_argument("negative time point");
}

TimePoint::TimePoint(Rational value) : value_(value) {
  if (value_ < 0)
    throw std::invalid_argument("negative time point");
}

TimePoint TimePoint::parse(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("empty time value");

  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  bool seen_dot = false;
  bool seen_digit = false;
  bool trailing_digit = false;
  constexpr std::int64_t limit = std::numeric_limits<std::int64_t>::max() / 10;

  for (char c : text) {
    if (c == '.') {
      if (seen_dot || !seen_digit)
        throw std::invalid_argument("malformed time value: " + std::string(text));
      seen_dot = true;
      trailing_digit = false;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed time value: " + std::string(text));
    if (numerator > limit || denominator > limit)
      throw std::invalid_argument("time value out of range: " + std::string(text));
    seen_digit = true;
    trailing_digit = true;
    numerator = numerator * 10 + (c - '0');
    if (seen_dot)
      denominator *= 10;
  }
  if (!trailing_digit)
    throw std::invalid_argument("malformed time value: " + std::string(text));
  return TimePoint(Rational(numerator, denominator));
}

std::int64_t TimePoint::floor() const {
  return value_.numerator() / value_.denominator();
}

std::int64_t TimePoint::ceil() const {
  auto q = floor();
  return is_integer() ? q : q + 1;
}

std::string TimePoint::to_string() const {
  std::int64_t den = value_.denominator();
  std::int64_t rest = den;
  while (rest % 2 == 0)
    rest /= 2;
  while (rest % 5 == 0)
    rest /= 5;
  if (rest != 1)
    return std::to_string(value_.numerator()) + "/" + std::to_string(den);

  std::string out = std::to_string(floor()) + ".";
  std::int64_t frac = value_.numerator() % den;
  if (frac == 0)
    return out + "0";
  while (frac != 0) {
    frac *= 10;
    out.push_back(static_cast<char>('0' + frac / den));
    frac %= den;
  }
  return out;
}

TimePoint operator-(const TimePoint &a, const TimePoint &b) {
  if (b.value_ > a.value_)
    throw std::invalid_argument("time difference would be negative");
  return TimePoint(a.value_ - b.value_);
}

std::ostream &operator<<(std::ostream &os, const TimePoint &t) {
  return os << t.to_string();
}

} // namespace tfaest
