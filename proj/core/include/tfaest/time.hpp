#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace tfaest {

using Rational = boost::rational<std::int64_t>;

/// An exact non-negative instant or duration on the time axis.
///
/// Values are parsed from decimal text ("2", "0.5", "3.125") and kept as
/// exact rationals, so membership at integer boundaries is never subject to
/// rounding.
class TimePoint {
public:
  TimePoint() = default;
  TimePoint(std::int64_t integer); // NOLINT(google-explicit-constructor)
  explicit TimePoint(Rational value);

  /// Parses `digits[.digits]`. Throws std::invalid_argument on anything else.
  static TimePoint parse(std::string_view text);

  const Rational &value() const { return value_; }
  bool is_integer() const { return value_.denominator() == 1; }

  /// Smallest integer >= this.
  std::int64_t ceil() const;
  /// Largest integer <= this.
  std::int64_t floor() const;

  /// Decimal text with at least one fractional digit ("1.0", "0.25");
  /// falls back to "p/q" for non-terminating expansions.
  std::string to_string() const;

  friend TimePoint operator+(const TimePoint &a, const TimePoint &b) {
    return TimePoint(a.value_ + b.value_);
  }
  /// Throws std::invalid_argument if b > a.
  friend TimePoint operator-(const TimePoint &a, const TimePoint &b);

  friend bool operator==(const TimePoint &a, const TimePoint &b) = default;
  friend std::strong_ordering operator<=>(const TimePoint &a,
                                          const TimePoint &b) {
    if (a.value_ < b.value_)
      return std::strong_ordering::less;
    if (b.value_ < a.value_)
      return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  Rational value_{0};
};

std::ostream &operator<<(std::ostream &os, const TimePoint &t);

} // namespace tfaest
