#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "tfaest/time.hpp"

namespace tfaest {

enum class Openness : std::uint8_t { Closed, Open };

/// One endpoint of an Interval: a non-negative integer or +infinity.
/// Infinity is always open.
class Bound {
public:
  static Bound closed(std::int64_t value) { return Bound(value, Openness::Closed); }
  static Bound open(std::int64_t value) { return Bound(value, Openness::Open); }
  static Bound infinity() {
    Bound b(0, Openness::Open);
    b.infinite_ = true;
    return b;
  }
  static Bound make(std::int64_t value, Openness openness) {
    return Bound(value, openness);
  }

  bool is_infinite() const { return infinite_; }
  bool is_open() const { return openness_ == Openness::Open; }
  bool is_closed() const { return openness_ == Openness::Closed; }
  Openness openness() const { return openness_; }
  /// Only meaningful for finite bounds.
  std::int64_t value() const { return value_; }

  friend bool operator==(const Bound &, const Bound &) = default;

private:
  Bound(std::int64_t value, Openness openness);

  std::int64_t value_ = 0;
  Openness openness_ = Openness::Closed;
  bool infinite_ = false;
};

/// A nonempty interval of the non-negative time axis with integer (or
/// infinite upper) endpoints, each independently open or closed.
///
/// Empty intervals are unrepresentable: the constructor throws
/// std::invalid_argument, and operations whose result may be empty return
/// std::optional.
class Interval {
public:
  Interval(Bound lower, Bound upper);

  /// nullopt if the bounds describe an empty set.
  static std::optional<Interval> make(Bound lower, Bound upper);

  static Interval closed(std::int64_t a, std::int64_t b) {
    return {Bound::closed(a), Bound::closed(b)};
  }
  static Interval open(std::int64_t a, std::int64_t b) {
    return {Bound::open(a), Bound::open(b)};
  }
  /// (a,b]
  static Interval left_open(std::int64_t a, std::int64_t b) {
    return {Bound::open(a), Bound::closed(b)};
  }
  /// [a,b)
  static Interval right_open(std::int64_t a, std::int64_t b) {
    return {Bound::closed(a), Bound::open(b)};
  }
  static Interval point(std::int64_t k) { return closed(k, k); }
  /// (k,inf)
  static Interval above(std::int64_t k) { return {Bound::open(k), Bound::infinity()}; }
  /// [k,inf)
  static Interval at_least(std::int64_t k) { return {Bound::closed(k), Bound::infinity()}; }

  /// Parses `[a,b]`, `(a,b)`, `[a,b)`, `(a,b]`, `(a,inf)`, `[a,inf)`.
  static Interval parse(std::string_view text);

  const Bound &lower() const { return lower_; }
  const Bound &upper() const { return upper_; }

  bool is_bounded() const { return !upper_.is_infinite(); }
  bool is_point() const;
  /// Closed on both sides and bounded (a member of the closed-interval set).
  bool is_closed() const { return lower_.is_closed() && upper_.is_closed(); }

  std::string to_string() const;

  friend bool operator==(const Interval &, const Interval &) = default;
  /// Orders by lower bound position on the axis, then by upper bound.
  friend std::strong_ordering operator<=>(const Interval &a, const Interval &b);

private:
  Bound lower_;
  Bound upper_;
};

std::ostream &operator<<(std::ostream &os, const Interval &i);

/// {t1 + t2 | t1 in a, t2 in b}.
Interval add(const Interval &a, const Interval &b);

/// {|t1 - t2| | t1 in a, t2 in b}.
Interval distance(const Interval &a, const Interval &b);

bool contains(const Interval &a, const TimePoint &t);

/// Every point of a lies in b.
bool subset(const Interval &a, const Interval &b);

std::optional<Interval> intersect(const Interval &a, const Interval &b);

/// Replaces an upper bound above `ceiling` by `ceiling+1]`. Membership of
/// every t <= ceiling is preserved. An interval lying entirely above the
/// ceiling collapses to [ceiling+1, ceiling+1].
Interval cap_upper(const Interval &a, std::int64_t ceiling);

} // namespace tfaest
