#include "tfaest/interval.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace tfaest {

namespace {

// Position of a lower bound on the axis: [k sorts before (k.
std::tuple<std::int64_t, int> lower_key(const Bound &b) {
  return {b.value(), b.is_open() ? 1 : 0};
}

// Position of an upper bound: k) before k] before +inf.
std::tuple<int, std::int64_t, int> upper_key(const Bound &b) {
  if (b.is_infinite())
    return {1, 0, 0};
  return {0, b.value(), b.is_closed() ? 1 : 0};
}

bool nonempty(const Bound &lower, const Bound &upper) {
  if (upper.is_infinite())
    return true;
  if (lower.value() < upper.value())
    return true;
  return lower.value() == upper.value() && lower.is_closed() && upper.is_closed();
}

Openness either_open(const Bound &a, const Bound &b) {
  return (a.is_open() || b.is_open()) ? Openness::Open : Openness::Closed;
}

const Bound &max_upper(const Bound &a, const Bound &b) {
  return upper_key(a) >= upper_key(b) ? a : b;
}

std::int64_t parse_integer(std::string_view s) {
  if (s.empty())
    throw std::invalid_argument("missing interval endpoint");
  std::int64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("interval endpoints must be non-negative integers: " +
                                  std::string(s));
    v = v * 10 + (c - '0');
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

Bound::Bound(std::int64_t value, Openness openness)
    : value_(value), openness_(openness) {
  if (value < 0)
    throw std::invalid_argument("interval endpoints must be non-negative");
}

Interval::Interval(Bound lower, Bound upper) : lower_(lower), upper_(upper) {
  if (lower_.is_infinite())
    throw std::invalid_argument("lower bound cannot be infinite");
  if (!nonempty(lower_, upper_))
    throw std::invalid_argument("empty interval");
}

std::optional<Interval> Interval::make(Bound lower, Bound upper) {
  if (lower.is_infinite() || !nonempty(lower, upper))
    return std::nullopt;
  return Interval(lower, upper);
}

bool Interval::is_point() const {
  return is_bounded() && lower_.value() == upper_.value();
}

Interval Interval::parse(std::string_view text) {
  auto s = trim(text);
  if (s.size() < 5)
    throw std::invalid_argument("malformed interval: " + std::string(text));
  char open_c = s.front();
  char close_c = s.back();
  if ((open_c != '[' && open_c != '(') || (close_c != ']' && close_c != ')'))
    throw std::invalid_argument("malformed interval: " + std::string(text));
  auto body = s.substr(1, s.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos)
    throw std::invalid_argument("malformed interval: " + std::string(text));

  auto lo_text = trim(body.substr(0, comma));
  auto hi_text = trim(body.substr(comma + 1));

  Bound lower = Bound::make(parse_integer(lo_text),
                            open_c == '(' ? Openness::Open : Openness::Closed);
  Bound upper = Bound::infinity();
  if (hi_text == "inf" || hi_text == "+inf") {
    if (close_c != ')')
      throw std::invalid_argument("infinite upper bound must be open: " + std::string(text));
  } else {
    upper = Bound::make(parse_integer(hi_text),
                        close_c == ')' ? Openness::Open : Openness::Closed);
  }
  auto result = make(lower, upper);
  if (!result)
    throw std::invalid_argument("empty interval: " + std::string(text));
  return *result;
}

std::string Interval::to_string() const {
  std::string out;
  out += lower_.is_open() ? '(' : '[';
  out += std::to_string(lower_.value());
  out += ',';
  if (upper_.is_infinite()) {
    out += "inf)";
  } else {
    out += std::to_string(upper_.value());
    out += upper_.is_open() ? ')' : ']';
  }
  return out;
}

std::strong_ordering operator<=>(const Interval &a, const Interval &b) {
  if (auto c = lower_key(a.lower_) <=> lower_key(b.lower_); c != 0)
    return c;
  return upper_key(a.upper_) <=> upper_key(b.upper_);
}

std::ostream &operator<<(std::ostream &os, const Interval &i) {
  return os << i.to_string();
}

Interval add(const Interval &a, const Interval &b) {
  Bound lower = Bound::make(a.lower().value() + b.lower().value(),
                            either_open(a.lower(), b.lower()));
  Bound upper = Bound::infinity();
  if (a.is_bounded() && b.is_bounded())
    upper = Bound::make(a.upper().value() + b.upper().value(),
                        either_open(a.upper(), b.upper()));
  return {lower, upper};
}

Interval distance(const Interval &a, const Interval &b) {
  Bound lower = Bound::closed(0);
  if (!intersect(a, b)) {
    // Disjoint: the gap between the facing endpoints, never attained if
    // either of them is excluded.
    const bool a_first = lower_key(a.lower()) < lower_key(b.lower());
    const Interval &lo = a_first ? a : b;
    const Interval &hi = a_first ? b : a;
    lower = Bound::make(hi.lower().value() - lo.upper().value(),
                        either_open(lo.upper(), hi.lower()));
  }

  auto reach = [](const Interval &top, const Interval &bottom) {
    if (!top.is_bounded())
      return Bound::infinity();
    std::int64_t v = top.upper().value() - bottom.lower().value();
    return Bound::make(std::max<std::int64_t>(v, 0), either_open(top.upper(), bottom.lower()));
  };
  Bound upper = max_upper(reach(b, a), reach(a, b));
  return {lower, upper};
}

bool contains(const Interval &a, const TimePoint &t) {
  const Rational &v = t.value();
  const Rational lo(a.lower().value());
  if (v < lo || (v == lo && a.lower().is_open()))
    return false;
  if (!a.is_bounded())
    return true;
  const Rational hi(a.upper().value());
  return v < hi || (v == hi && a.upper().is_closed());
}

bool subset(const Interval &a, const Interval &b) {
  return lower_key(a.lower()) >= lower_key(b.lower()) &&
         upper_key(a.upper()) <= upper_key(b.upper());
}

std::optional<Interval> intersect(const Interval &a, const Interval &b) {
  const Bound &lower = lower_key(a.lower()) >= lower_key(b.lower()) ? a.lower() : b.lower();
  const Bound &upper = upper_key(a.upper()) <= upper_key(b.upper()) ? a.upper() : b.upper();
  return Interval::make(lower, upper);
}

Interval cap_upper(const Interval &a, std::int64_t ceiling) {
  if (ceiling < 0)
    throw std::invalid_argument("cap_upper ceiling must be non-negative");
  if (a.is_bounded() && a.upper().value() <= ceiling)
    return a;
  Bound top = Bound::closed(ceiling + 1);
  if (lower_key(a.lower()) >= lower_key(top))
    return {top, top};
  return {a.lower(), top};
}

} // namespace tfaest
