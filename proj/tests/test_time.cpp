#include <doctest.h>

#include <stdexcept>

#include "tfaest/time.hpp"

using tfaest::Rational;
using tfaest::TimePoint;

TEST_CASE("decimal parsing is exact") {
  CHECK(TimePoint::parse("0.5").value() == Rational(1, 2));
  CHECK(TimePoint::parse("3.125").value() == Rational(25, 8));
  CHECK(TimePoint::parse("4").value() == Rational(4));
  CHECK(TimePoint::parse("0.1") + TimePoint::parse("0.2") == TimePoint::parse("0.3"));
}

TEST_CASE("malformed time text is rejected") {
  for (const char *bad : {"", "-1", "1.", ".5", "1e3", "abc", "1.2.3", " 1"})
    CHECK_THROWS_AS(TimePoint::parse(bad), std::invalid_argument);
}

TEST_CASE("ceil and floor") {
  CHECK(TimePoint::parse("2.5").ceil() == 3);
  CHECK(TimePoint::parse("2.5").floor() == 2);
  CHECK(TimePoint(2).ceil() == 2);
  CHECK(TimePoint(0).floor() == 0);
}

TEST_CASE("printing") {
  CHECK(TimePoint(1).to_string() == "1.0");
  CHECK(TimePoint::parse("0.25").to_string() == "0.25");
  CHECK(TimePoint(Rational(1, 3)).to_string() == "1/3");
}

TEST_CASE("subtraction never goes negative") {
  CHECK(TimePoint(3) - TimePoint(1) == TimePoint(2));
  CHECK_THROWS_AS(TimePoint(1) - TimePoint(3), std::invalid_argument);
  CHECK_THROWS_AS(TimePoint(Rational(-1, 2)), std::invalid_argument);
}
