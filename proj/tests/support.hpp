#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tfaest/estimation.hpp"
#include "tfaest/model_io.hpp"
#include "tfaest/zone_automaton.hpp"

namespace tfaest::test {

inline TimePoint tp(const char *text) { return TimePoint::parse(text); }

inline Interval iv(const char *text) { return Interval::parse(text); }

inline const ZoneAutomaton &fig1() {
  static const ZoneAutomaton za = ZoneAutomaton::build(figure1_model());
  return za;
}

/// {(state, zone text)} for readable comparisons.
using Named = std::set<std::pair<std::string, std::string>>;

inline Named named(const ZoneAutomaton &za, const ExtendedSet &set) {
  Named out;
  for (const auto &v : set)
    out.emplace(za.state_name(v), za.zone(v).to_string());
  return out;
}

inline ExtendedState ext(const ZoneAutomaton &za, const char *state, const char *zone) {
  return za.find(state, Interval::parse(zone));
}

/// Grid points k/den for k = 0..max*den.
inline std::vector<TimePoint> grid_points(std::int64_t den, std::int64_t max) {
  std::vector<TimePoint> out;
  for (std::int64_t k = 0; k <= max * den; ++k)
    out.emplace_back(Rational(k, den));
  return out;
}

} // namespace tfaest::test
