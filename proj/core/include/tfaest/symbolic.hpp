#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "tfaest/dbm.hpp"
#include "tfaest/zone_automaton.hpp"

namespace tfaest {

/// Joint constraints on the clock and on the time elapsed since the search
/// started. Variable 0 is zero, 1 is the clock, 2 the elapsed time.
using ClockElapsedZone = Dbm<std::int64_t>;

inline constexpr std::size_t kClockVar = 1;
inline constexpr std::size_t kElapsedVar = 2;

struct SymbolicNode {
  ExtendedState at;
  ClockElapsedZone zone;
  /// Elapsed-time values compatible with being at `at` (clock within its zone).
  Interval elapsed;
  std::optional<std::size_t> parent;
  /// Index into ZoneAutomaton::edges() of the edge taken from the parent.
  std::optional<std::size_t> via;
};

/// Forward exploration of the zone automaton that carries, per extended
/// state, the exact set of (clock, elapsed time) pairs reachable from a set
/// of start states within `horizon` time units. Start states admit any clock
/// value of their zone at elapsed time 0, or only clock 0 when
/// `clock_at_zero` is set.
///
/// Because the clock and the elapsed time advance together and `id` edges
/// keep the clock, the joint constraint is what makes the result exact;
/// per-segment duration ranges alone cannot express it.
class SymbolicReach {
public:
  SymbolicReach(const ZoneAutomaton &za, const std::vector<ExtendedState> &starts,
                std::int64_t horizon, bool unobservable_only, bool clock_at_zero = false);

  std::int64_t horizon() const { return horizon_; }
  const std::vector<SymbolicNode> &nodes() const { return nodes_; }

  /// Extended states occupied after exactly `dt` time units.
  /// Precondition: dt <= horizon().
  std::set<ExtendedState> at(const TimePoint &dt) const;

  /// First node at `target`'s discrete state whose elapsed range holds dt.
  std::optional<std::size_t> find(std::size_t state, const TimePoint &dt) const;

private:
  void push(const ExtendedState &v, ClockElapsedZone zone, std::optional<std::size_t> parent,
            std::optional<std::size_t> via);

  const ZoneAutomaton &za_;
  std::int64_t horizon_;
  std::vector<SymbolicNode> nodes_;
  std::vector<bool> covered_;
  std::vector<std::vector<std::size_t>> by_vertex_;
};

} // namespace tfaest
