#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tfaest/estimation.hpp"

namespace tfaest {

/// Offline observer: every belief support reachable from the initial one,
/// each with a table of estimates and successor supports over the elapsed
/// time since its last observation, for elapsed times up to a horizon.
///
/// Beyond the horizon the table says nothing; ObserverSession then falls
/// back to the online update.
class OfflineObserver {
public:
  struct Cell {
    /// Elapsed times covered; integer endpoints.
    Interval elapsed;
    Estimate estimate;
    /// Successor node per observable event at an elapsed time in this cell;
    /// nullopt when the event is impossible there.
    std::map<EventId, std::optional<std::size_t>> next;
  };

  struct Node {
    ExtendedSet support;
    /// Only the initial node: clocks start at exactly 0.
    bool clock_at_zero = false;
    /// Disjoint, ascending, covering [0, horizon]; adjacent cells differ.
    std::vector<Cell> cells;
  };

  /// Requires every observable transition to reset the clock (throws
  /// ModelError) and horizon >= 1.
  static OfflineObserver build(const ZoneAutomaton &za, std::int64_t horizon);

  std::int64_t horizon() const { return horizon_; }
  const std::vector<Node> &nodes() const { return nodes_; }
  /// Node 0 holds the initial support.
  std::size_t initial() const { return 0; }

  std::optional<std::size_t> find(const ExtendedSet &support, bool clock_at_zero = false) const;

  /// The cell of `node` holding `dt`; nullopt when dt > horizon().
  const Cell *cell(std::size_t node, const TimePoint &dt) const;

private:
  std::int64_t horizon_ = 0;
  std::vector<Node> nodes_;
  std::map<std::pair<ExtendedSet, bool>, std::size_t> index_;
};

/// 2 * (largest model constant) * (number of extended states), at least 1.
std::int64_t default_observer_horizon(const ZoneAutomaton &za);

/// Incremental estimation driven by an OfflineObserver, switching to
/// belief_advance / belief_query whenever the elapsed time exceeds the
/// observer horizon or the support is not one of its nodes.
class ObserverSession {
public:
  ObserverSession(const ZoneAutomaton &za, const OfflineObserver &observer);

  /// Consumes observation `event` at time `t` >= anchor().
  void advance(const EventId &event, const TimePoint &t);
  Estimate query(const TimePoint &t) const;

  const BeliefState &belief() const { return belief_; }
  const TimePoint &anchor() const { return belief_.anchor; }
  /// Node of the observer matching the current support, if any.
  std::optional<std::size_t> node() const { return node_; }

private:
  const ZoneAutomaton &za_;
  const OfflineObserver &observer_;
  BeliefState belief_;
  std::optional<std::size_t> node_;
};

} // namespace tfaest
