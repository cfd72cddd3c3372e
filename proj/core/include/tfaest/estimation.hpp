#pragma once

#include <optional>
#include <set>
#include <vector>

#include "tfaest/interval.hpp"
#include "tfaest/model.hpp"
#include "tfaest/zone_automaton.hpp"

namespace tfaest {

using ExtendedSet = std::set<ExtendedState>;

struct TauReachEntry {
  ExtendedState state;
  /// Distance between the start zone and this zone.
  Interval duration;
};

/// Every extended state reachable from `v` by tau edges alone (including
/// `v` itself), with the duration range of that tau-run.
std::vector<TauReachEntry> tau_reach(const ZoneAutomaton &za, const ExtendedState &v);

/// A run of the zone automaton: k+1 tau-runs joined by k event edges.
struct ZaRun {
  /// Each segment is a nonempty chain of extended states of one discrete
  /// state linked by tau edges.
  std::vector<std::vector<ExtendedState>> segments;
  /// Indices into ZoneAutomaton::edges(); events[i] joins segments[i] and
  /// segments[i+1].
  std::vector<std::size_t> events;

  const ExtendedState &first() const { return segments.front().front(); }
  const ExtendedState &last() const { return segments.back().back(); }
};

/// Sum over all k+1 tau-runs of the distance between their first and last
/// zone. A superset of the exact elapsed times of the run: segments joined
/// by `id` edges share the clock, which the sum ignores.
Interval duration_range(const ZoneAutomaton &za, const ZaRun &run);

struct ReachWitness {
  ZaRun run;
  /// A concrete timed run starting at time 0 that realises `run` and dwells
  /// at its last state until the requested duration.
  TimedRun timed_run;
};

/// Whether `to` can be reached from `from` (starting with any clock value)
/// by an evolution lasting exactly `duration`; a witness when it can.
std::optional<ReachWitness> t_reachable(const ZoneAutomaton &za, const StateId &from,
                                        const StateId &to, const TimePoint &duration);

/// Extended states reachable from `v`, any clock in its zone, in exactly
/// `dt` time units without an observable event.
ExtendedSet lambda_estimation(const ZoneAutomaton &za, const ExtendedState &v,
                              const TimePoint &dt);

/// Same question answered by summing per-tau-run distance ranges along
/// runs (accumulated ranges capped at ceil(dt)). Always a superset of
/// lambda_estimation(); equal when no reachable `id` edge is involved.
ExtendedSet lambda_estimation_duration_sum(const ZoneAutomaton &za, const ExtendedState &v,
                                           const TimePoint &dt);

/// Union of lambda_estimation() over a set of start states. With
/// `clock_at_zero` every start has clock exactly 0 instead of any value of
/// its zone.
ExtendedSet silent_closure(const ZoneAutomaton &za, const ExtendedSet &support,
                           const TimePoint &dt, bool clock_at_zero = false);

/// Targets of `event`-labelled edges leaving any state of `from`.
ExtendedSet event_step(const ZoneAutomaton &za, const ExtendedSet &from, const EventId &event);

struct Estimate {
  ExtendedSet extended;
  std::set<StateId> discrete;

  static Estimate of(const ZoneAutomaton &za, ExtendedSet extended);
  bool inconsistent() const { return discrete.empty(); }

  friend bool operator==(const Estimate &, const Estimate &) = default;
};

/// Consistent states for a timed observation. Requires every observable
/// transition to reset the clock (throws ModelError otherwise) and a
/// well-formed observation (throws std::invalid_argument). An observation
/// the model cannot produce yields an empty estimate.
Estimate estimate(const ZoneAutomaton &za, const TimedObservation &obs);

/// Online estimator memory: the extended states right after the last
/// observation and the time it happened.
struct BeliefState {
  ExtendedSet support;
  TimePoint anchor{0};
  /// Set before the first observation: the clock starts at exactly 0, which
  /// the initial zone may not pin down on its own.
  bool clock_at_zero = false;

  friend bool operator==(const BeliefState &, const BeliefState &) = default;
};

BeliefState belief_init(const ZoneAutomaton &za);
/// Consumes one observation at time `t` >= anchor.
BeliefState belief_advance(const ZoneAutomaton &za, const BeliefState &belief,
                           const EventId &event, const TimePoint &t);
/// Estimate at time `t` >= anchor with nothing observed since the anchor.
Estimate belief_query(const ZoneAutomaton &za, const BeliefState &belief, const TimePoint &t);

} // namespace tfaest
