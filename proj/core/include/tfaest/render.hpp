#pragma once

#include <set>
#include <string>

#include "tfaest/estimation.hpp"
#include "tfaest/model.hpp"
#include "tfaest/observer.hpp"
#include "tfaest/zone_automaton.hpp"

namespace tfaest {

/// Graphviz digraph of the zone automaton. Nodes are named "x0 [0,0]";
/// tau edges are dashed and unlabeled. Nodes and edges are sorted by state
/// name, then zone order, so the output is byte-stable.
std::string render_dot(const ZoneAutomaton &za);

/// One line per state: "x0: [0,0] (0,1) [1,1] (1,3] (3,inf)".
std::string render_zones(const ZoneAutomaton &za);
std::string render_zones(const ZoneAutomaton &za, const StateId &state);

/// Sorted discrete states separated by spaces; "(none)" when empty.
std::string render_states(const std::set<StateId> &states);

/// {"discrete":[...],"extended":[["x2","[0,0]"],...],"anchor":"1.0"}
std::string render_estimate_json(const ZoneAutomaton &za, const Estimate &estimate,
                                 const TimePoint &anchor);

/// "(x0,0.0) -b@0.5-> (x2,0.5) -c@2.0-> ..."
std::string render_run(const TimedRun &run);

std::string render_observer_json(const ZoneAutomaton &za, const OfflineObserver &observer);

} // namespace tfaest
