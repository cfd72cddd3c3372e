#include "tfaest/estimation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>

#include "tfaest/dbm.hpp"
#include "tfaest/symbolic.hpp"

namespace tfaest {

std::vector<TauReachEntry> tau_reach(const ZoneAutomaton &za, const ExtendedState &v) {
  std::vector<TauReachEntry> out;
  const Interval &start = za.zone(v);
  std::optional<ExtendedState> w = v;
  while (w) {
    out.push_back({*w, distance(start, za.zone(*w))});
    w = za.tau_successor(*w);
  }
  return out;
}

Interval duration_range(const ZoneAutomaton &za, const ZaRun &run) {
  if (run.segments.empty() || run.segments.size() != run.events.size() + 1)
    throw std::invalid_argument("a run needs one more segment than events");
  Interval total = Interval::point(0);
  for (const auto &segment : run.segments) {
    if (segment.empty())
      throw std::invalid_argument("empty run segment");
    total = add(total, distance(za.zone(segment.front()), za.zone(segment.back())));
  }
  return total;
}

namespace {

using RationalDbm = Dbm<Rational>;
using RBound = RationalDbm::Bound;

ZaRun path_to(const ZoneAutomaton &za, const SymbolicReach &search, std::size_t node) {
  std::vector<std::size_t> chain;
  for (std::optional<std::size_t> k = node; k; k = search.nodes()[*k].parent)
    chain.push_back(*k);
  std::reverse(chain.begin(), chain.end());

  ZaRun run;
  run.segments.push_back({search.nodes()[chain.front()].at});
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const SymbolicNode &n = search.nodes()[chain[i]];
    const ZaEdge &edge = za.edges()[*n.via];
    if (edge.is_tau()) {
      run.segments.back().push_back(n.at);
    } else {
      run.events.push_back(*n.via);
      run.segments.push_back({n.at});
    }
  }
  return run;
}

// Clock value `x_instant + offset - x_origin` must lie in `zone`.
// Variable 0 is the constant zero, so fixed instants use instant = 0.
void clock_in_zone(RationalDbm &d, std::size_t origin, std::size_t instant,
                   const Rational &offset, const Interval &zone) {
  const Rational lo(zone.lower().value());
  d.constrain(origin, instant,
              zone.lower().is_open() ? RBound::lt(offset - lo) : RBound::le(offset - lo));
  if (zone.is_bounded()) {
    const Rational hi(zone.upper().value());
    d.constrain(instant, origin,
                zone.upper().is_open() ? RBound::lt(hi - offset) : RBound::le(hi - offset));
  }
}

// Concrete event times and clock values realising `run` within `duration`.
std::optional<TimedRun> realise(const ZoneAutomaton &za, const ZaRun &run,
                                const TimePoint &duration) {
  const Tfa &model = za.model();
  const std::size_t k = run.events.size();
  // Variables: 0 zero, 1..k event times, k+1..2k+1 segment clock origins.
  auto time_var = [](std::size_t i) { return i; }; // i in 1..k
  auto origin_var = [k](std::size_t j) { return k + 1 + j; };
  RationalDbm d(2 * k + 2, false);
  const Rational T = duration.value();

  for (std::size_t i = 1; i <= k; ++i) {
    d.constrain(0, time_var(i), RBound::le(Rational(0)));
    if (i > 1)
      d.constrain(time_var(i - 1), time_var(i), RBound::le(Rational(0)));
    d.constrain(time_var(i), 0, RBound::le(T));
  }
  for (std::size_t j = 0; j <= k; ++j) {
    const auto &segment = run.segments[j];
    const std::size_t enter = j == 0 ? 0 : time_var(j);
    const std::size_t leave = j == k ? 0 : time_var(j + 1);
    clock_in_zone(d, origin_var(j), enter, Rational(0), za.zone(segment.front()));
    clock_in_zone(d, origin_var(j), leave, j == k ? T : Rational(0), za.zone(segment.back()));
    if (j > 0) {
      const Transition &t = model.transitions()[*za.edges()[run.events[j - 1]].transition];
      if (t.reset.is_identity()) {
        d.constrain(origin_var(j), origin_var(j - 1), RBound::le(Rational(0)));
        d.constrain(origin_var(j - 1), origin_var(j), RBound::le(Rational(0)));
      }
    }
  }

  auto values = d.solution();
  if (!values)
    return std::nullopt;
  const auto &x = *values;
  auto clock_at = [&](const Rational &instant, std::size_t j) {
    return TimePoint(instant - x[origin_var(j)]);
  };

  TimedRun out;
  out.start = {model.states()[run.first().state], clock_at(Rational(0), 0)};
  for (std::size_t i = 1; i <= k; ++i) {
    const ZaEdge &edge = za.edges()[run.events[i - 1]];
    const Transition &t = model.transitions()[*edge.transition];
    out.steps.push_back({t.event, TimePoint(x[time_var(i)]),
                         {t.target, clock_at(x[time_var(i)], i)}});
  }
  return out;
}

} // namespace

std::optional<ReachWitness> t_reachable(const ZoneAutomaton &za, const StateId &from,
                                        const StateId &to, const TimePoint &duration) {
  const Tfa &model = za.model();
  const std::size_t x = model.state_index(from);
  const std::size_t y = model.state_index(to);

  auto search_from = [&](const std::vector<ExtendedState> &starts) -> std::optional<ReachWitness> {
    SymbolicReach search(za, starts, duration.ceil(), false);
    for (std::size_t n = 0; n < search.nodes().size(); ++n) {
      const SymbolicNode &node = search.nodes()[n];
      if (node.at.state != y || !contains(node.elapsed, duration))
        continue;
      ZaRun run = path_to(za, search, n);
      auto timed = realise(za, run, duration);
      if (!timed || !check_run(model, *timed))
        throw std::logic_error("symbolic path without a concrete realisation");
      return ReachWitness{std::move(run), std::move(*timed)};
    }
    return std::nullopt;
  };

  // Prefer witnesses starting with a zero clock; any clock is allowed.
  const ExtendedState at_zero{x, za.zone_containing(x, TimePoint(0))};
  if (auto w = search_from({at_zero}))
    return w;
  std::vector<ExtendedState> others;
  for (std::size_t z = 0; z < za.zones(x).size(); ++z)
    if (z != at_zero.zone)
      others.push_back({x, z});
  if (others.empty())
    return std::nullopt;
  return search_from(others);
}

ExtendedSet lambda_estimation(const ZoneAutomaton &za, const ExtendedState &v,
                              const TimePoint &dt) {
  return SymbolicReach(za, {v}, dt.ceil(), true).at(dt);
}

ExtendedSet lambda_estimation_duration_sum(const ZoneAutomaton &za, const ExtendedState &v,
                                           const TimePoint &dt) {
  const Tfa &model = za.model();
  const std::int64_t ceiling = dt.ceil();
  ExtendedSet out;

  auto hopeless = [&](const Interval &acc) {
    const TimePoint lo(acc.lower().value());
    return dt < lo || (dt == lo && acc.lower().is_open());
  };

  using Item = std::pair<ExtendedState, Interval>;
  std::deque<Item> work{{v, Interval::point(0)}};
  std::set<std::tuple<ExtendedState, Interval>> seen{{v, Interval::point(0)}};
  while (!work.empty()) {
    auto [start, acc] = work.front();
    work.pop_front();
    for (const auto &[u, d] : tau_reach(za, start)) {
      const Interval total = cap_upper(add(acc, d), ceiling);
      if (hopeless(total))
        continue;
      if (contains(total, dt))
        out.insert(u);
      for (std::size_t e : za.out_edges(u)) {
        const ZaEdge &edge = za.edges()[e];
        if (edge.is_tau() || model.is_observable(model.alphabet()[*edge.event]))
          continue;
        if (seen.emplace(edge.to, total).second)
          work.emplace_back(edge.to, total);
      }
    }
  }
  return out;
}

ExtendedSet silent_closure(const ZoneAutomaton &za, const ExtendedSet &support,
                           const TimePoint &dt, bool clock_at_zero) {
  if (support.empty())
    return {};
  std::vector<ExtendedState> starts(support.begin(), support.end());
  return SymbolicReach(za, starts, dt.ceil(), true, clock_at_zero).at(dt);
}

ExtendedSet event_step(const ZoneAutomaton &za, const ExtendedSet &from, const EventId &event) {
  const Tfa &model = za.model();
  ExtendedSet out;
  if (!model.has_event(event))
    return out;
  const std::size_t e = model.event_index(event);
  for (const auto &v : from)
    for (std::size_t i : za.out_edges(v)) {
      const ZaEdge &edge = za.edges()[i];
      if (edge.event == e)
        out.insert(edge.to);
    }
  return out;
}

Estimate Estimate::of(const ZoneAutomaton &za, ExtendedSet extended) {
  Estimate out;
  for (const auto &v : extended)
    out.discrete.insert(za.state_name(v));
  out.extended = std::move(extended);
  return out;
}

BeliefState belief_init(const ZoneAutomaton &za) {
  return {ExtendedSet(za.initial().begin(), za.initial().end()), TimePoint(0), true};
}

BeliefState belief_advance(const ZoneAutomaton &za, const BeliefState &belief,
                           const EventId &event, const TimePoint &t) {
  if (!za.model().is_observable(event))
    throw std::invalid_argument("event '" + event + "' is not observable");
  if (t < belief.anchor)
    throw std::invalid_argument("observation at " + t.to_string() + " precedes " +
                                belief.anchor.to_string());
  ExtendedSet before = silent_closure(za, belief.support, t - belief.anchor, belief.clock_at_zero);
  return {event_step(za, before, event), t, false};
}

Estimate belief_query(const ZoneAutomaton &za, const BeliefState &belief, const TimePoint &t) {
  if (t < belief.anchor)
    throw std::invalid_argument("query at " + t.to_string() + " precedes " +
                                belief.anchor.to_string());
  return Estimate::of(za,
                      silent_closure(za, belief.support, t - belief.anchor, belief.clock_at_zero));
}

Estimate estimate(const ZoneAutomaton &za, const TimedObservation &obs) {
  require_valid(za.model(), true);
  check_observation(za.model(), obs);
  BeliefState belief = belief_init(za);
  for (const auto &[event, time] : obs.events) {
    belief = belief_advance(za, belief, event, time);
    if (belief.support.empty())
      return {};
  }
  return belief_query(za, belief, obs.query_time);
}

} // namespace tfaest
