#include "tfaest/symbolic.hpp"

#include <deque>
#include <stdexcept>

namespace tfaest {

namespace {

using Bound = ClockElapsedZone::Bound;

void restrict_clock(ClockElapsedZone &d, const Interval &zone) {
  const auto lo = zone.lower().value();
  d.constrain_lower(kClockVar, zone.lower().is_open() ? Bound::lt(-lo) : Bound::le(-lo));
  if (zone.is_bounded()) {
    const auto hi = zone.upper().value();
    d.constrain_upper(kClockVar, zone.upper().is_open() ? Bound::lt(hi) : Bound::le(hi));
  }
}

// Let time pass while staying inside `zone`, never past the horizon.
void settle(ClockElapsedZone &d, const Interval &zone, std::int64_t horizon) {
  d.delay();
  restrict_clock(d, zone);
  d.constrain_upper(kElapsedVar, Bound::le(horizon));
}

Interval elapsed_range(const ClockElapsedZone &d) {
  const auto &neg_lo = d(0, kElapsedVar);
  const auto &hi = d(kElapsedVar, 0);
  return Interval(tfaest::Bound::make(-neg_lo.value, neg_lo.strict ? Openness::Open : Openness::Closed),
                  tfaest::Bound::make(hi.value, hi.strict ? Openness::Open : Openness::Closed));
}

} // namespace

SymbolicReach::SymbolicReach(const ZoneAutomaton &za, const std::vector<ExtendedState> &starts,
                             std::int64_t horizon, bool unobservable_only,
                             bool clock_at_zero)
    : za_(za), horizon_(horizon), by_vertex_(za.size()) {
  if (horizon < 0)
    throw std::invalid_argument("negative horizon");

  for (const auto &v : starts) {
    ClockElapsedZone d(3);
    restrict_clock(d, za.zone(v));
    if (clock_at_zero)
      d.assign(kClockVar, 0);
    d.assign(kElapsedVar, 0);
    settle(d, za.zone(v), horizon_);
    push(v, std::move(d), std::nullopt, std::nullopt);
  }

  const Tfa &model = za.model();
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    if (covered_[n])
      continue;
    const ExtendedState from = nodes_[n].at;
    for (std::size_t e : za.out_edges(from)) {
      const ZaEdge &edge = za.edges()[e];
      ClockElapsedZone d = nodes_[n].zone;
      if (!edge.is_tau()) {
        const Transition &t = model.transitions()[*edge.transition];
        if (unobservable_only && model.is_observable(t.event))
          continue;
        if (!t.reset.is_identity()) {
          d.release(kClockVar);
          restrict_clock(d, za.zone(edge.to));
        }
      }
      settle(d, za.zone(edge.to), horizon_);
      push(edge.to, std::move(d), n, e);
    }
  }
}

void SymbolicReach::push(const ExtendedState &v, ClockElapsedZone zone,
                         std::optional<std::size_t> parent, std::optional<std::size_t> via) {
  if (zone.empty())
    return;
  auto &bucket = by_vertex_[za_.index(v)];
  for (std::size_t k : bucket)
    if (nodes_[k].zone.includes(zone))
      return;
  // Nodes inside the new zone stay reported but are neither expanded nor
  // compared against again: their successors are covered too.
  std::erase_if(bucket, [&](std::size_t k) {
    if (!zone.includes(nodes_[k].zone))
      return false;
    covered_[k] = true;
    return true;
  });
  Interval elapsed = elapsed_range(zone);
  bucket.push_back(nodes_.size());
  nodes_.push_back({v, std::move(zone), elapsed, parent, via});
  covered_.push_back(false);
}

std::set<ExtendedState> SymbolicReach::at(const TimePoint &dt) const {
  if (dt > TimePoint(horizon_))
    throw std::invalid_argument("query beyond the exploration horizon");
  std::set<ExtendedState> out;
  for (const auto &node : nodes_)
    if (contains(node.elapsed, dt))
      out.insert(node.at);
  return out;
}

std::optional<std::size_t> SymbolicReach::find(std::size_t state, const TimePoint &dt) const {
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    if (nodes_[k].at.state == state && contains(nodes_[k].elapsed, dt))
      return k;
  return std::nullopt;
}

} // namespace tfaest
