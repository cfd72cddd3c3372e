#include "tfaest/observer.hpp"

#include <deque>
#include <stdexcept>

#include "tfaest/symbolic.hpp"

namespace tfaest {

namespace {

// Region cells of [0,B]: 2k is [k,k], 2k+1 is (k,k+1).
Interval cell_interval(std::size_t c) {
  const auto k = static_cast<std::int64_t>(c / 2);
  return c % 2 == 0 ? Interval::point(k) : Interval::open(k, k + 1);
}

std::size_t first_cell(const Interval &i) {
  const auto lo = static_cast<std::size_t>(i.lower().value());
  return i.lower().is_open() ? 2 * lo + 1 : 2 * lo;
}

std::size_t last_cell(const Interval &i, std::size_t max_cell) {
  if (!i.is_bounded())
    return max_cell;
  const auto hi = static_cast<std::size_t>(i.upper().value());
  return std::min(i.upper().is_open() ? 2 * hi - 1 : 2 * hi, max_cell);
}

} // namespace

OfflineObserver OfflineObserver::build(const ZoneAutomaton &za, std::int64_t horizon) {
  if (horizon < 1)
    throw std::invalid_argument("observer horizon must be at least 1");
  const Tfa &model = za.model();
  require_valid(model, true);

  OfflineObserver obs;
  obs.horizon_ = horizon;
  const std::size_t max_cell = 2 * static_cast<std::size_t>(horizon);

  auto intern = [&obs](const ExtendedSet &support, bool clock_at_zero) {
    auto [it, fresh] = obs.index_.emplace(std::pair(support, clock_at_zero), obs.nodes_.size());
    if (fresh)
      obs.nodes_.push_back({support, clock_at_zero, {}});
    return it->second;
  };
  intern(ExtendedSet(za.initial().begin(), za.initial().end()), true);

  for (std::size_t n = 0; n < obs.nodes_.size(); ++n) {
    const std::vector<ExtendedState> starts(obs.nodes_[n].support.begin(),
                                            obs.nodes_[n].support.end());
    SymbolicReach search(za, starts, horizon, true, obs.nodes_[n].clock_at_zero);
    std::vector<ExtendedSet> per_cell(max_cell + 1);
    for (const auto &node : search.nodes()) {
      const std::size_t hi = last_cell(node.elapsed, max_cell);
      for (std::size_t c = first_cell(node.elapsed); c <= hi; ++c)
        per_cell[c].insert(node.at);
    }

    std::map<ExtendedSet, std::map<EventId, std::optional<std::size_t>>> successors;
    std::vector<Cell> cells;
    for (std::size_t c = 0; c <= max_cell; ++c) {
      if (!cells.empty() && cells.back().estimate.extended == per_cell[c]) {
        const Interval &prev = cells.back().elapsed;
        const Interval here = cell_interval(c);
        cells.back().elapsed = Interval(prev.lower(), here.upper());
        continue;
      }
      auto found = successors.find(per_cell[c]);
      if (found == successors.end()) {
        std::map<EventId, std::optional<std::size_t>> next;
        for (const auto &e : model.observable_events()) {
          ExtendedSet after = event_step(za, per_cell[c], e);
          next[e] = after.empty() ? std::nullopt : std::optional<std::size_t>(intern(after, false));
        }
        found = successors.emplace(per_cell[c], std::move(next)).first;
      }
      cells.push_back({cell_interval(c), Estimate::of(za, per_cell[c]), found->second});
    }
    obs.nodes_[n].cells = std::move(cells);
  }
  return obs;
}

std::optional<std::size_t> OfflineObserver::find(const ExtendedSet &support,
                                                  bool clock_at_zero) const {
  auto it = index_.find(std::pair(support, clock_at_zero));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

const OfflineObserver::Cell *OfflineObserver::cell(std::size_t node, const TimePoint &dt) const {
  if (dt > TimePoint(horizon_))
    return nullptr;
  for (const auto &c : nodes_.at(node).cells)
    if (contains(c.elapsed, dt))
      return &c;
  return nullptr;
}

std::int64_t default_observer_horizon(const ZoneAutomaton &za) {
  const auto k = za.model().max_constant();
  return std::max<std::int64_t>(1, 2 * k * static_cast<std::int64_t>(za.size()));
}

ObserverSession::ObserverSession(const ZoneAutomaton &za, const OfflineObserver &observer)
    : za_(za), observer_(observer), belief_(belief_init(za)), node_(observer.initial()) {}

void ObserverSession::advance(const EventId &event, const TimePoint &t) {
  if (!za_.model().is_observable(event))
    throw std::invalid_argument("event '" + event + "' is not observable");
  if (t < belief_.anchor)
    throw std::invalid_argument("observation at " + t.to_string() + " precedes " +
                                belief_.anchor.to_string());
  if (node_) {
    if (const auto *c = observer_.cell(*node_, t - belief_.anchor)) {
      const auto &next = c->next.at(event);
      node_ = next;
      belief_ = {next ? observer_.nodes()[*next].support : ExtendedSet{}, t, false};
      return;
    }
  }
  belief_ = belief_advance(za_, belief_, event, t);
  node_ = observer_.find(belief_.support, belief_.clock_at_zero);
}

Estimate ObserverSession::query(const TimePoint &t) const {
  if (t < belief_.anchor)
    throw std::invalid_argument("query at " + t.to_string() + " precedes " +
                                belief_.anchor.to_string());
  if (node_)
    if (const auto *c = observer_.cell(*node_, t - belief_.anchor))
      return c->estimate;
  return belief_query(za_, belief_, t);
}

} // namespace tfaest
