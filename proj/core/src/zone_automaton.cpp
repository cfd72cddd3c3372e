#include "tfaest/zone_automaton.hpp"

#include <algorithm>

#include "tfaest/zones.hpp"

namespace tfaest {

namespace {

std::optional<std::size_t> find_zone(const std::vector<Interval> &zones, const Interval &z) {
  auto it = std::lower_bound(zones.begin(), zones.end(), z);
  if (it == zones.end() || *it != z)
    return std::nullopt;
  return static_cast<std::size_t>(it - zones.begin());
}

} // namespace

std::vector<std::string> identity_edge_conflicts(const Tfa &model, const ZoneTable &zones) {
  std::vector<std::string> out;
  for (const auto &t : model.transitions()) {
    if (!t.reset.is_identity())
      continue;
    const auto &source_zones = zones.at(model.state_index(t.source));
    const auto &target_zones = zones.at(model.state_index(t.target));
    for (const auto &z : source_zones) {
      if (!subset(z, t.guard))
        continue;
      if (!find_zone(target_zones, z))
        out.push_back("(" + t.source + "," + t.event + "," + t.target + ") keeps the clock in " +
                      z.to_string() + ", which is not a zone of " + t.target);
    }
  }
  return out;
}

ZoneAutomaton ZoneAutomaton::build(Tfa model) {
  require_valid(model, false);

  ZoneAutomaton za;
  za.model_ = std::move(model);
  const Tfa &m = za.model_;

  for (const auto &x : m.states()) {
    za.zones_.push_back(build_zones(m, x));
    za.offsets_.push_back(za.offsets_.back() + za.zones_.back().size());
  }

  if (auto conflicts = identity_edge_conflicts(m, za.zones_); !conflicts.empty())
    throw ZoneConstructionError("zone automaton construction failed: " + conflicts.front(),
                                std::move(conflicts));

  for (const auto &x : m.initial()) {
    ExtendedState v{m.state_index(x), 0};
    if (std::find(za.initial_.begin(), za.initial_.end(), v) == za.initial_.end())
      za.initial_.push_back(v);
  }
  std::sort(za.initial_.begin(), za.initial_.end());

  za.out_edges_.resize(za.size());
  auto add_edge = [&za](ZaEdge e) {
    za.out_edges_[za.index(e.from)].push_back(za.edges_.size());
    za.edges_.push_back(e);
  };

  for (std::size_t x = 0; x < m.states().size(); ++x)
    for (std::size_t z = 0; z + 1 < za.zones_[x].size(); ++z)
      add_edge({{x, z}, std::nullopt, {x, z + 1}, std::nullopt});

  for (std::size_t i = 0; i < m.transitions().size(); ++i) {
    const auto &t = m.transitions()[i];
    const std::size_t src = m.state_index(t.source);
    const std::size_t dst = m.state_index(t.target);
    const std::size_t event = m.event_index(t.event);
    const auto &src_zones = za.zones_[src];
    const auto &dst_zones = za.zones_[dst];
    for (std::size_t z = 0; z < src_zones.size(); ++z) {
      if (!subset(src_zones[z], t.guard))
        continue;
      if (t.reset.is_identity()) {
        add_edge({{src, z}, event, {dst, *find_zone(dst_zones, src_zones[z])}, i});
        continue;
      }
      for (std::size_t z2 = 0; z2 < dst_zones.size(); ++z2)
        if (subset(dst_zones[z2], t.reset.interval()))
          add_edge({{src, z}, event, {dst, z2}, i});
    }
  }
  return za;
}

std::vector<ExtendedState> ZoneAutomaton::states() const {
  std::vector<ExtendedState> out;
  out.reserve(size());
  for (std::size_t x = 0; x < zones_.size(); ++x)
    for (std::size_t z = 0; z < zones_[x].size(); ++z)
      out.push_back({x, z});
  return out;
}

ExtendedState ZoneAutomaton::at(std::size_t index) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  std::size_t x = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return {x, index - offsets_[x]};
}

std::optional<ExtendedState> ZoneAutomaton::tau_successor(const ExtendedState &v) const {
  if (v.zone + 1 >= zones_.at(v.state).size())
    return std::nullopt;
  return ExtendedState{v.state, v.zone + 1};
}

ExtendedState ZoneAutomaton::find(const StateId &state, const Interval &zone) const {
  std::size_t x = model_.state_index(state);
  auto z = find_zone(zones_[x], zone);
  if (!z)
    throw std::out_of_range(zone.to_string() + " is not a zone of " + state);
  return {x, *z};
}

std::size_t ZoneAutomaton::zone_containing(std::size_t state, const TimePoint &clock) const {
  const auto &zs = zones_.at(state);
  for (std::size_t z = 0; z < zs.size(); ++z)
    if (contains(zs[z], clock))
      return z;
  throw std::logic_error("zones do not cover the clock axis");
}

std::string ZoneAutomaton::name(const ExtendedState &v) const {
  return state_name(v) + " " + zone(v).to_string();
}

} // namespace tfaest
