#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfaest/interval.hpp"
#include "tfaest/model.hpp"

namespace tfaest {

/// A discrete state paired with one of its zones (indices into the owning
/// ZoneAutomaton).
struct ExtendedState {
  std::size_t state = 0;
  std::size_t zone = 0;

  friend auto operator<=>(const ExtendedState &, const ExtendedState &) = default;
};

/// Edge of the zone automaton. `event` is empty for time-elapse (tau) edges;
/// `transition` names the model transition an event edge stems from.
struct ZaEdge {
  ExtendedState from;
  std::optional<std::size_t> event;
  ExtendedState to;
  std::optional<std::size_t> transition;

  bool is_tau() const { return !event.has_value(); }
};

/// Raised when an `id` transition leaves a zone that is not also a zone of
/// its target state, so the clock-preserving edge has nowhere to land.
class ZoneConstructionError : public std::runtime_error {
public:
  ZoneConstructionError(const std::string &what, std::vector<std::string> conflicts)
      : std::runtime_error(what), conflicts_(std::move(conflicts)) {}
  const std::vector<std::string> &conflicts() const { return conflicts_; }

private:
  std::vector<std::string> conflicts_;
};

/// Per-state zone lists, indexed like Tfa::states().
using ZoneTable = std::vector<std::vector<Interval>>;

/// Every (id transition, source zone) pair whose source zone sits inside the
/// guard but is missing from the target state's zones.
std::vector<std::string> identity_edge_conflicts(const Tfa &model, const ZoneTable &zones);

/// Finite NFA over extended states: tau edges step a zone to its successor
/// within a state; event edges follow model transitions, landing in every
/// zone inside the reset interval, or in the same zone for `id`.
///
/// Immutable once built; owns a copy of the model.
class ZoneAutomaton {
public:
  /// Throws ModelError for malformed models and ZoneConstructionError for
  /// unplaceable `id` edges.
  static ZoneAutomaton build(Tfa model);

  const Tfa &model() const { return model_; }

  const std::vector<Interval> &zones(std::size_t state) const { return zones_.at(state); }
  const Interval &zone(const ExtendedState &v) const { return zones_.at(v.state).at(v.zone); }

  /// All extended states, ordered by state index then zone order.
  std::vector<ExtendedState> states() const;
  std::size_t size() const { return offsets_.back(); }
  /// Dense index in [0, size()).
  std::size_t index(const ExtendedState &v) const { return offsets_[v.state] + v.zone; }
  ExtendedState at(std::size_t index) const;

  const std::vector<ExtendedState> &initial() const { return initial_; }
  const std::vector<ZaEdge> &edges() const { return edges_; }
  /// Indices into edges() leaving `v`: the tau edge first, then event edges
  /// in model transition order.
  const std::vector<std::size_t> &out_edges(const ExtendedState &v) const {
    return out_edges_[index(v)];
  }

  std::optional<ExtendedState> tau_successor(const ExtendedState &v) const;

  /// Throws std::out_of_range if `zone` is not a zone of `state`.
  ExtendedState find(const StateId &state, const Interval &zone) const;
  /// The zone of `state` containing clock value `clock`.
  std::size_t zone_containing(std::size_t state, const TimePoint &clock) const;

  /// "x0 [0,0]"
  std::string name(const ExtendedState &v) const;
  const StateId &state_name(const ExtendedState &v) const { return model_.states()[v.state]; }

private:
  ZoneAutomaton() = default;

  Tfa model_;
  ZoneTable zones_;
  std::vector<std::size_t> offsets_{0};
  std::vector<ExtendedState> initial_;
  std::vector<ZaEdge> edges_;
  std::vector<std::vector<std::size_t>> out_edges_;
};

} // namespace tfaest
