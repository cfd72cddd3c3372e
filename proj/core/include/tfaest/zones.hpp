#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tfaest/interval.hpp"
#include "tfaest/model.hpp"

namespace tfaest {

/// Smallest and largest integer constant relevant to the clock at `x`:
/// guards of outgoing transitions, guards of incoming `id` transitions and
/// reset intervals of incoming resetting transitions. The minimum is always
/// clamped down to 0 so the regions start at the initial clock value.
std::pair<std::int64_t, std::int64_t> clock_extremes(const Tfa &model, std::size_t x);

/// [m,m], (m,m+1), [m+1,m+1], ..., [M,M].
std::vector<Interval> regions(const Tfa &model, const StateId &x);

/// Transitions leaving `x` whose guard contains all of `r` (indices into
/// model.transitions(), ascending).
std::vector<std::size_t> output_at(const Tfa &model, const StateId &x, const Interval &r);

/// Transitions entering `x` that can leave the clock in `r`: resetting ones
/// with r inside the reset interval, `id` ones with r inside the guard.
std::vector<std::size_t> input_at(const Tfa &model, const StateId &x, const Interval &r);

/// Partition of [0,+inf) at `x` into zones: consecutive regions are merged
/// while their input/output transition sets agree and none of those
/// transitions keeps the clock; the unbounded zone (M,+inf) closes the list.
/// Ascending order.
std::vector<Interval> build_zones(const Tfa &model, const StateId &x);

} // namespace tfaest
