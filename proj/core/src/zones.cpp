#include "tfaest/zones.hpp"

#include <algorithm>

namespace tfaest {

namespace {

void widen(std::int64_t &lo, std::int64_t &hi, const Interval &i) {
  lo = std::min(lo, i.lower().value());
  hi = std::max(hi, i.lower().value());
  if (i.is_bounded())
    hi = std::max(hi, i.upper().value());
}

bool keeps_clock(const Tfa &model, std::size_t index) {
  return model.transitions()[index].reset.is_identity();
}

} // namespace

std::pair<std::int64_t, std::int64_t> clock_extremes(const Tfa &model, std::size_t x) {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  for (auto i : model.outputs(x))
    widen(lo, hi, model.transitions()[i].guard);
  for (auto i : model.inputs(x)) {
    const auto &t = model.transitions()[i];
    widen(lo, hi, t.reset.is_identity() ? t.guard : t.reset.interval());
  }
  return {std::min<std::int64_t>(lo, 0), hi};
}

std::vector<Interval> regions(const Tfa &model, const StateId &x) {
  auto [m, M] = clock_extremes(model, model.state_index(x));
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(2 * (M - m) + 1));
  for (std::int64_t k = m; k < M; ++k) {
    out.push_back(Interval::point(k));
    out.push_back(Interval::open(k, k + 1));
  }
  out.push_back(Interval::point(M));
  return out;
}

std::vector<std::size_t> output_at(const Tfa &model, const StateId &x, const Interval &r) {
  std::vector<std::size_t> out;
  for (auto i : model.outputs(model.state_index(x)))
    if (subset(r, model.transitions()[i].guard))
      out.push_back(i);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> input_at(const Tfa &model, const StateId &x, const Interval &r) {
  std::vector<std::size_t> out;
  for (auto i : model.inputs(model.state_index(x))) {
    const auto &t = model.transitions()[i];
    const Interval &landing = t.reset.is_identity() ? t.guard : t.reset.interval();
    if (subset(r, landing))
      out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Interval> build_zones(const Tfa &model, const StateId &x) {
  const auto rs = regions(model, x);
  std::vector<Interval> zones;

  auto outs = output_at(model, x, rs.front());
  auto ins = input_at(model, x, rs.front());
  Interval zone = rs.front();

  for (std::size_t k = 1; k < rs.size(); ++k) {
    const Interval &next = rs[k];
    auto next_outs = output_at(model, x, next);
    auto next_ins = input_at(model, x, next);
    const bool mergeable =
        next_outs == outs && next_ins == ins &&
        std::none_of(next_outs.begin(), next_outs.end(),
                     [&](std::size_t i) { return keeps_clock(model, i); }) &&
        std::none_of(next_ins.begin(), next_ins.end(),
                     [&](std::size_t i) { return keeps_clock(model, i); });
    if (mergeable) {
      zone = Interval(zone.lower(), next.upper());
    } else {
      zones.push_back(zone);
      zone = next;
    }
    outs = std::move(next_outs);
    ins = std::move(next_ins);
  }
  zones.push_back(zone);
  zones.push_back(Interval::above(rs.back().upper().value()));
  return zones;
}

} // namespace tfaest
