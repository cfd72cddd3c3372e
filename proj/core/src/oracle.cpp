#include "tfaest/oracle.hpp"

#include <cstdio>
#include <deque>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

#include "tfaest/estimation.hpp"
#include "tfaest/model_io.hpp"
#include "tfaest/observation_text.hpp"
#include "tfaest/zone_automaton.hpp"

namespace tfaest {

namespace {

using Ticks = std::int64_t;

Ticks per_unit(const Rational &step) {
  if (step.numerator() != 1 || step.denominator() < 1)
    throw std::invalid_argument("grid step must be 1/q for a positive integer q");
  return step.denominator();
}

Ticks to_ticks(const TimePoint &t, Ticks q) {
  const Rational scaled = t.value() * q;
  if (scaled.denominator() != 1)
    throw std::invalid_argument("time " + t.to_string() + " is not on the grid");
  return scaled.numerator();
}

TimePoint from_ticks(Ticks ticks, Ticks q) { return TimePoint(Rational(ticks, q)); }

bool guard_holds(const Interval &guard, Ticks clock, Ticks q) {
  return contains(guard, from_ticks(clock, q));
}

// Grid clock values a transition may leave behind.
std::vector<Ticks> targets(const Transition &t, Ticks clock, Ticks q) {
  if (t.reset.is_identity())
    return {clock};
  const Interval &r = t.reset.interval();
  std::vector<Ticks> out;
  for (Ticks v = r.lower().value() * q; v <= r.upper().value() * q; ++v)
    out.push_back(v);
  return out;
}

// Breadth-first search over (state, clock, time, observations consumed).
// Observable events must match `observed` at their timestamps unless
// `observable_free`, in which case they may fire anywhere (or never, when
// `observable_blocked`).
struct GridSearch {
  const Tfa &model;
  Ticks q;
  std::vector<std::pair<EventId, Ticks>> observed;
  Ticks end;
  bool observable_free = false;
  bool observable_blocked = false;

  std::set<StateId> run(const std::vector<std::pair<std::size_t, Ticks>> &starts) const {
    using Key = std::tuple<std::size_t, Ticks, Ticks, std::size_t>;
    std::set<Key> seen;
    std::deque<Key> work;
    auto visit = [&](Key k) {
      if (seen.insert(k).second)
        work.push_back(k);
    };
    for (const auto &[x, c] : starts)
      visit({x, c, 0, 0});

    std::set<StateId> out;
    while (!work.empty()) {
      const auto [x, c, now, i] = work.front();
      work.pop_front();
      if (i == observed.size() && now == end)
        out.insert(model.states()[x]);

      const Ticks limit = i < observed.size() ? observed[i].second : end;
      if (now < limit)
        visit({x, c + 1, now + 1, i});

      for (std::size_t ti : model.outputs(x)) {
        const Transition &t = model.transitions()[ti];
        if (!guard_holds(t.guard, c, q))
          continue;
        std::size_t next_i = i;
        if (model.is_observable(t.event)) {
          if (observable_blocked)
            continue;
          if (!observable_free) {
            if (i == observed.size() || observed[i].first != t.event || observed[i].second != now)
              continue;
            next_i = i + 1;
          }
        }
        const std::size_t y = model.state_index(t.target);
        for (Ticks v : targets(t, c, q))
          visit({y, v, now, next_i});
      }
    }
    return out;
  }
};

} // namespace

void check_grid(const GridConfig &grid) {
  to_ticks(grid.horizon, per_unit(grid.step));
}

void enumerate_runs(const Tfa &model, const GridConfig &grid,
                    const std::function<bool(const TimedRun &)> &emit) {
  const Ticks q = per_unit(grid.step);
  const Ticks horizon = to_ticks(grid.horizon, q);

  TimedRun run;
  std::function<bool(std::size_t, Ticks, Ticks)> dfs = [&](std::size_t x, Ticks c, Ticks now) {
    if (!emit(run))
      return false;
    if (run.steps.size() >= grid.max_events)
      return true;
    for (Ticks d = 0; now + d <= horizon; ++d) {
      for (std::size_t ti : model.outputs(x)) {
        const Transition &t = model.transitions()[ti];
        if (!guard_holds(t.guard, c + d, q))
          continue;
        const std::size_t y = model.state_index(t.target);
        for (Ticks v : targets(t, c + d, q)) {
          run.steps.push_back({t.event, from_ticks(now + d, q), {t.target, from_ticks(v, q)}});
          const bool go_on = dfs(y, v, now + d);
          run.steps.pop_back();
          if (!go_on)
            return false;
        }
      }
    }
    return true;
  };

  for (const auto &x0 : model.initial()) {
    run = TimedRun{{x0, TimePoint(0)}, TimePoint(0), {}};
    if (!dfs(model.state_index(x0), 0, 0))
      return;
  }
}

std::set<StateId> brute_consistent_states(const Tfa &model, const GridConfig &grid,
                                          const TimedObservation &obs) {
  const Ticks q = per_unit(grid.step);
  GridSearch search{model, q, {}, to_ticks(obs.query_time, q)};
  for (const auto &[e, t] : obs.events)
    search.observed.emplace_back(e, to_ticks(t, q));
  std::vector<std::pair<std::size_t, Ticks>> starts;
  for (const auto &x0 : model.initial())
    starts.emplace_back(model.state_index(x0), 0);
  return search.run(starts);
}

std::set<StateId> brute_reachable(const Tfa &model, const Rational &step, const StateId &from,
                                  const std::vector<TimePoint> &start_clocks,
                                  const TimePoint &duration, bool unobservable_only) {
  const Ticks q = per_unit(step);
  GridSearch search{model, q, {}, to_ticks(duration, q)};
  search.observable_free = true;
  search.observable_blocked = unobservable_only;
  std::vector<std::pair<std::size_t, Ticks>> starts;
  for (const auto &c : start_clocks)
    starts.emplace_back(model.state_index(from), to_ticks(c, q));
  return search.run(starts);
}

SampledRun sample_run(const Tfa &model, const GridConfig &grid, std::mt19937_64 &rng) {
  const Ticks q = per_unit(grid.step);
  const Ticks horizon = to_ticks(grid.horizon, q);
  std::uniform_int_distribution<std::size_t> pick_initial(0, model.initial().size() - 1);
  std::bernoulli_distribution stop(0.2);

  const StateId &x0 = model.initial()[pick_initial(rng)];
  SampledRun out{{{x0, TimePoint(0)}, TimePoint(0), {}}, TimePoint(0)};
  std::size_t x = model.state_index(x0);
  Ticks c = 0;
  Ticks now = 0;

  while (out.run.steps.size() < grid.max_events && !stop(rng)) {
    std::vector<std::pair<Ticks, std::size_t>> options;
    for (Ticks d = 0; now + d <= horizon; ++d)
      for (std::size_t ti : model.outputs(x))
        if (guard_holds(model.transitions()[ti].guard, c + d, q))
          options.emplace_back(d, ti);
    if (options.empty())
      break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    const auto [d, ti] = options[pick(rng)];
    const Transition &t = model.transitions()[ti];
    const auto values = targets(t, c + d, q);
    std::uniform_int_distribution<std::size_t> pick_value(0, values.size() - 1);
    now += d;
    c = values[pick_value(rng)];
    x = model.state_index(t.target);
    out.run.steps.push_back({t.event, from_ticks(now, q), {t.target, from_ticks(c, q)}});
  }
  std::uniform_int_distribution<Ticks> pick_query(now, horizon);
  out.query_time = from_ticks(pick_query(rng), q);
  return out;
}

std::string model_digest(const Tfa &model) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_model(model)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

TrialRecord differential_probe(const Tfa &model, const GridConfig &grid,
                               const TimedObservation &obs,
                               const std::optional<StateId> &actual) {
  const ZoneAutomaton za = ZoneAutomaton::build(model);
  TrialRecord rec;
  rec.model_digest = model_digest(model);
  rec.obs = format_observed_word(obs.events);
  rec.query_time = obs.query_time;
  rec.estimator = estimate(za, obs).discrete;
  rec.oracle = brute_consistent_states(model, grid, obs);
  if (actual && rec.estimator.count(*actual) == 0)
    rec.verdict = "unsound";
  else if (rec.estimator != rec.oracle)
    rec.verdict = "mismatch";
  else
    rec.verdict = "ok";
  return rec;
}

namespace {

// Greedily drops observations (and pulls the query time back to the last
// remaining one) while estimator and oracle still disagree.
std::string minimize(const Tfa &model, const GridConfig &grid, TimedObservation obs) {
  auto fails = [&](const TimedObservation &o) {
    return differential_probe(model, grid, o).verdict != "ok";
  };
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i = 0; i < obs.events.size(); ++i) {
      TimedObservation smaller = obs;
      smaller.events.erase(smaller.events.begin() + static_cast<std::ptrdiff_t>(i));
      if (fails(smaller)) {
        obs = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  return format_observed_word(obs.events) + " ; t=" + obs.query_time.to_string();
}

} // namespace

DifferentialReport differential_check(const RandomModelConfig &config, const GridConfig &grid,
                                      std::size_t trials, std::size_t runs_per_trial) {
  check_grid(grid);
  DifferentialReport report;
  report.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    RandomModelConfig cfg = config;
    cfg.rng_seed = config.rng_seed + i;
    const Tfa model = random_model(cfg);
    std::mt19937_64 rng(cfg.rng_seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t r = 0; r < runs_per_trial; ++r) {
      const SampledRun sample = sample_run(model, grid, rng);
      const TimedObservation obs{project(sample.run.word(), model), sample.query_time};
      TrialRecord rec = differential_probe(model, grid, obs, sample.run.end_state());
      rec.seed = cfg.rng_seed;
      ++report.runs;
      if (rec.verdict == "unsound") {
        ++report.soundness_violations;
        rec.minimized = format_observed_word(obs.events) + " ; t=" + obs.query_time.to_string();
      } else if (rec.verdict == "mismatch") {
        ++report.mismatches;
        rec.minimized = minimize(model, grid, obs);
      }
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

std::string DifferentialReport::to_jsonl() const {
  std::string out;
  for (const auto &r : records) {
    nlohmann::ordered_json j;
    j["seed"] = r.seed;
    j["model_digest"] = r.model_digest;
    j["obs"] = r.obs;
    j["time"] = r.query_time.to_string();
    j["estimator"] = r.estimator;
    j["oracle"] = r.oracle;
    j["verdict"] = r.verdict;
    if (!r.minimized.empty())
      j["minimized"] = r.minimized;
    out += j.dump() + "\n";
  }
  return out;
}

} // namespace tfaest
