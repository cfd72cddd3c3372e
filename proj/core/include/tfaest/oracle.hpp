#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tfaest/model.hpp"
#include "tfaest/random_model.hpp"

namespace tfaest {

/// Discrete probe of the dense-time semantics: event times, dwell times and
/// reset values are multiples of `step`.
struct GridConfig {
  Rational step{1, 2};
  TimePoint horizon{5};
  std::size_t max_events = 6;
};

/// Throws std::invalid_argument unless step divides 1 and the horizon is on
/// the grid.
void check_grid(const GridConfig &grid);

/// Calls `emit` for every legal run from an initial state (clock 0, time 0)
/// with grid event times up to the horizon and at most max_events steps.
/// Stops early when `emit` returns false.
void enumerate_runs(const Tfa &model, const GridConfig &grid,
                    const std::function<bool(const TimedRun &)> &emit);

/// Discrete states consistent with `obs`, straight from the run semantics:
/// end states of grid runs whose observable projection is obs.events and
/// whose end time is at most obs.query_time. Throws std::invalid_argument
/// for timestamps off the grid.
std::set<StateId> brute_consistent_states(const Tfa &model, const GridConfig &grid,
                                          const TimedObservation &obs);

/// States occupied exactly `duration` after starting in `from` with any of
/// `start_clocks`, over grid evolutions (only unobservable events when
/// `unobservable_only`).
std::set<StateId> brute_reachable(const Tfa &model, const Rational &step, const StateId &from,
                                  const std::vector<TimePoint> &start_clocks,
                                  const TimePoint &duration, bool unobservable_only);

/// A random legal grid run from an initial state together with a grid query
/// instant at or after its last event.
struct SampledRun {
  TimedRun run;
  TimePoint query_time;
};
SampledRun sample_run(const Tfa &model, const GridConfig &grid, std::mt19937_64 &rng);

struct TrialRecord {
  std::uint64_t seed = 0;
  std::string model_digest;
  std::string obs;
  TimePoint query_time;
  std::set<StateId> estimator;
  std::set<StateId> oracle;
  /// "ok", "mismatch" or "unsound".
  std::string verdict;
  /// For failures: the smallest observation found that still fails.
  std::string minimized;
};

struct DifferentialReport {
  std::vector<TrialRecord> records;
  std::size_t trials = 0;
  std::size_t runs = 0;
  std::size_t mismatches = 0;
  std::size_t soundness_violations = 0;

  bool clean() const { return mismatches == 0 && soundness_violations == 0; }
  /// One JSON object per record, in record order.
  std::string to_jsonl() const;
};

/// FNV-1a of the canonical model serialization, as 16 hex digits.
std::string model_digest(const Tfa &model);

/// `trials` random models (seeds config.rng_seed, +1, ...), each probed with
/// `runs_per_trial` sampled runs: estimator against brute_consistent_states,
/// and the run's own end state against the estimator.
DifferentialReport differential_check(const RandomModelConfig &config, const GridConfig &grid,
                                      std::size_t trials, std::size_t runs_per_trial = 5);

/// One probe of an already built model; used by differential_check().
TrialRecord differential_probe(const Tfa &model, const GridConfig &grid,
                               const TimedObservation &obs,
                               const std::optional<StateId> &actual = std::nullopt);

} // namespace tfaest
