#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "tfaest/interval.hpp"
#include "tfaest/time.hpp"

namespace tfaest {

using StateId = std::string;
using EventId = std::string;

/// Clock update performed by a transition: either keep the clock (`id`) or
/// reset it to any value of a closed interval.
class Reset {
public:
  static Reset identity() { return Reset(); }
  static Reset to(Interval interval) { return Reset(interval); }
  /// Parses `id` or an interval text.
  static Reset parse(std::string_view text);

  bool is_identity() const { return !interval_; }
  /// Precondition: !is_identity().
  const Interval &interval() const { return *interval_; }

  std::string to_string() const;

  friend bool operator==(const Reset &, const Reset &) = default;

private:
  Reset() = default;
  explicit Reset(Interval interval) : interval_(interval) {}

  std::optional<Interval> interval_;
};

struct Transition {
  StateId source;
  EventId event;
  StateId target;
  Interval guard;
  Reset reset;

  friend bool operator==(const Transition &, const Transition &) = default;
};

struct Diagnostic {
  enum class Kind {
    EmptyInitial,
    DuplicateState,
    DuplicateEvent,
    UnknownInitialState,
    UnknownObservableEvent,
    UnknownSource,
    UnknownTarget,
    UnknownEvent,
    DuplicateTransition,
    GuardNotClosed,
    ResetNotClosed,
    ObservableWithoutReset, // observable transition keeps the clock
  };

  Kind kind;
  std::string message;
  std::optional<std::size_t> transition; // index into Tfa::transitions()

  friend bool operator==(const Diagnostic &, const Diagnostic &) = default;
};

const char *to_string(Diagnostic::Kind kind);

class ModelError : public std::runtime_error {
public:
  ModelError(const std::string &what, std::vector<Diagnostic> diagnostics)
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}
  const std::vector<Diagnostic> &diagnostics() const { return diagnostics_; }

private:
  std::vector<Diagnostic> diagnostics_;
};

/// A timed finite automaton with a single clock and an observable /
/// unobservable split of its alphabet.
///
/// Construction accepts any content; validate() reports what is wrong.
/// Index-based accessors (state_index, outputs, inputs) assume a
/// well-formed model.
class Tfa {
public:
  Tfa() = default;
  Tfa(std::vector<StateId> states, std::vector<EventId> alphabet,
      std::vector<EventId> observable, std::vector<StateId> initial,
      std::vector<Transition> transitions);

  const std::vector<StateId> &states() const { return states_; }
  const std::vector<EventId> &alphabet() const { return alphabet_; }
  const std::vector<EventId> &observable_events() const { return observable_; }
  const std::vector<StateId> &initial() const { return initial_; }
  const std::vector<Transition> &transitions() const { return transitions_; }

  bool has_state(const StateId &x) const { return state_index_.count(x) != 0; }
  bool has_event(const EventId &e) const { return event_index_.count(e) != 0; }
  bool is_observable(const EventId &e) const;

  /// Throws std::out_of_range for unknown states.
  std::size_t state_index(const StateId &x) const;
  std::size_t event_index(const EventId &e) const;

  /// Indices of transitions leaving / entering state `x` (by index).
  const std::vector<std::size_t> &outputs(std::size_t x) const { return outputs_.at(x); }
  const std::vector<std::size_t> &inputs(std::size_t x) const { return inputs_.at(x); }

  /// Largest finite constant among guards and resets (0 if none).
  std::int64_t max_constant() const;

  /// Every observable transition resets the clock.
  bool satisfies_ro() const;

private:
  std::vector<StateId> states_;
  std::vector<EventId> alphabet_;
  std::vector<EventId> observable_;
  std::vector<StateId> initial_;
  std::vector<Transition> transitions_;

  std::unordered_map<StateId, std::size_t> state_index_;
  std::unordered_map<EventId, std::size_t> event_index_;
  std::vector<bool> observable_mask_;
  std::vector<std::vector<std::size_t>> outputs_;
  std::vector<std::vector<std::size_t>> inputs_;
};

/// Structured list of violated invariants; empty iff well-formed (and, with
/// `require_ro`, every observable transition resets the clock).
std::vector<Diagnostic> validate(const Tfa &model, bool require_ro);

/// Throws ModelError carrying the diagnostics unless validate() is clean.
void require_valid(const Tfa &model, bool require_ro);

struct TimedState {
  StateId state;
  TimePoint clock;

  friend bool operator==(const TimedState &, const TimedState &) = default;
};

struct TimedEvent {
  EventId event;
  TimePoint time;

  friend bool operator==(const TimedEvent &, const TimedEvent &) = default;
};

using TimedWord = std::vector<TimedEvent>;

struct RunStep {
  EventId event;
  TimePoint time;
  TimedState after;

  friend bool operator==(const RunStep &, const RunStep &) = default;
};

struct TimedRun {
  TimedState start;
  TimePoint start_time{0};
  std::vector<RunStep> steps;

  const StateId &end_state() const { return steps.empty() ? start.state : steps.back().after.state; }
  const TimePoint &end_time() const { return steps.empty() ? start_time : steps.back().time; }
  TimedWord word() const;
  std::vector<EventId> logical_word() const;

  friend bool operator==(const TimedRun &, const TimedRun &) = default;
};

/// A projected observation: observed events with timestamps, plus the
/// instant at which the estimate is requested.
struct TimedObservation {
  TimedWord events;
  TimePoint query_time{0};
};

/// Throws std::invalid_argument unless timestamps are non-decreasing, not
/// later than the query time, and every event is observable.
void check_observation(const Tfa &model, const TimedObservation &obs);

/// True iff every step respects guards, resets and time monotonicity.
bool check_run(const Tfa &model, const TimedRun &run);

/// Erases unobservable events, keeping order and timestamps.
TimedWord project(const TimedWord &word, const Tfa &model);

std::vector<EventId> project_logical(const std::vector<EventId> &events, const Tfa &model);

} // namespace tfaest
