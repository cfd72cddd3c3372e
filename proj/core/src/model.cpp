#include "tfaest/model.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace tfaest {

Reset Reset::parse(std::string_view text) {
  if (text == "id")
    return identity();
  return to(Interval::parse(text));
}

std::string Reset::to_string() const {
  return is_identity() ? std::string("id") : interval_->to_string();
}

const char *to_string(Diagnostic::Kind kind) {
  using K = Diagnostic::Kind;
  switch (kind) {
  case K::EmptyInitial: return "empty-initial";
  case K::DuplicateState: return "duplicate-state";
  case K::DuplicateEvent: return "duplicate-event";
  case K::UnknownInitialState: return "unknown-initial-state";
  case K::UnknownObservableEvent: return "unknown-observable-event";
  case K::UnknownSource: return "unknown-source";
  case K::UnknownTarget: return "unknown-target";
  case K::UnknownEvent: return "unknown-event";
  case K::DuplicateTransition: return "duplicate-transition";
  case K::GuardNotClosed: return "guard-not-closed";
  case K::ResetNotClosed: return "reset-not-closed";
  case K::ObservableWithoutReset: return "ro-violation";
  }
  return "unknown";
}

Tfa::Tfa(std::vector<StateId> states, std::vector<EventId> alphabet,
         std::vector<EventId> observable, std::vector<StateId> initial,
         std::vector<Transition> transitions)
    : states_(std::move(states)), alphabet_(std::move(alphabet)),
      observable_(std::move(observable)), initial_(std::move(initial)),
      transitions_(std::move(transitions)) {
  for (std::size_t i = 0; i < states_.size(); ++i)
    state_index_.emplace(states_[i], i);
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    event_index_.emplace(alphabet_[i], i);

  observable_mask_.assign(alphabet_.size(), false);
  for (const auto &e : observable_)
    if (auto it = event_index_.find(e); it != event_index_.end())
      observable_mask_[it->second] = true;

  outputs_.resize(states_.size());
  inputs_.resize(states_.size());
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const auto &t = transitions_[i];
    auto src = state_index_.find(t.source);
    auto dst = state_index_.find(t.target);
    if (src == state_index_.end() || dst == state_index_.end())
      continue;
    outputs_[src->second].push_back(i);
    inputs_[dst->second].push_back(i);
  }
}

bool Tfa::is_observable(const EventId &e) const {
  auto it = event_index_.find(e);
  return it != event_index_.end() && observable_mask_[it->second];
}

std::size_t Tfa::state_index(const StateId &x) const {
  auto it = state_index_.find(x);
  if (it == state_index_.end())
    throw std::out_of_range("unknown state: " + x);
  return it->second;
}

std::size_t Tfa::event_index(const EventId &e) const {
  auto it = event_index_.find(e);
  if (it == event_index_.end())
    throw std::out_of_range("unknown event: " + e);
  return it->second;
}

std::int64_t Tfa::max_constant() const {
  std::int64_t k = 0;
  auto visit = [&k](const Interval &i) {
    k = std::max(k, i.lower().value());
    if (i.is_bounded())
      k = std::max(k, i.upper().value());
  };
  for (const auto &t : transitions_) {
    visit(t.guard);
    if (!t.reset.is_identity())
      visit(t.reset.interval());
  }
  return k;
}

bool Tfa::satisfies_ro() const {
  return std::none_of(transitions_.begin(), transitions_.end(), [this](const Transition &t) {
    return is_observable(t.event) && t.reset.is_identity();
  });
}

std::vector<Diagnostic> validate(const Tfa &model, bool require_ro) {
  using K = Diagnostic::Kind;
  std::vector<Diagnostic> out;

  std::set<StateId> seen_states;
  for (const auto &x : model.states())
    if (!seen_states.insert(x).second)
      out.push_back({K::DuplicateState, "state '" + x + "' declared twice", std::nullopt});
  std::set<EventId> seen_events;
  for (const auto &e : model.alphabet())
    if (!seen_events.insert(e).second)
      out.push_back({K::DuplicateEvent, "event '" + e + "' declared twice", std::nullopt});

  if (model.initial().empty())
    out.push_back({K::EmptyInitial, "no initial state", std::nullopt});
  for (const auto &x : model.initial())
    if (!model.has_state(x))
      out.push_back({K::UnknownInitialState, "initial state '" + x + "' is not a state",
                     std::nullopt});
  for (const auto &e : model.observable_events())
    if (!model.has_event(e))
      out.push_back({K::UnknownObservableEvent,
                     "observable event '" + e + "' is not in the alphabet", std::nullopt});

  std::set<std::tuple<StateId, EventId, StateId>> triples;
  for (std::size_t i = 0; i < model.transitions().size(); ++i) {
    const auto &t = model.transitions()[i];
    const std::string name = "(" + t.source + "," + t.event + "," + t.target + ")";
    if (!model.has_state(t.source))
      out.push_back({K::UnknownSource, name + ": unknown source state", i});
    if (!model.has_state(t.target))
      out.push_back({K::UnknownTarget, name + ": unknown target state", i});
    if (!model.has_event(t.event))
      out.push_back({K::UnknownEvent, name + ": event not in alphabet", i});
    if (!triples.emplace(t.source, t.event, t.target).second)
      out.push_back({K::DuplicateTransition, name + ": transition declared twice", i});
    if (!t.guard.is_closed())
      out.push_back({K::GuardNotClosed,
                     name + ": guard " + t.guard.to_string() + " is not a closed bounded interval",
                     i});
    if (!t.reset.is_identity() && !t.reset.interval().is_closed())
      out.push_back({K::ResetNotClosed,
                     name + ": reset " + t.reset.to_string() +
                         " is neither id nor a closed bounded interval",
                     i});
    if (require_ro && model.is_observable(t.event) && t.reset.is_identity())
      out.push_back({K::ObservableWithoutReset,
                     name + ": observable transition does not reset the clock", i});
  }
  return out;
}

void require_valid(const Tfa &model, bool require_ro) {
  auto diagnostics = validate(model, require_ro);
  if (diagnostics.empty())
    return;
  std::string what = "invalid model: " + diagnostics.front().message;
  if (diagnostics.size() > 1)
    what += " (and " + std::to_string(diagnostics.size() - 1) + " more)";
  throw ModelError(what, std::move(diagnostics));
}

TimedWord TimedRun::word() const {
  TimedWord out;
  out.reserve(steps.size());
  for (const auto &s : steps)
    out.push_back({s.event, s.time});
  return out;
}

std::vector<EventId> TimedRun::logical_word() const {
  std::vector<EventId> out;
  out.reserve(steps.size());
  for (const auto &s : steps)
    out.push_back(s.event);
  return out;
}

void check_observation(const Tfa &model, const TimedObservation &obs) {
  const TimePoint *previous = nullptr;
  for (const auto &[event, time] : obs.events) {
    if (!model.is_observable(event))
      throw std::invalid_argument("event '" + event + "' is not observable");
    if (previous && time < *previous)
      throw std::invalid_argument("observation timestamps must be non-decreasing");
    previous = &time;
  }
  if (previous && obs.query_time < *previous)
    throw std::invalid_argument("query time precedes the last observation");
}

bool check_run(const Tfa &model, const TimedRun &run) {
  if (!model.has_state(run.start.state))
    return false;
  const TimedState *current = &run.start;
  const TimePoint *now = &run.start_time;

  for (const auto &step : run.steps) {
    if (step.time < *now)
      return false;
    const TimePoint reached = current->clock + (step.time - *now);
    const auto &outs = model.outputs(model.state_index(current->state));
    bool legal = std::any_of(outs.begin(), outs.end(), [&](std::size_t i) {
      const auto &t = model.transitions()[i];
      if (t.event != step.event || t.target != step.after.state)
        return false;
      if (!contains(t.guard, reached))
        return false;
      if (t.reset.is_identity())
        return step.after.clock == reached;
      return contains(t.reset.interval(), step.after.clock);
    });
    if (!legal)
      return false;
    current = &step.after;
    now = &step.time;
  }
  return true;
}

TimedWord project(const TimedWord &word, const Tfa &model) {
  TimedWord out;
  std::copy_if(word.begin(), word.end(), std::back_inserter(out),
               [&](const TimedEvent &te) { return model.is_observable(te.event); });
  return out;
}

std::vector<EventId> project_logical(const std::vector<EventId> &events, const Tfa &model) {
  std::vector<EventId> out;
  std::copy_if(events.begin(), events.end(), std::back_inserter(out),
               [&](const EventId &e) { return model.is_observable(e); });
  return out;
}

} // namespace tfaest
