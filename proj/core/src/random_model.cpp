#include "tfaest/random_model.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace tfaest {

namespace {

Interval random_closed(std::mt19937_64 &rng, std::int64_t k) {
  std::uniform_int_distribution<std::int64_t> lo_dist(0, k);
  const auto lo = lo_dist(rng);
  std::uniform_int_distribution<std::int64_t> hi_dist(lo, k);
  return Interval::closed(lo, hi_dist(rng));
}

} // namespace

Tfa random_model(const RandomModelConfig &config) {
  if (config.state_count < 1 || config.state_count > 6)
    throw std::invalid_argument("state_count must be in 1..6");
  if (config.event_count < 1 || config.event_count > 3)
    throw std::invalid_argument("event_count must be in 1..3");
  if (config.max_constant < 0 || config.max_constant > 3)
    throw std::invalid_argument("max_constant must be in 0..3");

  std::mt19937_64 rng(config.rng_seed);
  std::bernoulli_distribution observable(config.observable_fraction);
  std::bernoulli_distribution present(config.transition_density);
  std::bernoulli_distribution keep_clock(config.reset_id_probability);

  std::vector<StateId> states;
  for (std::size_t i = 0; i < config.state_count; ++i)
    states.push_back("x" + std::to_string(i));
  std::vector<EventId> alphabet;
  std::vector<EventId> obs;
  for (std::size_t i = 0; i < config.event_count; ++i) {
    alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
    if (observable(rng))
      obs.push_back(alphabet.back());
  }
  if (obs.empty())
    obs.push_back(alphabet.front());
  auto is_obs = [&obs](const EventId &e) { return std::find(obs.begin(), obs.end(), e) != obs.end(); };

  auto make = [&](const StateId &src, const EventId &e, const StateId &dst) {
    const bool id = !(config.require_ro && is_obs(e)) && keep_clock(rng);
    Interval guard = random_closed(rng, config.max_constant);
    Reset reset = id ? Reset::identity() : Reset::to(random_closed(rng, config.max_constant));
    return Transition{src, e, dst, guard, reset};
  };

  std::vector<Transition> transitions;
  for (const auto &src : states)
    for (const auto &e : alphabet)
      for (const auto &dst : states)
        if (present(rng))
          transitions.push_back(make(src, e, dst));
  if (transitions.empty())
    transitions.push_back(make(states.front(), alphabet.front(), states.back()));

  return Tfa(std::move(states), std::move(alphabet), std::move(obs), {"x0"},
             std::move(transitions));
}

Tfa ring_model(std::size_t n) {
  if (n < 1)
    throw std::invalid_argument("ring needs at least one state");
  std::vector<StateId> states;
  for (std::size_t i = 0; i < n; ++i)
    states.push_back("x" + std::to_string(i));
  std::vector<Transition> transitions;
  for (std::size_t i = 0; i < n; ++i) {
    transitions.push_back({states[i], "u", states[(i + 1) % n], Interval::closed(1, 2),
                           Reset::to(Interval::point(0))});
    transitions.push_back({states[i], "a", states[(i + 3) % n], Interval::closed(0, 3),
                           Reset::to(Interval::point(0))});
  }
  std::vector<StateId> initial = states;
  return Tfa(std::move(states), {"a", "u"}, {"a"}, std::move(initial), std::move(transitions));
}

} // namespace tfaest
