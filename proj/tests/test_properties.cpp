#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "tfaest/observer.hpp"
#include "tfaest/oracle.hpp"
#include "tfaest/random_model.hpp"

using namespace tfaest;
using test::tp;

namespace {

Tfa model_for(std::uint64_t seed, bool ro, std::size_t states = 4, double id = 0.3) {
  RandomModelConfig cfg;
  cfg.rng_seed = seed;
  cfg.state_count = states;
  cfg.require_ro = ro;
  cfg.reset_id_probability = id;
  return random_model(cfg);
}

// Start clocks beyond max constant + 1/2 behave like max constant + 1/2.
std::vector<TimePoint> start_clocks(const Tfa &m, std::int64_t den, const Interval &within) {
  std::vector<TimePoint> out;
  for (const auto &c : test::grid_points(den, m.max_constant() + 1))
    if (contains(within, c))
      out.push_back(c);
  return out;
}

TimedObservation random_observation(const Tfa &m, std::mt19937_64 &rng) {
  const auto s = sample_run(m, GridConfig{}, rng);
  return {project(s.run.word(), m), s.query_time};
}

} // namespace

TEST_CASE("T-reachability agrees with the grid oracle") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Tfa m = model_for(seed, false, 3 + seed % 3);
    const auto za = ZoneAutomaton::build(m);
    const auto clocks = start_clocks(m, 2, Interval::at_least(0));
    for (const auto &from : m.states())
      for (const auto &T : test::grid_points(2, 5)) {
        const auto brute = brute_reachable(m, Rational(1, 2), from, clocks, T, false);
        for (const auto &to : m.states()) {
          const auto w = t_reachable(za, from, to, T);
          INFO("seed ", seed, " ", from, " -> ", to, " in ", T);
          CHECK(w.has_value() == (brute.count(to) != 0));
          if (w)
            CHECK(check_run(m, w->timed_run));
        }
      }
  }
}

TEST_CASE("lambda-estimation matches unobservable reachability per zone") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const Tfa m = model_for(seed, true, 3 + seed % 3);
    const auto za = ZoneAutomaton::build(m);
    for (const auto &v : za.states()) {
      const auto clocks = start_clocks(m, 4, za.zone(v));
      for (const auto &T : test::grid_points(2, 4)) {
        std::set<StateId> est;
        for (const auto &u : lambda_estimation(za, v, T))
          est.insert(za.state_name(u));
        INFO("seed ", seed, " from ", za.name(v), " within ", T);
        CHECK(est == brute_reachable(m, Rational(1, 4), za.state_name(v), clocks, T, true));
      }
    }
  }
}

TEST_CASE("exact lambda-estimation is inside the summed-range one") {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    const bool with_id = seed % 2 == 0;
    const Tfa m = model_for(seed, true, 4, with_id ? 0.5 : 0.0);
    const auto za = ZoneAutomaton::build(m);
    for (const auto &v : za.states())
      for (const auto &dt : test::grid_points(2, 4)) {
        const auto exact = lambda_estimation(za, v, dt);
        const auto wide = lambda_estimation_duration_sum(za, v, dt);
        CHECK(std::includes(wide.begin(), wide.end(), exact.begin(), exact.end()));
        if (!with_id)
          CHECK(exact == wide);
      }
  }
}

TEST_CASE("batch and incremental estimation agree") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 300; seed < 350; ++seed) {
    const auto za = ZoneAutomaton::build(model_for(seed, true));
    for (int k = 0; k < 4; ++k) {
      const auto obs = random_observation(za.model(), rng);
      BeliefState b = belief_init(za);
      for (const auto &[e, t] : obs.events)
        b = belief_advance(za, b, e, t);
      CHECK(estimate(za, obs) == belief_query(za, b, obs.query_time));
    }
  }
}

TEST_CASE("offline observer agrees with online estimation") {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 400; seed < 420; ++seed) {
    const auto za = ZoneAutomaton::build(model_for(seed, true));
    const auto observer = OfflineObserver::build(za, 3);
    for (std::size_t n = 0; n < observer.nodes().size(); ++n) {
      const BeliefState b{observer.nodes()[n].support, TimePoint(0), observer.nodes()[n].clock_at_zero};
      for (const auto &dt : test::grid_points(4, 3))
        CHECK(observer.cell(n, dt)->estimate == belief_query(za, b, dt));
    }
    for (int k = 0; k < 4; ++k) {
      const auto obs = random_observation(za.model(), rng);
      ObserverSession s(za, observer);
      for (const auto &[e, t] : obs.events)
        s.advance(e, t);
      CHECK(s.query(obs.query_time) == estimate(za, obs));
    }
  }
}

TEST_CASE("estimates are constant inside each observer region") {
  for (std::uint64_t seed = 500; seed < 510; ++seed) {
    const auto za = ZoneAutomaton::build(model_for(seed, true));
    const auto observer = OfflineObserver::build(za, 3);
    for (std::size_t n = 0; n < observer.nodes().size(); ++n) {
      const auto &node = observer.nodes()[n];
      auto closure = [&](const TimePoint &dt) {
        return silent_closure(za, node.support, dt, node.clock_at_zero);
      };
      for (std::int64_t k = 0; k < 3; ++k) {
        const auto mid = closure(TimePoint(Rational(2 * k + 1, 2)));
        for (auto q : {Rational(1, 7), Rational(2, 3), Rational(99, 100)})
          CHECK(closure(TimePoint(k + q)) == mid);
      }
    }
  }
}

TEST_CASE("estimator never misses the true state") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 600; seed < 640; ++seed) {
    const Tfa m = model_for(seed, true, 5);
    const auto za = ZoneAutomaton::build(m);
    for (int k = 0; k < 10; ++k) {
      const auto s = sample_run(m, GridConfig{}, rng);
      const auto est = estimate(za, {project(s.run.word(), m), s.query_time});
      CHECK(est.discrete.count(s.run.end_state()) == 1);
    }
  }
}
