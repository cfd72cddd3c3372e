#include <benchmark/benchmark.h>

#include "tfaest/model_io.hpp"
#include "tfaest/observer.hpp"
#include "tfaest/random_model.hpp"

using namespace tfaest;

namespace {

TimedObservation ring_observation() {
  return {{{"a", TimePoint::parse("1")}, {"a", TimePoint::parse("2.5")},
           {"a", TimePoint::parse("4")}},
          TimePoint::parse("5.5")};
}

void BM_ZoneAutomatonFigure1(benchmark::State &state) {
  const Tfa model = figure1_model();
  for (auto _ : state)
    benchmark::DoNotOptimize(ZoneAutomaton::build(model));
}
BENCHMARK(BM_ZoneAutomatonFigure1);

void BM_EstimateFigure1(benchmark::State &state) {
  const auto za = ZoneAutomaton::build(figure1_model());
  const TimedObservation obs{{{"a", TimePoint::parse("1")}, {"a", TimePoint::parse("3")}},
                             TimePoint::parse("4")};
  for (auto _ : state)
    benchmark::DoNotOptimize(estimate(za, obs));
}
BENCHMARK(BM_EstimateFigure1);

void BM_EstimateRing(benchmark::State &state) {
  const auto za = ZoneAutomaton::build(ring_model(static_cast<std::size_t>(state.range(0))));
  const TimedObservation obs = ring_observation();
  for (auto _ : state)
    benchmark::DoNotOptimize(estimate(za, obs));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EstimateRing)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_LambdaEstimationRandom(benchmark::State &state) {
  RandomModelConfig cfg;
  cfg.state_count = static_cast<std::size_t>(state.range(0));
  cfg.rng_seed = 11;
  const auto za = ZoneAutomaton::build(random_model(cfg));
  const TimePoint dt = TimePoint::parse("4.5");
  for (auto _ : state)
    for (std::size_t i = 0; i < za.size(); ++i)
      benchmark::DoNotOptimize(lambda_estimation(za, za.at(i), dt));
}
BENCHMARK(BM_LambdaEstimationRandom)->DenseRange(2, 6, 2);

void BM_OfflineObserverRing(benchmark::State &state) {
  const auto za = ZoneAutomaton::build(ring_model(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(OfflineObserver::build(za, default_observer_horizon(za)));
}
BENCHMARK(BM_OfflineObserverRing)->Arg(4)->Arg(8);

void BM_SessionRing(benchmark::State &state) {
  const auto za = ZoneAutomaton::build(ring_model(8));
  const auto observer = OfflineObserver::build(za, default_observer_horizon(za));
  const TimedObservation obs = ring_observation();
  for (auto _ : state) {
    ObserverSession session(za, observer);
    for (const auto &[e, t] : obs.events)
      session.advance(e, t);
    benchmark::DoNotOptimize(session.query(obs.query_time));
  }
}
BENCHMARK(BM_SessionRing);

} // namespace

BENCHMARK_MAIN();
