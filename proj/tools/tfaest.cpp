// tfaest: zone automata and state estimation for one-clock timed automata.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tfaest/estimation.hpp"
#include "tfaest/model_io.hpp"
#include "tfaest/observation_text.hpp"
#include "tfaest/observer.hpp"
#include "tfaest/oracle.hpp"
#include "tfaest/render.hpp"
#include "tfaest/zone_automaton.hpp"

using namespace tfaest;

namespace {

constexpr int kOk = 0;
constexpr int kEmpty = 1;
constexpr int kInvalid = 2;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TimePoint parse_time(const std::string &text, const char *what) {
  try {
    return TimePoint::parse(text);
  } catch (const std::invalid_argument &) {
    throw UsageError(std::string("bad ") + what + ": '" + text + "'");
  }
}

ZoneAutomaton load(const std::string &path) { return ZoneAutomaton::build(load_model(path)); }

void write_to(const std::string &path, const std::string &text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << text;
}

int run_validate(const std::string &path, bool require_ro) {
  const Tfa model = load_model(path);
  const auto diagnostics = validate(model, require_ro);
  if (diagnostics.empty()) {
    std::cout << "ok\n";
    return kOk;
  }
  for (const auto &d : diagnostics)
    std::cout << to_string(d.kind) << ": " << d.message << "\n";
  return kInvalid;
}

int run_zones(const std::string &path, const std::string &state) {
  const auto za = load(path);
  if (state.empty()) {
    std::cout << render_zones(za);
  } else {
    if (!za.model().has_state(state))
      throw UsageError("unknown state '" + state + "'");
    std::cout << render_zones(za, state);
  }
  return kOk;
}

int run_za(const std::string &path, const std::string &dot) {
  const auto za = load(path);
  std::size_t tau = 0;
  for (const auto &e : za.edges())
    tau += e.is_tau() ? 1 : 0;
  std::cout << "extended states: " << za.size() << "\n"
            << "edges: " << za.edges().size() << " (" << tau << " tau)\n"
            << "initial:";
  for (const auto &v : za.initial())
    std::cout << " " << za.name(v);
  std::cout << "\n";
  if (!dot.empty())
    write_to(dot, render_dot(za));
  return kOk;
}

int run_reach(const std::string &path, const std::string &from, const std::string &to,
              const std::string &duration) {
  const auto za = load(path);
  for (const auto *x : {&from, &to})
    if (!za.model().has_state(*x))
      throw UsageError("unknown state '" + *x + "'");
  const TimePoint T = parse_time(duration, "duration");
  const auto witness = t_reachable(za, from, to, T);
  if (!witness) {
    std::cout << "no\n";
    return kOk;
  }
  std::cout << "yes\n";
  std::cout << "zone run:";
  for (std::size_t j = 0; j < witness->run.segments.size(); ++j) {
    if (j > 0) {
      const auto &edge = za.edges()[witness->run.events[j - 1]];
      std::cout << " -" << za.model().alphabet()[*edge.event] << "->";
    }
    for (const auto &v : witness->run.segments[j])
      std::cout << " (" << za.name(v) << ")";
  }
  std::cout << "\nwitness: " << render_run(witness->timed_run) << " dwell until " << T << "\n";
  return kOk;
}

TimedObservation observation(const ZoneAutomaton &za, const std::string &obs_text,
                             const std::string &time_text) {
  TimedObservation obs;
  try {
    obs.events = parse_observed_word(obs_text);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("malformed observation: ") + e.what());
  }
  if (!time_text.empty())
    obs.query_time = parse_time(time_text, "time");
  else if (!obs.events.empty())
    obs.query_time = obs.events.back().time;
  try {
    check_observation(za.model(), obs);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("malformed observation: ") + e.what());
  }
  return obs;
}

int run_estimate(const std::string &path, const std::string &obs_text, const std::string &time,
                 bool json) {
  const auto za = load(path);
  const TimedObservation obs = observation(za, obs_text, time);
  const Estimate est = estimate(za, obs);
  if (json) {
    const TimePoint anchor = obs.events.empty() ? TimePoint(0) : obs.events.back().time;
    std::cout << render_estimate_json(za, est, anchor) << "\n";
  } else {
    std::cout << render_states(est.discrete) << "\n";
  }
  return est.inconsistent() ? kEmpty : kOk;
}

int run_watch(const std::string &path, bool json) {
  const auto za = load(path);
  require_valid(za.model(), true);
  BeliefState belief = belief_init(za);
  std::string line;
  while (std::getline(std::cin, line)) {
    std::istringstream in(line);
    std::string cmd;
    if (!(in >> cmd))
      continue;
    try {
      if (cmd == "quit") {
        break;
      } else if (cmd == "obs") {
        std::string e, t;
        if (!(in >> e >> t))
          throw UsageError("expected: obs <event> <time>");
        belief = belief_advance(za, belief, e, parse_time(t, "time"));
        if (belief.support.empty())
          std::cout << "inconsistent\n";
      } else if (cmd == "query") {
        std::string t;
        if (!(in >> t))
          throw UsageError("expected: query <time>");
        const Estimate est = belief_query(za, belief, parse_time(t, "time"));
        if (json)
          std::cout << render_estimate_json(za, est, belief.anchor) << "\n";
        else
          std::cout << render_states(est.discrete) << "\n";
      } else {
        throw UsageError("unknown command '" + cmd + "'");
      }
    } catch (const std::exception &e) {
      std::cout << "error: " << e.what() << "\n";
    }
    std::cout.flush();
  }
  return kOk;
}

int run_observer(const std::string &path, std::int64_t horizon, const std::string &out) {
  const auto za = load(path);
  if (horizon <= 0)
    horizon = default_observer_horizon(za);
  const auto observer = OfflineObserver::build(za, horizon);
  std::size_t cells = 0;
  for (const auto &n : observer.nodes())
    cells += n.cells.size();
  write_to(out, render_observer_json(za, observer) + "\n");
  if (out != "-")
    std::cout << "horizon " << horizon << ": " << observer.nodes().size() << " supports, "
              << cells << " cells\n";
  return kOk;
}

int run_oracle(const std::string &path, const std::string &grid_text, const std::string &obs_text,
               const std::string &time) {
  const Tfa model = load_model(path);
  require_valid(model, false);
  const auto za = ZoneAutomaton::build(model);
  const TimedObservation obs = observation(za, obs_text, time);
  GridConfig grid;
  grid.step = parse_time(grid_text, "grid step").value();
  std::set<StateId> states;
  try {
    states = brute_consistent_states(model, grid, obs);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  std::cout << render_states(states) << "\n";
  return states.empty() ? kEmpty : kOk;
}

int run_fuzz(std::size_t states, std::size_t trials, std::uint64_t seed, std::size_t runs,
             const std::string &out) {
  RandomModelConfig config;
  config.state_count = states;
  config.rng_seed = seed;
  const auto report = differential_check(config, GridConfig{}, trials, runs);
  if (!out.empty())
    write_to(out, report.to_jsonl());
  std::cout << "trials " << report.trials << ", runs " << report.runs << ", mismatches "
            << report.mismatches << ", soundness violations " << report.soundness_violations
            << "\n";
  return report.clean() ? kOk : kEmpty;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Zone automata and state estimation for one-clock timed automata"};
  app.require_subcommand(1);

  std::string model, state, dot, from, to, duration, obs, time, out = "-", grid = "0.5";
  bool require_ro = false, json = false;
  std::int64_t horizon = 0;
  std::size_t states = 4, trials = 20, runs = 5;
  std::uint64_t seed = 1;

  auto with_model = [&model](CLI::App *sub) {
    sub->add_option("model", model, "Model JSON file")->required()->check(CLI::ExistingFile);
    return sub;
  };

  auto *validate_cmd = with_model(app.add_subcommand("validate", "Check a model"));
  validate_cmd->add_flag("--require-ro", require_ro, "Also require observable events to reset");

  auto *zones_cmd = with_model(app.add_subcommand("zones", "List zones per state"));
  zones_cmd->add_option("--state", state, "Only this state");

  auto *za_cmd = with_model(app.add_subcommand("za", "Summarize the zone automaton"));
  za_cmd->add_option("--dot", dot, "Write Graphviz DOT here ('-' for stdout)");

  auto *reach_cmd = with_model(app.add_subcommand("reach", "Decide T-reachability"));
  reach_cmd->add_option("--from", from)->required();
  reach_cmd->add_option("--to", to)->required();
  reach_cmd->add_option("--duration", duration)->required();

  auto *estimate_cmd = with_model(app.add_subcommand("estimate", "Estimate consistent states"));
  estimate_cmd->add_option("--obs", obs, "Observation, e.g. \"a@1,a@3\"");
  estimate_cmd->add_option("--time", time, "Query instant (default: last observation)");
  estimate_cmd->add_flag("--json", json);

  auto *watch_cmd = with_model(app.add_subcommand("watch", "Online estimation from stdin"));
  watch_cmd->add_flag("--json", json);

  auto *observer_cmd = with_model(app.add_subcommand("observer", "Build the offline observer"));
  observer_cmd->add_option("--horizon", horizon, "Elapsed-time horizon (default 2*K*|V|)");
  observer_cmd->add_option("--out", out, "Output path ('-' for stdout)");

  auto *oracle_cmd = with_model(app.add_subcommand("oracle", "Brute-force consistent states"));
  oracle_cmd->add_option("--grid", grid, "Grid step, 1/q");
  oracle_cmd->add_option("--obs", obs);
  oracle_cmd->add_option("--time", time);

  auto *fuzz_cmd = app.add_subcommand("fuzz", "Differential test against the oracle");
  fuzz_cmd->add_option("--states", states)->check(CLI::Range(1, 6));
  fuzz_cmd->add_option("--trials", trials);
  fuzz_cmd->add_option("--seed", seed);
  fuzz_cmd->add_option("--runs", runs, "Sampled runs per model");
  fuzz_cmd->add_option("--out", out, "JSON-lines report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd)
      return run_validate(model, require_ro);
    if (*zones_cmd)
      return run_zones(model, state);
    if (*za_cmd)
      return run_za(model, dot);
    if (*reach_cmd)
      return run_reach(model, from, to, duration);
    if (*estimate_cmd)
      return run_estimate(model, obs, time, json);
    if (*watch_cmd)
      return run_watch(model, json);
    if (*observer_cmd)
      return run_observer(model, horizon, out);
    if (*oracle_cmd)
      return run_oracle(model, grid, obs, time);
    if (*fuzz_cmd)
      return run_fuzz(states, trials, seed, runs, out == "-" ? std::string() : out);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ModelError &e) {
    std::cerr << e.what() << "\n";
    for (const auto &d : e.diagnostics())
      std::cerr << "  " << to_string(d.kind) << ": " << d.message << "\n";
    return kInvalid;
  } catch (const ModelFormatError &e) {
    std::cerr << "invalid model: " << e.what() << "\n";
    return kInvalid;
  } catch (const ZoneConstructionError &e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
