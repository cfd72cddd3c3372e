#include "tfaest/render.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

namespace tfaest {

namespace {

using nlohmann::ordered_json;

std::string quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

// Extended states ordered by state name, then zone position.
std::vector<ExtendedState> sorted_states(const ZoneAutomaton &za) {
  auto all = za.states();
  std::sort(all.begin(), all.end(), [&za](const ExtendedState &a, const ExtendedState &b) {
    return std::tie(za.state_name(a), a.zone) < std::tie(za.state_name(b), b.zone);
  });
  return all;
}

ordered_json extended_json(const ZoneAutomaton &za, const ExtendedSet &set) {
  std::vector<std::pair<std::string, std::size_t>> keyed;
  for (const auto &v : set)
    keyed.emplace_back(za.state_name(v), v.zone);
  std::sort(keyed.begin(), keyed.end());
  ordered_json out = ordered_json::array();
  for (const auto &[name, zone] : keyed)
    out.push_back({name, za.zones(za.model().state_index(name))[zone].to_string()});
  return out;
}

} // namespace

std::string render_dot(const ZoneAutomaton &za) {
  const Tfa &model = za.model();
  std::ostringstream os;
  os << "digraph zone_automaton {\n  rankdir=LR;\n";
  const auto order = sorted_states(za);
  for (const auto &v : order) {
    const bool initial = std::find(za.initial().begin(), za.initial().end(), v) != za.initial().end();
    os << "  " << quote(za.name(v)) << (initial ? " [shape=doublecircle];\n" : ";\n");
  }
  for (const auto &v : order) {
    for (std::size_t e : za.out_edges(v)) {
      const ZaEdge &edge = za.edges()[e];
      os << "  " << quote(za.name(edge.from)) << " -> " << quote(za.name(edge.to));
      if (edge.is_tau())
        os << " [style=dashed];\n";
      else
        os << " [label=" << quote(model.alphabet()[*edge.event]) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string render_zones(const ZoneAutomaton &za, const StateId &state) {
  std::string line = state + ":";
  for (const auto &z : za.zones(za.model().state_index(state)))
    line += " " + z.to_string();
  return line + "\n";
}

std::string render_zones(const ZoneAutomaton &za) {
  std::vector<StateId> names = za.model().states();
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto &x : names)
    out += render_zones(za, x);
  return out;
}

std::string render_states(const std::set<StateId> &states) {
  if (states.empty())
    return "(none)";
  std::string out;
  for (const auto &x : states) {
    if (!out.empty())
      out += ' ';
    out += x;
  }
  return out;
}

std::string render_estimate_json(const ZoneAutomaton &za, const Estimate &estimate,
                                 const TimePoint &anchor) {
  ordered_json j;
  j["anchor"] = anchor.to_string();
  j["discrete"] = estimate.discrete;
  j["extended"] = extended_json(za, estimate.extended);
  return j.dump();
}

std::string render_run(const TimedRun &run) {
  std::ostringstream os;
  os << "(" << run.start.state << "," << run.start.clock << ")";
  for (const auto &s : run.steps)
    os << " -" << s.event << "@" << s.time << "-> (" << s.after.state << "," << s.after.clock
       << ")";
  return os.str();
}

std::string render_observer_json(const ZoneAutomaton &za, const OfflineObserver &observer) {
  ordered_json j;
  j["horizon"] = observer.horizon();
  ordered_json nodes = ordered_json::array();
  for (std::size_t n = 0; n < observer.nodes().size(); ++n) {
    const auto &node = observer.nodes()[n];
    ordered_json cells = ordered_json::array();
    for (const auto &c : node.cells) {
      ordered_json next = ordered_json::object();
      for (const auto &[e, target] : c.next)
        next[e] = target ? ordered_json(*target) : ordered_json(nullptr);
      cells.push_back({{"elapsed", c.elapsed.to_string()},
                       {"discrete", c.estimate.discrete},
                       {"extended", extended_json(za, c.estimate.extended)},
                       {"next", next}});
    }
    nodes.push_back({{"id", n}, {"support", extended_json(za, node.support)}, {"cells", cells}});
  }
  j["nodes"] = nodes;
  return j.dump(2);
}

} // namespace tfaest
