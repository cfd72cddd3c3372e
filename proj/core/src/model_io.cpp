#include "tfaest/model_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tfaest {

namespace {

using nlohmann::json;

std::vector<std::string> string_array(const json &doc, const char *key) {
  if (!doc.contains(key))
    throw ModelFormatError(std::string("missing key '") + key + "'");
  const auto &arr = doc.at(key);
  if (!arr.is_array())
    throw ModelFormatError(std::string("'") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto &v : arr) {
    if (!v.is_string())
      throw ModelFormatError(std::string("'") + key + "' must contain strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string string_field(const json &obj, const char *key, std::size_t index) {
  if (!obj.contains(key) || !obj.at(key).is_string())
    throw ModelFormatError("transition " + std::to_string(index) + ": missing string field '" +
                           key + "'");
  return obj.at(key).get<std::string>();
}

} // namespace

Tfa parse_model(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ModelFormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw ModelFormatError("model document must be a JSON object");

  auto states = string_array(doc, "states");
  auto alphabet = string_array(doc, "alphabet");
  auto observable = string_array(doc, "observable");
  auto initial = string_array(doc, "initial");

  if (!doc.contains("transitions") || !doc.at("transitions").is_array())
    throw ModelFormatError("'transitions' must be an array");
  std::vector<Transition> transitions;
  std::size_t index = 0;
  for (const auto &obj : doc.at("transitions")) {
    if (!obj.is_object())
      throw ModelFormatError("transition " + std::to_string(index) + " must be an object");
    try {
      transitions.push_back({string_field(obj, "from", index), string_field(obj, "event", index),
                             string_field(obj, "to", index),
                             Interval::parse(string_field(obj, "guard", index)),
                             Reset::parse(string_field(obj, "reset", index))});
    } catch (const std::invalid_argument &e) {
      throw ModelFormatError("transition " + std::to_string(index) + ": " + e.what());
    }
    ++index;
  }
  return Tfa(std::move(states), std::move(alphabet), std::move(observable), std::move(initial),
             std::move(transitions));
}

Tfa load_model(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ModelFormatError("cannot open model file: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

std::string serialize_model(const Tfa &model) {
  json doc = json::object();
  doc["states"] = model.states();
  doc["alphabet"] = model.alphabet();
  doc["observable"] = model.observable_events();
  doc["initial"] = model.initial();
  json transitions = json::array();
  for (const auto &t : model.transitions())
    transitions.push_back({{"from", t.source},
                           {"event", t.event},
                           {"to", t.target},
                           {"guard", t.guard.to_string()},
                           {"reset", t.reset.to_string()}});
  doc["transitions"] = std::move(transitions);
  return doc.dump(2) + "\n";
}

bool operator==(const Tfa &a, const Tfa &b) {
  return a.states() == b.states() && a.alphabet() == b.alphabet() &&
         a.observable_events() == b.observable_events() && a.initial() == b.initial() &&
         a.transitions() == b.transitions();
}

Tfa figure1_model() {
  auto c = [](std::int64_t lo, std::int64_t hi) { return Interval::closed(lo, hi); };
  return Tfa({"x0", "x1", "x2", "x3", "x4"}, {"a", "b", "c"}, {"a"}, {"x0"},
             {
                 {"x0", "c", "x1", c(1, 3), Reset::to(c(1, 1))},
                 {"x0", "b", "x2", c(0, 1), Reset::identity()},
                 {"x1", "a", "x4", c(1, 3), Reset::to(c(0, 1))},
                 {"x2", "c", "x3", c(1, 2), Reset::identity()},
                 {"x3", "a", "x2", c(0, 2), Reset::to(c(0, 0))},
                 {"x4", "b", "x3", c(0, 1), Reset::to(c(0, 0))},
             });
}

} // namespace tfaest
