#include "tfaest/observation_text.hpp"

#include <stdexcept>

#include <boost/algorithm/string/split.hpp>
#include <boost/algorithm/string/trim.hpp>

namespace tfaest {

TimedWord parse_observed_word(std::string_view text) {
  std::string whole(text);
  boost::algorithm::trim(whole);
  TimedWord out;
  if (whole.empty())
    return out;

  std::vector<std::string> pairs;
  boost::algorithm::split(pairs, whole, [](char c) { return c == ','; });
  for (auto &pair : pairs) {
    boost::algorithm::trim(pair);
    const auto at = pair.find('@');
    if (at == std::string::npos || at == 0 || pair.find('@', at + 1) != std::string::npos)
      throw std::invalid_argument("expected event@time, got '" + pair + "'");
    std::string event = pair.substr(0, at);
    std::string time = pair.substr(at + 1);
    boost::algorithm::trim(event);
    boost::algorithm::trim(time);
    if (event.empty())
      throw std::invalid_argument("missing event name in '" + pair + "'");
    TimePoint t = TimePoint::parse(time);
    if (!out.empty() && t < out.back().time)
      throw std::invalid_argument("observation timestamps must be non-decreasing");
    out.push_back({std::move(event), t});
  }
  return out;
}

TimedObservation parse_observation(std::string_view text, const TimePoint &query_time) {
  TimedObservation obs{parse_observed_word(text), query_time};
  if (!obs.events.empty() && query_time < obs.events.back().time)
    throw std::invalid_argument("query time precedes the last observation");
  return obs;
}

std::string format_observed_word(const TimedWord &word) {
  std::string out;
  for (const auto &[event, time] : word) {
    if (!out.empty())
      out += ',';
    out += event + "@" + time.to_string();
  }
  return out;
}

} // namespace tfaest
