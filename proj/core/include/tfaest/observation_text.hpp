#pragma once

#include <string>
#include <string_view>

#include "tfaest/model.hpp"

namespace tfaest {

/// Parses `e@t` pairs separated by commas; the empty string (or blanks) is
/// the empty observation. Throws std::invalid_argument on malformed text or
/// decreasing timestamps. Event names are not checked against a model.
TimedWord parse_observed_word(std::string_view text);

/// parse_observed_word() plus the query instant.
TimedObservation parse_observation(std::string_view text, const TimePoint &query_time);

/// Inverse of parse_observed_word(): "a@1.0,a@3.0".
std::string format_observed_word(const TimedWord &word);

} // namespace tfaest
