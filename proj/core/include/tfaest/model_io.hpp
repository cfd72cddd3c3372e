#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tfaest/model.hpp"

namespace tfaest {

/// Thrown for unreadable or schema-violating model documents.
class ModelFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Model document (JSON):
///   { "states": [..], "alphabet": [..], "observable": [..], "initial": [..],
///     "transitions": [ {"from", "event", "to", "guard", "reset"}, .. ] }
/// with guard/reset in interval text form and reset possibly "id".
Tfa parse_model(std::string_view json_text);
Tfa load_model(const std::filesystem::path &path);

/// Canonical serialization; parse_model(serialize_model(m)) == m.
std::string serialize_model(const Tfa &model);

bool operator==(const Tfa &a, const Tfa &b);

/// The running example: five states, events a (observable), b and c.
Tfa figure1_model();

} // namespace tfaest
