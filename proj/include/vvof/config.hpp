#pragma once

#include <string>

#include "vvof/cases.hpp"

namespace vvof {

/// Parses a JSON case description. With "case" set, the built-in is the
/// base and other keys override it; without it the description must be
/// complete (grid, dt, t_final, shapes, motion). Unknown keys, type
/// mismatches and out-of-range values throw ConfigError whose message starts
/// with the JSON path, e.g. "$.shapes[0].r: expected a number".
CaseConfig parse_config_text(const std::string& text);

/// Reads and parses a file. Unreadable files throw ConfigError.
CaseConfig parse_config(const std::string& path);

}  // namespace vvof
