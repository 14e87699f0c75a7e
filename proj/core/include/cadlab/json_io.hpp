#pragma once

#include <string>

#include "cadlab/problem.hpp"

namespace cadlab {

/// Native problem format. Errors are ParseError with a JSON-pointer path.
Problem parse_json(const std::string& text);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string emit_json(const Problem& p);

}  // namespace cadlab
