#pragma once

#include <string>

#include "cadlab/problem.hpp"

namespace cadlab {

/// QF_NRA/NRA subset. Syntax errors carry "line:col"; unsupported constructs
/// are reported by name.
Problem parse_smtlib(const std::string& text, const std::string& name = {});

/// Writes the problem back as an SMT-LIB script.
std::string emit_smtlib(const Problem& p);

}  // namespace cadlab
