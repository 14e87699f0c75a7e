#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cadlab/formula.hpp"
#include "cadlab/ordering.hpp"
#include "cadlab/poly.hpp"

namespace cadlab {

/// Unit of benchmarking: declared variables, quantifier prefix, and either a
/// formula or a bare polynomial set.
struct Problem {
  std::string name;
  std::vector<std::string> vars;
  std::vector<QuantifierBlock> blocks;
  std::optional<Formula> formula;
  std::vector<Poly> polys;  ///< payload when there is no formula
  std::map<std::string, std::string> metadata;

  std::size_t nvars() const { return vars.size(); }
  /// Atom polynomials of the formula, or the bare set.
  std::vector<Poly> polynomials() const;
  /// Free variables first, then blocks outermost first; declared order inside.
  VarOrdering default_ordering() const;

  friend bool operator==(const Problem&, const Problem&) = default;
};

/// Throws DomainError when variables are undeclared, repeated, or bound twice.
void validate(const Problem& p);

enum class InputFormat { json, smtlib };

/// By extension (.json / .smt2, .smt), falling back to the first non-blank character.
InputFormat detect_format(const std::filesystem::path& path, const std::string& text);

/// Reads and parses a problem file. The name defaults to the file stem.
Problem load_problem(const std::filesystem::path& path);

}  // namespace cadlab
