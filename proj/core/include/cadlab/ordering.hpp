#pragma once

#include <span>
#include <string>
#include <vector>

#include "cadlab/poly.hpp"

namespace cadlab {

enum class Quantifier { exists, forall };

struct QuantifierBlock {
  Quantifier quantifier = Quantifier::exists;
  std::vector<Var> vars;
  friend bool operator==(const QuantifierBlock&, const QuantifierBlock&) = default;
};

/// A variable ordering x_1 < x_2 < ... < x_n, stored lowest first.
///
/// vars().front() is the coordinate of R^1 and is projected last;
/// vars().back() is the main variable of the input level and is projected
/// first. "x,y" therefore means y is eliminated first.
class VarOrdering {
 public:
  VarOrdering() = default;
  explicit VarOrdering(std::vector<Var> low_to_high) : vars_(std::move(low_to_high)) {}
  static VarOrdering identity(std::size_t n);

  std::size_t size() const { return vars_.size(); }
  const std::vector<Var>& vars() const { return vars_; }
  /// Variable of level k (1-based): level 1 is the base line.
  Var level_var(std::size_t level) const { return vars_[level - 1]; }
  /// Elimination sequence, first projected first.
  std::vector<Var> projection_sequence() const { return {vars_.rbegin(), vars_.rend()}; }
  /// Level (1-based) of v in this ordering.
  std::size_t level_of(Var v) const;

  /// Permutation mapping declared index -> position (0-based) in this ordering.
  std::vector<std::size_t> to_positions(std::size_t nvars) const;

  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const VarOrdering&, const VarOrdering&) = default;
  friend bool operator<(const VarOrdering& a, const VarOrdering& b) { return a.vars_ < b.vars_; }

 private:
  std::vector<Var> vars_;
};

/// Variables not bound by any block are free and sit lowest. Blocks follow in
/// prefix order, the innermost block highest (projected first). Variables may
/// be permuted only within their group.
bool respects_blocks(const VarOrdering& ord, std::size_t nvars, std::span<const QuantifierBlock> blocks);

inline constexpr std::size_t kMaxEnumeratedVariables = 7;

/// Every admissible ordering, sorted lexicographically on the low-to-high
/// sequence. Throws DomainError beyond kMaxEnumeratedVariables variables.
std::vector<VarOrdering> admissible_orderings(std::size_t nvars, std::span<const QuantifierBlock> blocks);

/// Groups from lowest to highest: free variables first, then each block.
std::vector<std::vector<Var>> ordering_groups(std::size_t nvars, std::span<const QuantifierBlock> blocks);

/// Parses "x,y,z" against declared names. Throws DomainError on unknown or
/// repeated names, or when not every variable is listed.
VarOrdering parse_ordering(const std::string& text, std::span<const std::string> names);

}  // namespace cadlab
