#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cadlab/ordering.hpp"
#include "cadlab/poly.hpp"

namespace cadlab {

/// One designated equational constraint per level (index k-1 for level k),
/// or none. Labels are for reporting only.
struct ECDesignation {
  std::vector<std::optional<Poly>> by_level;
  std::vector<std::string> labels;

  bool empty() const;
  const Poly* at_level(std::size_t level) const;
  /// "ec1;res(ec1,ec2)" from the top level down, "none" when empty.
  std::string to_string() const;
};

/// Polynomial sets by level: levels[k-1] holds the normalized polynomials
/// whose main variable (w.r.t. ordering) is the level-k variable.
struct ProjectionLevels {
  VarOrdering ordering;
  std::vector<std::vector<Poly>> levels;

  std::size_t size() const { return levels.size(); }
  const std::vector<Poly>& level(std::size_t k) const { return levels[k - 1]; }
  std::size_t polynomial_count() const;
};

/// McCallum projection of A w.r.t. v. Coefficients are taken from the leading
/// one downward, stopping after the first nonzero constant. Results are
/// square-free, normalized, deduplicated; constants dropped.
std::vector<Poly> mccallum_project(std::span<const Poly> a, Var v);

/// Projection with e designated: contents of A, the full projection of the
/// basis factors of e, and resultants of those factors with the remaining
/// basis factors. Throws DomainError("designated EC missing") if e is not a
/// member of A up to a constant multiple.
std::vector<Poly> reduced_ec_project(std::span<const Poly> a, const Poly& e, Var v);

/// Projects from level n down to level 1. A designation at level k makes
/// the step k -> k-1 use reduced_ec_project.
ProjectionLevels projection_levels(std::span<const Poly> a, const VarOrdering& ord,
                                   const ECDesignation* designation = nullptr);

/// Level of p in ord: position of its highest variable, 0 for constants.
std::size_t main_level(const Poly& p, const VarOrdering& ord);

/// Rewrites p so that variable i is the level-(i+1) variable of ord.
Poly to_ordered_space(const Poly& p, const VarOrdering& ord);
Poly from_ordered_space(const Poly& p, const VarOrdering& ord);

}  // namespace cadlab
