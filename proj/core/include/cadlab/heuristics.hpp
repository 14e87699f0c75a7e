#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cadlab/groebner.hpp"
#include "cadlab/ordering.hpp"
#include "cadlab/poly.hpp"
#include "cadlab/projection.hpp"

namespace cadlab {

/// One scored candidate. Lower score vectors win (lexicographic compare).
struct CandidateScore {
  std::optional<VarOrdering> ordering;
  std::optional<Var> variable;  ///< Brown and greedy reports score variables
  std::vector<std::int64_t> score;
};

struct HeuristicReport {
  std::string heuristic;
  VarOrdering chosen;
  std::vector<CandidateScore> candidates;
  /// Candidates sharing the optimal score (1 when unique).
  std::size_t tied = 1;
  std::string tie_break;
};

/// Orders each group by (overall degree, max total degree of terms
/// containing the variable, number of such terms); lower values are
/// eliminated first. Ties keep declared order.
HeuristicReport brown_order(std::span<const Poly> a, std::size_t nvars, std::span<const QuantifierBlock> blocks);

/// Sum of total degrees of every monomial at every level.
std::size_t sotd_value(const ProjectionLevels& levels);
/// Distinct real roots of the level-1 set.
std::size_t ndrr_value(const ProjectionLevels& levels);

enum class SotdStrategy { exhaustive, greedy };

HeuristicReport order_by_sotd(std::span<const Poly> a, std::size_t nvars, std::span<const QuantifierBlock> blocks,
                              SotdStrategy strategy);
HeuristicReport order_by_ndrr(std::span<const Poly> a, std::size_t nvars, std::span<const QuantifierBlock> blocks);
HeuristicReport order_by_fulldim(std::span<const Poly> a, std::size_t nvars, std::span<const QuantifierBlock> blocks);

/// Total number of indeterminates: sum over a of the number of distinct variables.
std::size_t tnoi(std::span<const Poly> a);

struct GbDecision {
  bool use_gb = false;
  std::size_t before = 0;
  std::size_t after = 0;
  std::vector<Poly> basis;
};

/// Lex with the first-projected variable highest, for the given ordering.
MonomialOrder elimination_order(const VarOrdering& ord);

GbDecision gb_precondition_decision(std::span<const Poly> equalities, const MonomialOrder& order);

/// Per variable (max degree, share of monomials containing it, share of
/// polynomials containing it), then (#polynomials, #variables, max total degree).
std::vector<double> ml_features(std::span<const Poly> a, std::size_t nvars);
std::vector<std::string> ml_feature_names(std::span<const std::string> names);

}  // namespace cadlab
