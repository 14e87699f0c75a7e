#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cadlab/ordering.hpp"
#include "cadlab/poly.hpp"
#include "cadlab/projection.hpp"

namespace cadlab {

enum class Rel { eq, ne, lt, le, gt, ge };

const char* to_string(Rel r);
/// "=", "!=", "<", "<=", ">", ">=" (also "==", "<>", "distinct"). Throws DomainError.
Rel parse_rel(const std::string& s);
/// Does a value of the given sign satisfy "value rel 0"?
bool holds(Rel r, int sign);

/// Boolean combination of sign conditions "poly rel 0".
struct Formula {
  enum class Kind { truth, falsity, atom, conj, disj, neg };

  Kind kind = Kind::truth;
  Rel rel = Rel::eq;
  Poly poly;
  std::string name;  ///< optional atom label
  std::vector<Formula> args;

  static Formula make_true() { return {}; }
  static Formula make_false();
  static Formula atom(Poly p, Rel r, std::string name = {});
  static Formula conjunction(std::vector<Formula> args);
  static Formula disjunction(std::vector<Formula> args);
  static Formula negation(Formula f);

  bool is_atom() const { return kind == Kind::atom; }
  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Pushes negations into atoms and flattens nested and/or.
Formula nnf(const Formula& f);

/// Distinct nonconstant atom polynomials, in first-occurrence order.
std::vector<Poly> atom_polynomials(const Formula& f);

bool evaluate(const Formula& f, const std::function<int(const Poly&)>& sign_of);

std::string to_string(const Formula& f, std::span<const std::string> names);

struct NamedEC {
  Poly poly;
  std::string label;
};

/// Equalities in the top-level conjunction of nnf(f). Labels are the atom
/// names where given, otherwise ec1, ec2, ...
std::vector<NamedEC> identify_ecs(const Formula& f);

/// Candidate ECs per level (index k-1 for level k).
struct ECCandidates {
  std::vector<std::vector<NamedEC>> by_level;
};

/// Places each EC at its main level, then, from the top level down, adds
/// the square-free resultants of every pair of candidates at a level to the
/// level of their main variable. One round per level.
ECCandidates propagate_ecs(std::span<const NamedEC> ecs, const VarOrdering& ord);

inline constexpr std::size_t kMaxDesignations = 64;

/// Cartesian product of per-level choices; levels without candidates get
/// none. The first element designates the first candidate at every level.
/// Throws DomainError when the product exceeds kMaxDesignations.
std::vector<ECDesignation> enumerate_designations(const ECCandidates& candidates);

enum class Measure { sotd, ndrr };

/// Measure of the projection levels built with d's reduced projections.
std::size_t score_designation(std::span<const Poly> a, const ECDesignation& d, const VarOrdering& ord, Measure m);

}  // namespace cadlab
