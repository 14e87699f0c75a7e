#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cadlab/formula.hpp"
#include "cadlab/ordering.hpp"
#include "cadlab/poly.hpp"
#include "cadlab/projection.hpp"
#include "cadlab/realroots.hpp"

namespace cadlab {

enum class Sign : std::int8_t { neg = -1, zero = 0, pos = 1 };
char sign_char(Sign s);

/// A cell of R^k. Index entries are odd for sectors and even for sections;
/// sample[i] is the coordinate of the level-(i+1) variable.
struct Cell {
  std::vector<std::uint32_t> index;
  std::vector<AlgebraicNumber> sample;
  std::vector<Sign> signs;  ///< leaves only: one per input polynomial
  std::size_t parent = static_cast<std::size_t>(-1);

  std::size_t level() const { return index.size(); }
  bool is_sector() const { return !index.empty() && index.back() % 2 == 1; }
  /// All index entries odd.
  bool full_dimensional() const;
  std::string index_string() const;
  std::string sample_string() const;
};

/// Cells [begin, begin+size) of a level, all lying over `base` of the level below.
struct Stack {
  std::size_t base = 0;
  std::size_t begin = 0;
  std::size_t size = 0;
};

enum class CadMode { sign_invariant, ec_reduced };

struct CadOptions {
  CadMode mode = CadMode::sign_invariant;
  ECDesignation designation;  ///< used in ec_reduced mode
};

struct CADTree {
  VarOrdering ordering;
  std::vector<Poly> inputs;  ///< declared variable space
  ProjectionLevels projection;
  std::vector<std::vector<Cell>> levels;   ///< levels[k-1]: cells of R^k
  std::vector<std::vector<Stack>> stacks;  ///< stacks[k-1]: the stacks making up levels[k-1]

  std::size_t dimension() const { return levels.size(); }
  /// Cells per level, level 1 first.
  std::vector<std::size_t> counts() const;
  /// Number of cells of R^n.
  std::size_t total() const;
  std::size_t fulldim_count() const;
  const std::vector<Cell>& leaves() const { return levels.back(); }
  /// Sizes of the stacks of the top level, in base order.
  std::vector<std::size_t> top_stack_sizes() const;
};

/// Stack over `base` for polynomials in ordered space (variable i is level
/// i+1) whose main variable is level base.level()+1. Throws NotWellOriented
/// when one of them vanishes identically over a positive-dimensional base.
std::vector<Cell> build_stack(const Cell& base, std::span<const Poly> ordered_polys);

/// Full CAD of R^n for the polynomials (declared variable space). In
/// ec_reduced mode, each level carrying a designated EC is projected with
/// the reduced operator and lifted with the EC's factors only.
CADTree build_cad(std::span<const Poly> polys, const VarOrdering& ord, const CadOptions& options = {});

/// Number of full-dimensional cells, lifting over sectors only; every sample
/// coordinate is rational. A polynomial vanishing identically over a sector
/// sample is skipped.
std::size_t open_cad_fulldim(std::span<const Poly> polys, const VarOrdering& ord);

struct FormulaEvaluation {
  std::vector<bool> truth;  ///< per leaf
  std::size_t true_count = 0;
};

FormulaEvaluation evaluate_formula_on_cells(const CADTree& tree, const Formula& f);

}  // namespace cadlab
