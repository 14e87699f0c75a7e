#include "cadlab/cad.hpp"

#include <algorithm>
#include <map>

#include "cadlab/deadline.hpp"
#include "cadlab/error.hpp"
#include "cadlab/polyarith.hpp"

namespace cadlab {

char sign_char(Sign s) { return s == Sign::neg ? '-' : s == Sign::zero ? '0' : '+'; }

bool Cell::full_dimensional() const {
  return std::all_of(index.begin(), index.end(), [](std::uint32_t i) { return i % 2 == 1; });
}

std::string Cell::index_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < index.size(); ++i) out += (i ? "," : "") + std::to_string(index[i]);
  return out + ")";
}

std::string Cell::sample_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (i) out += ", ";
    auto q = sample[i].rational_value();
    out += q ? to_string(*q) : sample[i].to_string();
  }
  return out + ")";
}

std::vector<std::size_t> CADTree::counts() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels) out.push_back(l.size());
  return out;
}

std::size_t CADTree::total() const { return levels.empty() ? 1 : levels.back().size(); }

std::size_t CADTree::fulldim_count() const {
  if (levels.empty()) return 1;
  return static_cast<std::size_t>(
      std::count_if(levels.back().begin(), levels.back().end(), [](const Cell& c) { return c.full_dimensional(); }));
}

std::vector<std::size_t> CADTree::top_stack_sizes() const {
  std::vector<std::size_t> out;
  if (stacks.empty()) return out;
  for (const auto& s : stacks.back()) out.push_back(s.size);
  return out;
}

namespace {

// Sorted insert with deduplication of equal numbers.
void merge_root(RootList& roots, const AlgebraicNumber& r) {
  auto it = roots.begin();
  for (; it != roots.end(); ++it) {
    const auto c = compare(r, *it);
    if (c == 0) return;
    if (c < 0) break;
  }
  roots.insert(it, r);
}

Rational between(AlgebraicNumber a, AlgebraicNumber b) {
  separate(a, b);
  while (a.upper_bound() >= b.lower_bound()) {
    if (!a.is_rational()) a.bisect();
    if (!b.is_rational()) b.bisect();
  }
  return (a.upper_bound() + b.lower_bound()) / 2;
}

Cell child_of(const Cell& base, std::uint32_t idx, AlgebraicNumber coord) {
  Cell c;
  c.index = base.index;
  c.index.push_back(idx);
  c.sample = base.sample;
  c.sample.push_back(std::move(coord));
  return c;
}

std::vector<Poly> lifting_set(std::span<const Poly> level_polys, Var v) {
  if (level_polys.empty()) return {};
  return squarefree_primitive_basis(level_polys, v).basis;
}

}  // namespace

std::vector<Cell> build_stack(const Cell& base, std::span<const Poly> ordered_polys) {
  const bool base_positive_dim = std::any_of(base.index.begin(), base.index.end(), [](auto i) { return i % 2 == 1; });
  RootList roots;
  for (const auto& p : ordered_polys) {
    check_deadline();
    auto fr = roots_over(p, base.sample);
    if (fr.nullified) {
      if (base_positive_dim)
        throw NotWellOriented("not well-oriented: " + p.to_string() + " vanishes identically over cell " +
                              base.index_string());
      continue;
    }
    for (const auto& r : fr.roots) merge_root(roots, r);
  }
  std::vector<Cell> out;
  out.reserve(2 * roots.size() + 1);
  if (roots.empty()) {
    out.push_back(child_of(base, 1, AlgebraicNumber(Rational(0))));
    return out;
  }
  out.push_back(child_of(base, 1, AlgebraicNumber(Rational(integer_below(roots.front().lower_bound())))));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out.push_back(child_of(base, static_cast<std::uint32_t>(2 * i + 2), roots[i]));
    const Rational s = i + 1 < roots.size() ? between(roots[i], roots[i + 1])
                                            : Rational(integer_above(roots[i].upper_bound()));
    out.push_back(child_of(base, static_cast<std::uint32_t>(2 * i + 3), AlgebraicNumber(s)));
  }
  return out;
}

CADTree build_cad(std::span<const Poly> polys, const VarOrdering& ord, const CadOptions& options) {
  const bool ec = options.mode == CadMode::ec_reduced;
  CADTree tree;
  tree.ordering = ord;
  tree.inputs.assign(polys.begin(), polys.end());
  tree.projection = projection_levels(polys, ord, ec ? &options.designation : nullptr);
  const std::size_t n = ord.size();

  std::vector<std::vector<Poly>> lift(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Var v{k - 1};
    std::vector<Poly> level;
    for (const auto& p : tree.projection.level(k)) level.push_back(to_ordered_space(p, ord));
    const Poly* e = ec && k >= 2 ? options.designation.at_level(k) : nullptr;
    if (e) {
      const Poly oe = to_ordered_space(*e, ord);
      lift[k - 1] = lifting_set(std::span<const Poly>(&oe, 1), v);
    } else {
      lift[k - 1] = lifting_set(level, v);
    }
  }

  Cell root;
  std::vector<Cell> previous{root};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Cell> cells;
    std::vector<Stack> stacks;
    for (std::size_t b = 0; b < previous.size(); ++b) {
      auto stack = build_stack(previous[b], lift[k - 1]);
      stacks.push_back({b, cells.size(), stack.size()});
      for (auto& c : stack) {
        c.parent = b;
        cells.push_back(std::move(c));
      }
    }
    tree.levels.push_back(cells);
    tree.stacks.push_back(std::move(stacks));
    previous = std::move(cells);
  }

  if (n > 0) {
    std::vector<Poly> ordered_inputs;
    for (const auto& p : polys) ordered_inputs.push_back(to_ordered_space(p, ord));
    for (auto& leaf : tree.levels.back()) {
      check_deadline();
      leaf.signs.reserve(ordered_inputs.size());
      for (const auto& p : ordered_inputs) leaf.signs.push_back(static_cast<Sign>(sign_at(p, leaf.sample)));
    }
  }
  return tree;
}

std::size_t open_cad_fulldim(std::span<const Poly> polys, const VarOrdering& ord) {
  const std::size_t n = ord.size();
  const auto proj = projection_levels(polys, ord);
  std::vector<std::vector<Poly>> lift(n);
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Poly> level;
    for (const auto& p : proj.level(k)) level.push_back(to_ordered_space(p, ord));
    lift[k - 1] = lifting_set(level, Var{k - 1});
  }
  std::vector<Rational> point;
  std::size_t count = 0;
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k > n) {
      ++count;
      return;
    }
    check_deadline();
    RootList roots;
    for (const auto& p : lift[k - 1]) {
      Poly q = p;
      for (std::size_t i = 0; i < point.size(); ++i) q = q.substitute(Var{i}, point[i]);
      if (q.is_zero()) continue;
      if (q.is_constant()) continue;
      for (const auto& r : isolate_real_roots(q)) merge_root(roots, r);
    }
    std::vector<Rational> samples;
    if (roots.empty()) {
      samples.push_back(0);
    } else {
      samples.push_back(Rational(integer_below(roots.front().lower_bound())));
      for (std::size_t i = 0; i + 1 < roots.size(); ++i) samples.push_back(between(roots[i], roots[i + 1]));
      samples.push_back(Rational(integer_above(roots.back().upper_bound())));
    }
    for (const auto& s : samples) {
      point.push_back(s);
      self(self, k + 1);
      point.pop_back();
    }
  };
  rec(rec, 1);
  return count;
}

FormulaEvaluation evaluate_formula_on_cells(const CADTree& tree, const Formula& f) {
  FormulaEvaluation out;
  const auto& ord = tree.ordering;
  std::map<std::size_t, std::size_t> input_slot;  // atom index -> input position
  const auto atoms = atom_polynomials(f);
  std::vector<Poly> ordered_atoms;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    ordered_atoms.push_back(to_ordered_space(atoms[i], ord));
    auto it = std::find(tree.inputs.begin(), tree.inputs.end(), atoms[i]);
    if (it != tree.inputs.end()) input_slot[i] = static_cast<std::size_t>(it - tree.inputs.begin());
  }
  const std::vector<Cell> no_cells(1);
  const auto& leaves = tree.levels.empty() ? no_cells : tree.leaves();
  for (const auto& leaf : leaves) {
    check_deadline();
    auto sign_of = [&](const Poly& p) -> int {
      auto pos = std::find(atoms.begin(), atoms.end(), p);
      const auto i = static_cast<std::size_t>(pos - atoms.begin());
      auto slot = input_slot.find(i);
      if (slot != input_slot.end() && slot->second < leaf.signs.size())
        return static_cast<int>(leaf.signs[slot->second]);
      return sign_at(ordered_atoms[i], leaf.sample);
    };
    const bool t = evaluate(f, sign_of);
    out.truth.push_back(t);
    out.true_count += t ? 1 : 0;
  }
  return out;
}

}  // namespace cadlab
