#include "cadlab/projection.hpp"

#include <algorithm>

#include "cadlab/deadline.hpp"
#include "cadlab/error.hpp"
#include "cadlab/polyarith.hpp"

namespace cadlab {

bool ECDesignation::empty() const {
  return std::none_of(by_level.begin(), by_level.end(), [](const auto& p) { return p.has_value(); });
}

const Poly* ECDesignation::at_level(std::size_t level) const {
  if (level == 0 || level > by_level.size() || !by_level[level - 1]) return nullptr;
  return &*by_level[level - 1];
}

std::string ECDesignation::to_string() const {
  std::string out;
  for (std::size_t k = by_level.size(); k-- > 0;) {
    if (!by_level[k]) continue;
    if (!out.empty()) out += ";";
    out += k < labels.size() && !labels[k].empty() ? labels[k] : "ec@" + std::to_string(k + 1);
  }
  return out.empty() ? "none" : out;
}

std::size_t ProjectionLevels::polynomial_count() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.size();
  return n;
}

namespace {

void add_coefficients(std::vector<Poly>& out, const Poly& b, Var v) {
  auto coeffs = b.coefficients(v);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i].is_zero()) continue;
    if (coeffs[i].is_constant()) break;
    insert_normalized(out, coeffs[i]);
  }
}

void add_discriminant(std::vector<Poly>& out, const Poly& b, Var v) {
  if (b.degree(v) >= 2) insert_normalized(out, discriminant(b, v));
}

void add_resultant(std::vector<Poly>& out, const Poly& a, const Poly& b, Var v) {
  insert_normalized(out, resultant(a, b, v));
}

void finish(std::vector<Poly>& out) { std::sort(out.begin(), out.end(), poly_less); }

bool divides(const Poly& d, const Poly& p) {
  try {
    exact_quotient(p, d);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

std::vector<Poly> mccallum_project(std::span<const Poly> a, Var v) {
  auto sb = squarefree_primitive_basis(a, v);
  std::vector<Poly> out;
  for (const auto& c : sb.contents) insert_normalized(out, c);
  for (std::size_t i = 0; i < sb.basis.size(); ++i) {
    check_deadline();
    add_coefficients(out, sb.basis[i], v);
    add_discriminant(out, sb.basis[i], v);
    for (std::size_t j = i + 1; j < sb.basis.size(); ++j) add_resultant(out, sb.basis[i], sb.basis[j], v);
  }
  finish(out);
  return out;
}

std::vector<Poly> reduced_ec_project(std::span<const Poly> a, const Poly& e, Var v) {
  if (e.is_constant()) throw DomainError("designated EC missing");
  const Poly ne = normalize(squarefree_part(e));
  const bool present = std::any_of(a.begin(), a.end(), [&](const Poly& p) {
    return !p.is_constant() && normalize(squarefree_part(p)) == ne;
  });
  if (!present) throw DomainError("designated EC missing");
  if (!e.contains(v)) throw DomainError("designated EC does not contain the projected variable");

  auto sb = squarefree_primitive_basis(a, v);
  std::vector<Poly> ec_part, rest;
  for (const auto& b : sb.basis) (divides(b, e) ? ec_part : rest).push_back(b);

  std::vector<Poly> out;
  for (const auto& c : sb.contents) insert_normalized(out, c);
  for (std::size_t i = 0; i < ec_part.size(); ++i) {
    check_deadline();
    add_coefficients(out, ec_part[i], v);
    add_discriminant(out, ec_part[i], v);
    for (std::size_t j = i + 1; j < ec_part.size(); ++j) add_resultant(out, ec_part[i], ec_part[j], v);
    for (const auto& g : rest) add_resultant(out, ec_part[i], g, v);
  }
  finish(out);
  return out;
}

std::size_t main_level(const Poly& p, const VarOrdering& ord) {
  std::size_t best = 0;
  for (Var v : p.variables()) best = std::max(best, ord.level_of(v));
  return best;
}

Poly to_ordered_space(const Poly& p, const VarOrdering& ord) {
  auto pos = ord.to_positions(p.nvars());
  return p.remap(pos, p.nvars());
}

Poly from_ordered_space(const Poly& p, const VarOrdering& ord) {
  std::vector<std::size_t> back(p.nvars());
  for (std::size_t i = 0; i < ord.size(); ++i) back[i] = ord.vars()[i].id;
  return p.remap(back, p.nvars());
}

ProjectionLevels projection_levels(std::span<const Poly> a, const VarOrdering& ord, const ECDesignation* designation) {
  const std::size_t n = ord.size();
  ProjectionLevels out;
  out.ordering = ord;
  out.levels.assign(n, {});
  auto place = [&](const Poly& p) {
    const std::size_t k = main_level(p, ord);
    if (k == 0) return;
    insert_normalized(out.levels[k - 1], p);
  };
  for (const auto& p : a) place(p);
  if (designation) {
    // designated ECs are implied equations, so adding them keeps the set valid
    for (std::size_t k = 2; k <= n; ++k)
      if (const Poly* e = designation->at_level(k)) {
        if (main_level(*e, ord) != k) throw DomainError("designated EC is not in the main variable of its level");
        place(*e);
      }
  }
  for (std::size_t k = n; k >= 2; --k) {
    check_deadline();
    auto& level = out.levels[k - 1];
    std::sort(level.begin(), level.end(), poly_less);
    if (level.empty()) continue;
    const Var v = ord.level_var(k);
    const Poly* e = designation ? designation->at_level(k) : nullptr;
    auto projected = e ? reduced_ec_project(level, *e, v) : mccallum_project(level, v);
    for (const auto& p : projected) place(p);
  }
  if (n >= 1) std::sort(out.levels[0].begin(), out.levels[0].end(), poly_less);
  return out;
}

}  // namespace cadlab
