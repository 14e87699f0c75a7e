#include "cadlab/ordering.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cadlab/error.hpp"

namespace cadlab {

VarOrdering VarOrdering::identity(std::size_t n) {
  std::vector<Var> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Var{i});
  return VarOrdering(std::move(v));
}

std::size_t VarOrdering::level_of(Var v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) throw DomainError("variable not in ordering");
  return static_cast<std::size_t>(it - vars_.begin()) + 1;
}

std::vector<std::size_t> VarOrdering::to_positions(std::size_t nvars) const {
  std::vector<std::size_t> pos(nvars, Poly::npos);
  for (std::size_t i = 0; i < vars_.size(); ++i) pos[vars_[i].id] = i;
  return pos;
}

std::string VarOrdering::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += ",";
    out += names[vars_[i].id];
  }
  return out;
}

std::vector<std::vector<Var>> ordering_groups(std::size_t nvars, std::span<const QuantifierBlock> blocks) {
  std::vector<bool> bound(nvars, false);
  for (const auto& b : blocks)
    for (Var v : b.vars) {
      if (v.id >= nvars) throw DomainError("quantifier block names an undeclared variable");
      if (bound[v.id]) throw DomainError("variable bound by two quantifier blocks");
      bound[v.id] = true;
    }
  std::vector<std::vector<Var>> groups;
  std::vector<Var> free;
  for (std::size_t i = 0; i < nvars; ++i)
    if (!bound[i]) free.push_back(Var{i});
  if (!free.empty()) groups.push_back(std::move(free));
  for (const auto& b : blocks)
    if (!b.vars.empty()) groups.push_back(b.vars);
  return groups;
}

bool respects_blocks(const VarOrdering& ord, std::size_t nvars, std::span<const QuantifierBlock> blocks) {
  if (ord.size() != nvars) return false;
  auto groups = ordering_groups(nvars, blocks);
  std::size_t pos = 0;
  for (const auto& g : groups) {
    std::vector<Var> expected = g, actual(ord.vars().begin() + static_cast<std::ptrdiff_t>(pos),
                                          ord.vars().begin() + static_cast<std::ptrdiff_t>(pos + g.size()));
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    if (expected != actual) return false;
    pos += g.size();
  }
  return true;
}

std::vector<VarOrdering> admissible_orderings(std::size_t nvars, std::span<const QuantifierBlock> blocks) {
  if (nvars > kMaxEnumeratedVariables)
    throw DomainError("ordering enumeration is capped at " + std::to_string(kMaxEnumeratedVariables) +
                      " variables (got " + std::to_string(nvars) + ")");
  auto groups = ordering_groups(nvars, blocks);
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::vector<VarOrdering> out;
  std::vector<Var> current;
  std::function<void(std::size_t)> rec = [&](std::size_t gi) {
    if (gi == groups.size()) {
      out.emplace_back(current);
      return;
    }
    std::vector<Var> g = groups[gi];
    do {
      current.insert(current.end(), g.begin(), g.end());
      rec(gi + 1);
      current.resize(current.size() - g.size());
    } while (std::next_permutation(g.begin(), g.end()));
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

VarOrdering parse_ordering(const std::string& text, std::span<const std::string> names) {
  std::vector<Var> vars;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto it = std::find(names.begin(), names.end(), item);
    if (it == names.end()) throw DomainError("unknown variable '" + item + "' in ordering");
    Var v{static_cast<std::size_t>(it - names.begin())};
    if (std::find(vars.begin(), vars.end(), v) != vars.end())
      throw DomainError("variable '" + item + "' repeated in ordering");
    vars.push_back(v);
  }
  if (vars.size() != names.size()) throw DomainError("ordering must list every declared variable");
  return VarOrdering(std::move(vars));
}

}  // namespace cadlab
