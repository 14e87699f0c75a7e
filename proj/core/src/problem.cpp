#include "cadlab/problem.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "cadlab/error.hpp"
#include "cadlab/json_io.hpp"
#include "cadlab/smtlib.hpp"

namespace cadlab {

std::vector<Poly> Problem::polynomials() const {
  if (formula) return atom_polynomials(*formula);
  std::vector<Poly> out;
  for (const auto& p : polys)
    if (!p.is_constant() && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

VarOrdering Problem::default_ordering() const {
  std::vector<Var> low_to_high;
  for (auto& g : ordering_groups(nvars(), blocks)) {
    std::sort(g.begin(), g.end());
    low_to_high.insert(low_to_high.end(), g.begin(), g.end());
  }
  return VarOrdering(std::move(low_to_high));
}

namespace {

void check_poly(const Poly& p, std::size_t n) {
  if (p.nvars() != n && !(p.is_zero() && p.nvars() == 0))
    throw DomainError("polynomial over " + std::to_string(p.nvars()) + " variables, expected " + std::to_string(n));
}

void check_formula(const Formula& f, std::size_t n) {
  if (f.is_atom()) check_poly(f.poly, n);
  for (const auto& a : f.args) check_formula(a, n);
}

}  // namespace

void validate(const Problem& p) {
  std::set<std::string> seen;
  for (const auto& v : p.vars) {
    if (v.empty()) throw DomainError("empty variable name");
    if (!seen.insert(v).second) throw DomainError("variable '" + v + "' declared twice");
  }
  ordering_groups(p.nvars(), p.blocks);
  if (p.formula) check_formula(*p.formula, p.nvars());
  for (const auto& q : p.polys) check_poly(q, p.nvars());
}

InputFormat detect_format(const std::filesystem::path& path, const std::string& text) {
  const auto ext = path.extension().string();
  if (ext == ".json") return InputFormat::json;
  if (ext == ".smt2" || ext == ".smt") return InputFormat::smtlib;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? InputFormat::json : InputFormat::smtlib;
  }
  return InputFormat::smtlib;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  Problem p = detect_format(path, text) == InputFormat::json ? parse_json(text) : parse_smtlib(text, path.stem().string());
  if (p.name.empty()) p.name = path.stem().string();
  return p;
}

}  // namespace cadlab
