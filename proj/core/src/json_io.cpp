#include "cadlab/json_io.hpp"

#include <algorithm>
#include <json.hpp>

#include "cadlab/error.hpp"

namespace cadlab {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path.empty() ? "/" : path, what); }

const json& field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "/" + key, "missing required field");
  return *it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

Poly parse_poly(const json& j, std::size_t nvars, const std::string& path) {
  as_array(j, path);
  std::vector<Poly::Term> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string tp = path + "/" + std::to_string(i);
    const json& t = j[i];
    if (!t.is_object()) fail(tp, "expected a term object");
    const json& c = field(t, "coeff", tp);
    Rational coeff;
    if (c.is_string()) {
      try {
        coeff = parse_rational(c.get<std::string>());
      } catch (const ParseError& e) {
        fail(tp + "/coeff", e.what());
      }
    } else if (c.is_number_integer()) {
      coeff = Rational(c.dump());
    } else {
      fail(tp + "/coeff", "expected a rational string");
    }
    if (coeff == 0) fail(tp + "/coeff", "zero coefficient");
    const json& e = as_array(field(t, "exps", tp), tp + "/exps");
    if (e.size() != nvars)
      fail(tp + "/exps", "expected " + std::to_string(nvars) + " exponents, got " + std::to_string(e.size()));
    std::vector<std::uint32_t> exps;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k].is_number_unsigned() && !(e[k].is_number_integer() && e[k].get<long long>() >= 0))
        fail(tp + "/exps/" + std::to_string(k), "expected a non-negative integer");
      exps.push_back(e[k].get<std::uint32_t>());
    }
    const Monomial m(exps);
    for (const auto& existing : terms)
      if (existing.first == m) fail(tp + "/exps", "repeated monomial");
    terms.emplace_back(m, coeff);
  }
  return Poly::from_terms(nvars, std::move(terms));
}

json emit_poly(const Poly& p) {
  json arr = json::array();
  for (const auto& [m, c] : p.terms()) arr.push_back({{"coeff", to_string(c)}, {"exps", m.exponents()}});
  return arr;
}

Formula parse_formula(const json& j, std::size_t nvars, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a formula object");
  if (j.contains("rel")) {
    const std::string rel = as_string(j["rel"], path + "/rel");
    Rel r;
    try {
      r = parse_rel(rel);
    } catch (const DomainError&) {
      fail(path + "/rel", "unknown relation '" + rel + "'");
    }
    std::string name;
    if (j.contains("name")) name = as_string(j["name"], path + "/name");
    return Formula::atom(parse_poly(field(j, "poly", path), nvars, path + "/poly"), r, name);
  }
  const std::string op = as_string(field(j, "op", path), path + "/op");
  if (op == "true") return Formula::make_true();
  if (op == "false") return Formula::make_false();
  const json& args = as_array(field(j, "args", path), path + "/args");
  std::vector<Formula> parsed;
  for (std::size_t i = 0; i < args.size(); ++i)
    parsed.push_back(parse_formula(args[i], nvars, path + "/args/" + std::to_string(i)));
  if (op == "and") return Formula::conjunction(std::move(parsed));
  if (op == "or") return Formula::disjunction(std::move(parsed));
  if (op == "not") {
    if (parsed.size() != 1) fail(path + "/args", "not takes exactly one argument");
    return Formula::negation(std::move(parsed[0]));
  }
  fail(path + "/op", "unknown operator '" + op + "'");
}

json emit_formula(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::truth: return {{"op", "true"}};
    case K::falsity: return {{"op", "false"}};
    case K::atom: {
      json a = {{"rel", to_string(f.rel)}, {"poly", emit_poly(f.poly)}};
      if (!f.name.empty()) a["name"] = f.name;
      return a;
    }
    case K::conj:
    case K::disj:
    case K::neg: {
      json args = json::array();
      for (const auto& a : f.args) args.push_back(emit_formula(a));
      return {{"op", f.kind == K::conj ? "and" : f.kind == K::disj ? "or" : "not"}, {"args", args}};
    }
  }
  return {};
}

bool scalar_array(const json& j) {
  if (!j.is_array()) return false;
  return std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
}

// Like dump(2), but arrays of scalars stay on one line.
void pretty(const json& j, int depth, std::string& out) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + json(it.key()).dump() + ": ";
      pretty(it.value(), depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * static_cast<std::size_t>(depth), ' ') + "}";
  } else if (j.is_array() && !j.empty() && !scalar_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      pretty(j[i], depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * static_cast<std::size_t>(depth), ' ') + "]";
  } else if (scalar_array(j) && !j.empty()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

Problem parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!j.is_object()) fail("", "expected a problem object");
  Problem p;
  if (j.contains("name")) p.name = as_string(j["name"], "/name");
  const json& vars = as_array(field(j, "vars", ""), "/vars");
  for (std::size_t i = 0; i < vars.size(); ++i) p.vars.push_back(as_string(vars[i], "/vars/" + std::to_string(i)));
  auto var_index = [&](const std::string& name, const std::string& path) {
    for (std::size_t i = 0; i < p.vars.size(); ++i)
      if (p.vars[i] == name) return Var{i};
    fail(path, "undeclared variable '" + name + "'");
  };
  if (j.contains("blocks")) {
    const json& blocks = as_array(j["blocks"], "/blocks");
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::string bp = "/blocks/" + std::to_string(b);
      QuantifierBlock qb;
      const std::string q = as_string(field(blocks[b], "quantifier", bp), bp + "/quantifier");
      if (q == "exists")
        qb.quantifier = Quantifier::exists;
      else if (q == "forall")
        qb.quantifier = Quantifier::forall;
      else
        fail(bp + "/quantifier", "expected exists or forall");
      const json& bv = as_array(field(blocks[b], "vars", bp), bp + "/vars");
      for (std::size_t i = 0; i < bv.size(); ++i) {
        const std::string vp = bp + "/vars/" + std::to_string(i);
        qb.vars.push_back(var_index(as_string(bv[i], vp), vp));
      }
      p.blocks.push_back(std::move(qb));
    }
  }
  if (j.contains("formula")) p.formula = parse_formula(j["formula"], p.nvars(), "/formula");
  if (j.contains("polys")) {
    const json& ps = as_array(j["polys"], "/polys");
    for (std::size_t i = 0; i < ps.size(); ++i) p.polys.push_back(parse_poly(ps[i], p.nvars(), "/polys/" + std::to_string(i)));
  }
  if (!p.formula && !j.contains("polys")) fail("/formula", "missing required field (formula or polys)");
  if (j.contains("metadata")) {
    const json& md = j["metadata"];
    if (!md.is_object()) fail("/metadata", "expected an object");
    for (auto it = md.begin(); it != md.end(); ++it)
      p.metadata[it.key()] = as_string(it.value(), "/metadata/" + it.key());
  }
  try {
    validate(p);
  } catch (const DomainError& e) {
    fail("", e.what());
  }
  return p;
}

std::string emit_json(const Problem& p) {
  json j;
  j["name"] = p.name;
  j["vars"] = p.vars;
  json blocks = json::array();
  for (const auto& b : p.blocks) {
    json names = json::array();
    for (Var v : b.vars) names.push_back(p.vars[v.id]);
    blocks.push_back({{"quantifier", b.quantifier == Quantifier::exists ? "exists" : "forall"}, {"vars", names}});
  }
  j["blocks"] = blocks;
  if (p.formula) j["formula"] = emit_formula(*p.formula);
  if (!p.formula || !p.polys.empty()) {
    json ps = json::array();
    for (const auto& q : p.polys) ps.push_back(emit_poly(q));
    j["polys"] = ps;
  }
  j["metadata"] = json(p.metadata);
  std::string out;
  pretty(j, 0, out);
  return out + "\n";
}

}  // namespace cadlab
