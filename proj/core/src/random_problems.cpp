#include "cadlab/random_problems.hpp"

#include <json.hpp>
#include <random>

#include "cadlab/error.hpp"

namespace cadlab {

void validate(const RandomProfile& p) {
  if (p.nvars == 0 || p.npolys == 0 || p.max_degree == 0 || p.max_terms == 0 || p.coeff_range <= 0)
    throw DomainError("profile bounds must be positive");
  if (!(p.equality_fraction >= 0.0 && p.equality_fraction <= 1.0))
    throw DomainError("equality_fraction must lie in [0, 1]");
}

RandomProfile parse_profile(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!j.is_object()) throw ParseError("/", "expected a profile object");
  RandomProfile p;
  auto get_uint = [&](const char* key, auto& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_integer() || j[key].get<long long>() <= 0)
      throw ParseError(std::string("/") + key, "expected a positive integer");
    out = j[key].get<std::remove_reference_t<decltype(out)>>();
  };
  get_uint("nvars", p.nvars);
  get_uint("npolys", p.npolys);
  get_uint("max_degree", p.max_degree);
  get_uint("max_terms", p.max_terms);
  get_uint("coeff_range", p.coeff_range);
  if (j.contains("equality_fraction")) {
    if (!j["equality_fraction"].is_number()) throw ParseError("/equality_fraction", "expected a number");
    p.equality_fraction = j["equality_fraction"].get<double>();
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const char* known[] = {"nvars", "npolys", "max_degree", "max_terms", "coeff_range", "equality_fraction"};
    if (std::find(std::begin(known), std::end(known), it.key()) == std::end(known))
      throw ParseError("/" + it.key(), "unknown profile field");
  }
  try {
    validate(p);
  } catch (const DomainError& e) {
    throw ParseError("/", e.what());
  }
  return p;
}

std::string emit_profile(const RandomProfile& p) {
  nlohmann::json j = {{"nvars", p.nvars},           {"npolys", p.npolys},
                      {"max_degree", p.max_degree}, {"max_terms", p.max_terms},
                      {"coeff_range", p.coeff_range}, {"equality_fraction", p.equality_fraction}};
  return j.dump(2) + "\n";
}

namespace {

Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, std::uint32_t max_degree) {
  std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
  Monomial m(nvars);
  const std::uint32_t d = deg(rng);
  for (std::uint32_t i = 0; i < d; ++i) {
    const Var v{pick(rng)};
    m.set(v, m.degree(v) + 1);
  }
  return m;
}

Poly random_poly(std::mt19937_64& rng, const RandomProfile& p) {
  std::uniform_int_distribution<std::size_t> nterms(1, p.max_terms);
  std::uniform_int_distribution<std::int64_t> coeff(-p.coeff_range, p.coeff_range - 1);
  while (true) {
    const std::size_t k = nterms(rng);
    std::vector<Poly::Term> terms;
    for (std::size_t i = 0; i < k; ++i) {
      Monomial m = random_monomial(rng, p.nvars, p.max_degree);
      if (std::any_of(terms.begin(), terms.end(), [&](const auto& t) { return t.first == m; })) continue;
      std::int64_t c = coeff(rng);
      if (c >= 0) ++c;  // skip zero
      terms.emplace_back(std::move(m), Rational(static_cast<long>(c)));
    }
    Poly q = Poly::from_terms(p.nvars, std::move(terms));
    if (!q.is_constant()) return q;
  }
}

}  // namespace

std::vector<Problem> random_problems(std::uint64_t seed, std::size_t count, const RandomProfile& profile) {
  validate(profile);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> strict(0, 3);
  static const Rel others[] = {Rel::lt, Rel::le, Rel::gt, Rel::ge};
  std::vector<Problem> out;
  for (std::size_t i = 0; i < count; ++i) {
    Problem p;
    p.name = "random-" + std::to_string(seed) + "-" + std::to_string(i);
    for (std::size_t v = 0; v < profile.nvars; ++v) p.vars.push_back("x" + std::to_string(v + 1));
    std::vector<Formula> atoms;
    for (std::size_t k = 0; k < profile.npolys; ++k) {
      Poly q = random_poly(rng, profile);
      const Rel r = unit(rng) < profile.equality_fraction ? Rel::eq : others[strict(rng)];
      atoms.push_back(Formula::atom(std::move(q), r));
    }
    p.formula = Formula::conjunction(std::move(atoms));
    p.metadata["source"] = "random";
    p.metadata["seed"] = std::to_string(seed);
    p.metadata["index"] = std::to_string(i);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace cadlab
