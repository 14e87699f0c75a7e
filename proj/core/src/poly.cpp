#include "cadlab/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cadlab {

std::uint32_t Monomial::total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

void require_same_space(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomials over different variable sequences");
}

}  // namespace

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.emplace_back(Monomial(nvars), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, Var v) {
  Poly p(nvars);
  p.terms_.emplace_back(Monomial::power(nvars, v, 1), Rational(1));
  return p;
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p(m.nvars());
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::map<Monomial, Rational, GrlexGreater> acc;
  for (auto& [m, c] : terms) {
    if (m.nvars() != nvars) throw std::invalid_argument("monomial arity mismatch");
    acc[m] += c;
  }
  Poly p(nvars);
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_coefficients(std::size_t nvars, std::span<const Poly> coeffs, Var v) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (const auto& [m, c] : coeffs[i].terms()) {
      Monomial mm = m;
      mm.set(v, m.degree(v) + static_cast<std::uint32_t>(i));
      terms.emplace_back(std::move(mm), c);
    }
  return from_terms(nvars, std::move(terms));
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

std::uint32_t Poly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree(v));
  return d;
}

std::uint32_t Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.total_degree(); }

bool Poly::contains(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first.degree(v) > 0; });
}

std::vector<Var> Poly::variables() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (contains(Var{i})) out.push_back(Var{i});
  return out;
}

std::size_t Poly::max_var() const {
  for (std::size_t i = nvars_; i-- > 0;)
    if (contains(Var{i})) return i;
  return npos;
}

std::vector<Poly> Poly::coefficients(Var v) const {
  if (is_zero()) return {};
  std::vector<Poly> out(degree(v) + 1, Poly(nvars_));
  // Terms stay sorted within each bucket because removing a fixed power of v
  // from monomials of equal v-degree preserves their relative grlex order.
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm.set(v, 0);
    out[m.degree(v)].terms_.emplace_back(std::move(mm), c);
  }
  return out;
}

Poly Poly::coefficient(Var v, std::uint32_t power) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree(v) == power) {
      Monomial mm = m;
      mm.set(v, 0);
      out.terms_.emplace_back(std::move(mm), c);
    }
  return out;
}

Poly Poly::leading_coefficient(Var v) const { return coefficient(v, degree(v)); }

Poly Poly::derivative(Var v) const {
  std::vector<Term> terms;
  for (const auto& [m, c] : terms_) {
    auto e = m.degree(v);
    if (e == 0) continue;
    Monomial mm = m;
    mm.set(v, e - 1);
    terms.emplace_back(std::move(mm), c * e);
  }
  return from_terms(nvars_, std::move(terms));
}

Poly Poly::substitute(Var v, const Rational& value) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    auto e = m.degree(v);
    Rational f = c;
    if (e > 0) {
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), e);
      f *= pw;
    }
    Monomial mm = m;
    mm.set(v, 0);
    terms.emplace_back(std::move(mm), std::move(f));
  }
  return from_terms(nvars_, std::move(terms));
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

Poly Poly::remap(std::span<const std::size_t> new_index, std::size_t new_nvars) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial mm(new_nvars);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (new_index[i] == npos) throw std::invalid_argument("remap drops a variable that occurs");
      mm.set(Var{new_index[i]}, mm[new_index[i]] + m[i]);
    }
    terms.emplace_back(std::move(mm), c);
  }
  return from_terms(new_nvars, std::move(terms));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_space(*this, o);
  Poly r(nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    auto c = grlex_compare(a->first, b->first);
    if (c > 0) {
      r.terms_.push_back(*a++);
    } else if (c < 0) {
      r.terms_.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (s != 0) r.terms_.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  r.terms_.insert(r.terms_.end(), a, terms_.end());
  r.terms_.insert(r.terms_.end(), b, o.terms_.end());
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  require_same_space(*this, o);
  if (is_zero() || o.is_zero()) return Poly(nvars_);
  if (o.is_constant()) return *this * o.constant_value();
  if (is_constant()) return o * constant_value();
  std::map<Monomial, Rational, GrlexGreater> acc;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
  Poly r(nvars_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  if (c == 0) return Poly(nvars_);
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, 1), base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool one = m.is_one();
    if (mag != 1 || one) {
      os << cadlab::to_string(mag);
      if (!one) os << "*";
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << names[i];
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

std::string Poly::to_string() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars_; ++i) names.push_back("x" + std::to_string(i));
  return to_string(names);
}

bool poly_less(const Poly& a, const Poly& b) {
  auto n = std::min(a.term_count(), b.term_count());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [ma, ca] = a.terms()[i];
    const auto& [mb, cb] = b.terms()[i];
    if (auto c = grlex_compare(ma, mb); c != 0) return c < 0;
    if (ca != cb) return ca < cb;
  }
  return a.term_count() < b.term_count();
}

Poly arith(const Poly& p, const Poly& q, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return p + q;
    case ArithKind::sub: return p - q;
    case ArithKind::mul: return p * q;
    case ArithKind::neg: return -p;
  }
  return p;
}

}  // namespace cadlab
