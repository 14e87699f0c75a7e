#include "cadlab/upoly.hpp"

#include <sstream>

#include "cadlab/deadline.hpp"
#include "cadlab/error.hpp"

namespace cadlab {
namespace {

using RVec = std::vector<Rational>;

void trim(RVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

RVec to_rationals(const UPoly& p) {
  RVec v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return v;
}

// Remainder and quotient over Q.
void divide(RVec a, const RVec& b, RVec* quotient, RVec* remainder) {
  RVec q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  const Rational& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational f = a.back() / lb;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  if (quotient) *quotient = std::move(q);
  if (remainder) *remainder = std::move(a);
}

}  // namespace

UPoly::UPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_rationals(const std::vector<Rational>& coeffs) {
  Integer lcm = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(coeffs.size());
  for (const auto& c : coeffs) ints.push_back(c.get_num() * (lcm / c.get_den()));
  return primitive(UPoly(std::move(ints)));
}

UPoly UPoly::from_poly(const Poly& p) {
  auto vars = p.variables();
  if (vars.size() > 1) throw DomainError("polynomial is not univariate");
  if (p.is_zero()) return UPoly();
  if (vars.empty()) return from_rationals({p.constant_value()});
  auto coeffs = p.coefficients(vars[0]);
  RVec r;
  r.reserve(coeffs.size());
  for (const auto& c : coeffs) r.push_back(c.constant_value());
  return from_rationals(r);
}

UPoly UPoly::linear_root(const Rational& q) { return UPoly({-q.get_num(), q.get_den()}); }

Poly UPoly::to_poly(std::size_t nvars, Var v) const {
  std::vector<Poly::Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) terms.emplace_back(Monomial::power(nvars, v, static_cast<std::uint32_t>(i)), Rational(c_[i]));
  return Poly::from_terms(nvars, std::move(terms));
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

int UPoly::sign_at(const Rational& x) const {
  // Horner on num/den scaled by den^deg stays integral.
  if (c_.empty()) return 0;
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = c_.back(), dpow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    dpow *= d;
    acc = acc * n + c_[i] * dpow;
  }
  return sgn(acc);
}

UPoly UPoly::derivative() const {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::reflect() const {
  std::vector<Integer> r = c_;
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return UPoly(std::move(r));
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Integer mag = abs(c_[i]);
    os << (first ? (c_[i] < 0 ? "-" : "") : (c_[i] < 0 ? " - " : " + "));
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str() << (i > 0 ? "*" : "");
    if (i > 0) os << var << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

UPoly primitive(const UPoly& p) {
  if (p.is_zero()) return p;
  Integer g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (p.leading() < 0) g = -g;
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c / g);
  return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Integer> r(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return UPoly(std::move(r));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return primitive(b);
  if (b.is_zero()) return primitive(a);
  UPoly x = primitive(a), y = primitive(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    check_deadline();
    if (y.degree() == 0) return UPoly({Integer(1)});
    RVec r;
    divide(to_rationals(x), to_rationals(y), nullptr, &r);
    x = std::move(y);
    y = UPoly::from_rationals(r);
  }
  return primitive(x);
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  RVec q, r;
  divide(to_rationals(a), to_rationals(b), &q, &r);
  if (!r.empty()) throw DomainError("inexact univariate division");
  return UPoly::from_rationals(q);
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() < 1) return primitive(p);
  UPoly g = gcd(p, p.derivative());
  return g.degree() == 0 ? primitive(p) : exact_quotient(p, g);
}

bool sign_change(const UPoly& p, const Rational& lo, const Rational& hi) {
  return p.sign_at(lo) * p.sign_at(hi) < 0;
}

}  // namespace cadlab
