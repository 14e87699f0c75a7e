#include "cadlab/realroots.hpp"

#include <algorithm>
#include <sstream>

#include "cadlab/deadline.hpp"
#include "cadlab/error.hpp"

namespace cadlab {

AlgebraicNumber::AlgebraicNumber(const Rational& q) : poly_(UPoly::linear_root(q)), lo_(q - 1), hi_(q + 1) {}

AlgebraicNumber::AlgebraicNumber(UPoly poly, Rational lo, Rational hi)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

std::optional<Rational> AlgebraicNumber::rational_value() const {
  if (!is_rational()) return std::nullopt;
  Rational q(-poly_.coeffs()[0], poly_.coeffs()[1]);
  q.canonicalize();
  return q;
}

Rational AlgebraicNumber::lower_bound() const {
  if (auto q = rational_value()) return *q;
  return lo_;
}

Rational AlgebraicNumber::upper_bound() const {
  if (auto q = rational_value()) return *q;
  return hi_;
}

void AlgebraicNumber::bisect() {
  if (auto q = rational_value()) {
    Rational quarter = (hi_ - lo_) / 4;
    lo_ = *q - quarter;
    hi_ = *q + quarter;
    return;
  }
  Rational mid = (lo_ + hi_) / 2;
  int s = poly_.sign_at(mid);
  if (s == 0) {
    *this = AlgebraicNumber(mid);
    return;
  }
  if (s == poly_.sign_at(lo_))
    lo_ = std::move(mid);
  else
    hi_ = std::move(mid);
}

double AlgebraicNumber::approx() const {
  if (auto q = rational_value()) return q->get_d();
  AlgebraicNumber copy = *this;
  while (Rational(copy.hi_ - copy.lo_) > Rational(1, 1u << 30)) copy.bisect();
  return Rational((copy.lower_bound() + copy.upper_bound()) / 2).get_d();
}

std::string AlgebraicNumber::to_string(const std::string& var) const {
  if (auto q = rational_value()) return cadlab::to_string(*q);
  std::ostringstream os;
  os << "root(" << poly_.to_string(var) << ", " << cadlab::to_string(lo_) << ", " << cadlab::to_string(hi_) << ")";
  return os.str();
}

namespace {

std::vector<Integer> taylor_shift_one(std::vector<Integer> c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] += c[j + 1];
  return c;
}

int descartes_bound_unit(const std::vector<Integer>& c) {
  // Sign variations of (x+1)^n Q(1/(x+1)) bound the roots of Q in (0, 1).
  std::vector<Integer> rev(c.rbegin(), c.rend());
  auto shifted = taylor_shift_one(std::move(rev));
  int variations = 0, last = 0;
  for (const auto& a : shifted) {
    int s = sgn(a);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

struct RawRoot {
  Rational lo, hi;
  bool exact;
};

// Positive real roots of a square-free p with p(0) != 0.
void isolate_positive(const UPoly& p, std::vector<RawRoot>& out) {
  const auto& a = p.coeffs();
  const std::size_t n = a.size() - 1;
  if (n == 0) return;
  // Cauchy bound 1 + max|a_i / a_n| <= 2^k.
  Rational ratio = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational r(abs(a[i]), abs(a[n]));
    r.canonicalize();
    ratio = std::max(ratio, r);
  }
  ratio += 1;
  unsigned k = 0;
  Rational bound = 1;
  while (bound < ratio) {
    bound *= 2;
    ++k;
  }
  std::vector<Integer> q(a.begin(), a.end());
  Integer scale = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    q[i] *= scale;
    scale <<= k;
  }
  struct Task {
    std::vector<Integer> c;
    Integer num;
    unsigned depth;
  };
  std::vector<Task> stack{{std::move(q), Integer(0), 0}};
  while (!stack.empty()) {
    check_deadline();
    Task t = std::move(stack.back());
    stack.pop_back();
    Rational width(Integer(1) << k, Integer(1) << t.depth);
    width.canonicalize();
    Rational lo = width * t.num;
    int v = descartes_bound_unit(t.c);
    if (v == 0) continue;
    if (v == 1) {
      out.push_back({lo, lo + width, false});
      continue;
    }
    // Q(1/2) * 2^n
    Integer mid_val = 0, pw = 1;
    for (std::size_t i = t.c.size(); i-- > 0;) {
      mid_val += t.c[i] * pw;
      pw <<= 1;
    }
    if (mid_val == 0) out.push_back({lo + width / 2, lo + width / 2, true});
    std::vector<Integer> left(t.c.size());
    for (std::size_t i = 0; i < t.c.size(); ++i) left[i] = t.c[i] << static_cast<unsigned>(n - i);
    auto right = taylor_shift_one(left);
    stack.push_back({std::move(right), 2 * t.num + 1, t.depth + 1});
    stack.push_back({std::move(left), 2 * t.num, t.depth + 1});
  }
}

}  // namespace

RootList isolate_real_roots(const UPoly& p_in) {
  if (p_in.is_zero()) throw DomainError("identically zero");
  UPoly p = squarefree_part(p_in);
  if (p.degree() < 1) return {};
  std::vector<RawRoot> raw;
  if (p.coeffs()[0] == 0) {
    raw.push_back({Rational(0), Rational(0), true});
    p = UPoly(std::vector<Integer>(p.coeffs().begin() + 1, p.coeffs().end()));
  }
  isolate_positive(p, raw);
  std::vector<RawRoot> neg;
  isolate_positive(p.reflect(), neg);
  for (auto& r : neg) raw.push_back({-r.hi, -r.lo, r.exact});

  // Exact rational roots may sit on interval endpoints; deflating them keeps
  // the defining polynomial free of roots at the ends.
  UPoly deflated = squarefree_part(p_in);
  for (const auto& r : raw)
    if (r.exact) deflated = exact_quotient(deflated, UPoly::linear_root(r.lo));

  // Rational roots with denominator b satisfy b | lc; once an interval is
  // narrower than 1/lc^2 the simplest fraction inside is the only candidate.
  if (mpz_sizeinbase(deflated.leading().get_mpz_t(), 2) <= 64) {
    const Rational target(1, Integer(deflated.leading() * deflated.leading()));
    for (auto& r : raw) {
      if (r.exact) continue;
      const int slo = deflated.sign_at(r.lo);
      while (!r.exact && Rational(r.hi - r.lo) >= target) {
        const Rational m = (r.lo + r.hi) / 2;
        const int sm = deflated.sign_at(m);
        if (sm == 0)
          r = {m, m, true};
        else if (sm == slo)
          r.lo = m;
        else
          r.hi = m;
      }
      if (r.exact) continue;
      const Rational q = simplest_between(r.lo, r.hi);
      if (deflated.sign_at(q) == 0) r = {q, q, true};
    }
    deflated = squarefree_part(p_in);
    for (const auto& r : raw)
      if (r.exact) deflated = exact_quotient(deflated, UPoly::linear_root(r.lo));
  }

  RootList roots;
  roots.reserve(raw.size());
  for (const auto& r : raw) {
    if (r.exact)
      roots.emplace_back(r.lo);
    else
      roots.emplace_back(deflated, r.lo, r.hi);
  }
  std::sort(roots.begin(), roots.end(),
            [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return a.lower_bound() < b.lower_bound(); });
  return roots;
}

RootList isolate_real_roots(const Poly& p) { return isolate_real_roots(UPoly::from_poly(p)); }

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width) {
  AlgebraicNumber r = a;
  while (Rational(r.hi() - r.lo()) > width) r.bisect();
  return r;
}

std::strong_ordering compare(const AlgebraicNumber& a_in, const AlgebraicNumber& b_in) {
  AlgebraicNumber a = a_in, b = b_in;
  bool checked_equal = false;
  while (true) {
    check_deadline();
    auto qa = a.rational_value(), qb = b.rational_value();
    if (qa && qb) return three_way(*qa, *qb);
    if (qa || qb) {
      const Rational q = qa ? *qa : *qb;
      AlgebraicNumber& alg = qa ? b : a;
      const bool a_is_q = static_cast<bool>(qa);
      while (q > alg.lo() && q < alg.hi()) {
        if (alg.poly().sign_at(q) == 0) return std::strong_ordering::equal;
        alg.bisect();
        if (alg.is_rational()) break;
      }
      if (alg.is_rational()) continue;
      // q is outside alg's interval
      bool q_below = q <= alg.lo();
      if (a_is_q) return q_below ? std::strong_ordering::less : std::strong_ordering::greater;
      return q_below ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (a.hi() <= b.lo()) return std::strong_ordering::less;
    if (b.hi() <= a.lo()) return std::strong_ordering::greater;
    if (!checked_equal) {
      checked_equal = true;
      UPoly g = gcd(a.poly(), b.poly());
      if (g.degree() >= 1 && sign_change(g, a.lo(), a.hi()) && sign_change(g, b.lo(), b.hi())) {
        Rational lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
        if (sign_change(g, lo, hi)) return std::strong_ordering::equal;
      }
    }
    a.bisect();
    b.bisect();
  }
}

void separate(AlgebraicNumber& a, AlgebraicNumber& b) {
  while (a.upper_bound() > b.lower_bound()) {
    check_deadline();
    if (!a.is_rational()) a.bisect();
    if (!b.is_rational()) b.bisect();
    if (a.is_rational() && b.is_rational() && a.upper_bound() > b.lower_bound())
      throw DomainError("separate() called on numbers that are not increasing");
  }
}

std::size_t count_distinct_real_roots(std::span<const Poly> polys) {
  std::optional<Var> var;
  UPoly product({Integer(1)});
  for (const auto& p : polys) {
    auto vars = p.variables();
    if (vars.size() > 1) throw DomainError("count_distinct_real_roots: non-univariate input");
    if (p.is_zero()) throw DomainError("identically zero");
    if (vars.empty()) continue;
    if (var && *var != vars[0]) throw DomainError("count_distinct_real_roots: inputs in different variables");
    var = vars[0];
    UPoly s = squarefree_part(UPoly::from_poly(p));
    UPoly g = gcd(product, s);
    product = product * exact_quotient(s, g);
  }
  return isolate_real_roots(product).size();
}

}  // namespace cadlab
