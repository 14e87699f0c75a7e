#include "cadlab/rational.hpp"

#include <cctype>

#include "cadlab/error.hpp"

namespace cadlab {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("", "empty number");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool negative = s[0] == '-';
  auto all_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string body = s.substr(start);
  Rational out;
  if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp)) throw ParseError("", "malformed decimal '" + s + "'");
    Integer num(ip + fp), den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    out = Rational(num, den);
  } else if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) throw ParseError("", "malformed rational '" + s + "'");
    Integer den(d);
    if (den == 0) throw ParseError("", "zero denominator in '" + s + "'");
    out = Rational(Integer(n), den);
  } else {
    if (!all_digits(body)) throw ParseError("", "malformed number '" + s + "'");
    out = Rational(Integer(body));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer integer_below(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c - 1;
}

Integer integer_above(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f + 1;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo < 0 && hi > 0) return 0;
  if (hi <= 0) return -simplest_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl + 1) < hi) return Rational(fl + 1);
  // fl <= lo < hi <= fl + 1
  if (lo == fl) return Rational(fl) + 1 / Rational(integer_above(1 / Rational(hi - fl)));
  Rational r = Rational(fl) + 1 / simplest_between(1 / Rational(hi - fl), 1 / Rational(lo - fl));
  r.canonicalize();
  return r;
}

}  // namespace cadlab
