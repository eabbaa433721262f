#include "degen/exactalg/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace degen::exactalg {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s))
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer n = parse_integer(text.substr(0, slash));
  std::string_view dtext = text.substr(slash + 1);
  if (!dtext.empty() && (dtext[0] == '-' || dtext[0] == '+'))
    throw std::invalid_argument("signed denominator: '" + std::string(text) + "'");
  Integer d = parse_integer(dtext);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, long e) {
  if (e < 0) return pow(Rational(1) / x, -e);
  Rational r(1), b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace degen::exactalg
