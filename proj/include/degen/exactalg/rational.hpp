#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace degen::exactalg {

using Integer = mpz_class;

// Arbitrary precision rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(Integer(std::to_string(v))) {}  // NOLINT
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p/q", "p" and optional leading sign; throws std::invalid_argument.
  static Rational parse(std::string_view text);

  // Always "p/q", integers render as "n/1".
  std::string str() const;

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& gmp() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  Integer floor() const;
  // Representative of this value modulo 1 in [0, 1).
  Rational frac() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;
};

Rational abs(const Rational& x);
Rational pow(const Rational& x, long e);
std::ostream& operator<<(std::ostream& os, const Rational& x);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace degen::exactalg

template <>
struct std::hash<degen::exactalg::Rational> {
  std::size_t operator()(const degen::exactalg::Rational& x) const noexcept {
    return std::hash<std::string>{}(x.str());
  }
};

namespace Eigen {

template <>
struct NumTraits<degen::exactalg::Rational>
    : GenericNumTraits<degen::exactalg::Rational> {
  using Real = degen::exactalg::Rational;
  using NonInteger = degen::exactalg::Rational;
  using Nested = degen::exactalg::Rational;
  using Literal = degen::exactalg::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
