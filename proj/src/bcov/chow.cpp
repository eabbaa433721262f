#include "degen/bcov/chow.hpp"

#include "degen/error.hpp"

namespace degen::bcov {

namespace {

PolynomialQ one_minus_h_pow(long e) {
  PolynomialQ p = PolynomialQ::constant(Rational(1));
  const PolynomialQ f{Rational(1), Rational(-1)};
  for (long i = 0; i < e; ++i) p = p * f;
  return p;
}

}  // namespace

ChowRing ChowRing::projective_space(long n) {
  if (n < 0) throw DimensionError("ChowRing: negative dimension");
  ChowRing r(n, Rational(1), PolynomialQ{});
  r.omega_ = r.truncate(one_minus_h_pow(n + 1));
  return r;
}

ChowRing ChowRing::hypersurface(long n, long d) {
  if (n < 1 || d < 1) throw DimensionError("ChowRing: hypersurface needs n >= 1, d >= 1");
  ChowRing r(n - 1, Rational(d), PolynomialQ{});
  // 1 / (1 - dh) = sum (dh)^i
  std::vector<Rational> inv;
  Rational pw(1);
  for (long i = 0; i <= r.dim_; ++i, pw *= Rational(d)) inv.push_back(pw);
  r.omega_ = r.mul(one_minus_h_pow(n + 1), PolynomialQ(inv));
  return r;
}

PolynomialQ ChowRing::c(long i) const {
  if (i < 0 || i > dim_) return {};
  return PolynomialQ::monomial(omega_.coeff(static_cast<std::size_t>(i)), static_cast<std::size_t>(i));
}

PolynomialQ ChowRing::truncate(const PolynomialQ& a) const {
  std::vector<Rational> c;
  for (long i = 0; i <= std::min(a.degree(), dim_); ++i) c.push_back(a.coeff(static_cast<std::size_t>(i)));
  return PolynomialQ(c);
}

Rational ChowRing::integrate(const PolynomialQ& a) const {
  return degree_ * a.coeff(static_cast<std::size_t>(dim_));
}

Rational ChowRing::integrate_top(const PolynomialQ& a) const {
  for (long i = 0; i <= a.degree(); ++i)
    if (i != dim_ && !a.coeff(static_cast<std::size_t>(i)).is_zero())
      throw DimensionError("ChowRing: class has a component of degree " + std::to_string(i) +
                           ", expected pure degree " + std::to_string(dim_));
  return integrate(a);
}

Rational ChowRing::euler() const {
  return Rational(dim_ % 2 ? -1 : 1) * integrate(c(dim_));
}

}  // namespace degen::bcov
