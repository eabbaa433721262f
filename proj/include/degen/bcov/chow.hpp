#pragma once

#include "degen/exactalg/polynomial.hpp"

namespace degen::bcov {

using exactalg::PolynomialQ;
using exactalg::Rational;

// Chow ring Q[h]/h^{dim+1} of P^n or of a smooth degree d hypersurface W in
// P^n (dim = n - 1, int_W h^{n-1} = d). Classes are polynomials in h.
class ChowRing {
 public:
  static ChowRing projective_space(long n);
  static ChowRing hypersurface(long n, long d);

  long dim() const { return dim_; }
  PolynomialQ h() const { return PolynomialQ::x(); }
  // c_1 of O(k)
  PolynomialQ line(long k) const { return PolynomialQ{Rational(0), Rational(k)}; }
  // Total Chern class of the cotangent bundle: (1-h)^{n+1} on P^n,
  // (1-h)^{n+1} / (1-dh) on W.
  const PolynomialQ& omega() const { return omega_; }
  // c_i(Omega)
  PolynomialQ c(long i) const;
  PolynomialQ mul(const PolynomialQ& a, const PolynomialQ& b) const { return truncate(a * b); }
  PolynomialQ truncate(const PolynomialQ& a) const;
  // Degree of the top-dimensional component.
  Rational integrate(const PolynomialQ& a) const;
  // Same, but throws DimensionError unless `a` is homogeneous of top degree.
  Rational integrate_top(const PolynomialQ& a) const;
  // Topological Euler characteristic (-1)^dim int c_dim(Omega).
  Rational euler() const;

 private:
  ChowRing(long dim, Rational degree, PolynomialQ omega)
      : dim_(dim), degree_(std::move(degree)), omega_(std::move(omega)) {}
  long dim_;
  Rational degree_;
  PolynomialQ omega_;
};

}  // namespace degen::bcov
