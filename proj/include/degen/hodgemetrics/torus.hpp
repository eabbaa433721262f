#pragma once

#include <vector>

#include "degen/exactalg/matrix.hpp"

namespace degen::hodgemetrics {

using exactalg::Rational;
using exactalg::RationalMatrix;

// Flat complex torus R^{2n}/Z^{2n}. J acts on lattice coordinates,
// omega(x, y) = x^T omega y, and g(x, y) = omega(x, J y).
struct TorusDescriptor {
  long n = 1;
  RationalMatrix J;
  RationalMatrix omega;
};

// Throws ValidationError with paths /n, /J, /omega.
void validate(const TorusDescriptor& t);

RationalMatrix metric(const TorusDescriptor& t);
// int omega^n / n! over a fundamental domain, i.e. |Pf(omega)|.
Rational volume(const TorusDescriptor& t);

// k-th compound matrix: determinants of the k x k minors, rows and columns
// indexed by k-subsets in lexicographic order.
RationalMatrix compound(const RationalMatrix& m, long k);
std::vector<std::vector<long>> subsets(long size, long k);

// L^2 Gram matrix of the integral k-forms e^I: vol * det(g^{-1}[I, J]).
RationalMatrix l2_gram(const TorusDescriptor& t, long k);
Rational covol_sq(const TorusDescriptor& t, long k);

struct CovolumeReport {
  std::vector<Rational> covol_sq;  // k = 0..2n
  Rational b_squared;
};

// B^2 = prod_{k=0}^{n-1} covol^2(k)^{(-1)^k (n-k)}, the duality-reduced form
// of prod_{k=1}^{2n} covol(k)^{(-1)^{k+1} k}.
Rational b_factor_sq(const TorusDescriptor& t);
CovolumeReport covolume_report(const TorusDescriptor& t);

// Pullback by J on k-forms in the e^I basis.
RationalMatrix pullback(const TorusDescriptor& t, long k);

// Standard square elliptic curve and products.
TorusDescriptor square_elliptic();
TorusDescriptor product(const TorusDescriptor& a, const TorusDescriptor& b);

}  // namespace degen::hodgemetrics
