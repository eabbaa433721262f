#pragma once

#include <utility>
#include <vector>

#include "degen/exactalg/polynomial.hpp"

namespace degen::exactalg {

unsigned long euler_phi(unsigned long d);

// Phi_d with integer coefficients.
const PolynomialQ& cyclotomic(unsigned long d);

struct CyclotomicFactorization {
  // (d, multiplicity), d ascending.
  std::vector<std::pair<unsigned long, unsigned>> factors;
  // What is left after removing every cyclotomic factor; constant iff p is a
  // product of cyclotomic polynomials (up to the leading coefficient).
  PolynomialQ remainder;

  bool complete() const { return remainder.degree() <= 0; }
};

CyclotomicFactorization cyclotomic_factor(const PolynomialQ& p);

}  // namespace degen::exactalg
