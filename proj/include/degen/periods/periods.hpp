#pragma once

#include <iosfwd>
#include <vector>

namespace degen::periods {

// Iterates until |a - b| < 1e-15 a. Throws PreconditionError unless a, b > 0.
double agm(double a, double b);
// Complete elliptic integral of the first kind K(k), 0 <= k < 1.
double elliptic_k(double k);

// Squared L^2 norm of dx/y on y^2 = x(x-1)(x-lambda), real lambda in (0, 1/2):
// |Im(conj(pi_1) pi_2)| = 4 K(k) K(k') with k^2 = lambda.
double legendre_norm(double lambda);
// q = exp(-pi K(k') / K(k)).
double nome(double lambda);

struct NormSample {
  double t = 0;      // |t|
  double value = 0;  // log of the squared norm
};

struct FitResult {
  double alpha_hat = 0;  // coefficient of log t^2
  double beta_hat = 0;   // coefficient of log log t^{-1}
  double const_hat = 0;
  double residual = 0;   // root mean square
};

enum class Coordinate { Nome, Lambda };

// `count` log-spaced values of lambda in [lo, hi]; t is the nome or lambda.
std::vector<NormSample> legendre_samples(double lo, double hi, int count, Coordinate coord = Coordinate::Nome);

// Least squares for value = alpha log t^2 + beta log log t^{-1} + C.
// Needs >= 8 samples with t in (0, 1) spanning >= 3 decades.
FitResult fit_asymptotics(const std::vector<NormSample>& samples);

// Columns t, value; an optional non-numeric header line is skipped.
std::vector<NormSample> read_csv(std::istream& in);

}  // namespace degen::periods
