#include "degen/periods/periods.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>
#include <string>

#include "degen/error.hpp"

namespace degen::periods {

double agm(double a, double b) {
  if (!(a > 0) || !(b > 0)) throw PreconditionError("agm: arguments must be positive");
  for (int i = 0; i < 100 && std::abs(a - b) >= 1e-15 * a; ++i) {
    const double m = (a + b) / 2;
    b = std::sqrt(a * b);
    a = m;
  }
  return a;
}

double elliptic_k(double k) {
  if (!(k >= 0) || !(k < 1)) throw PreconditionError("elliptic_k: modulus must lie in [0, 1)");
  return std::numbers::pi / (2 * agm(1, std::sqrt((1 - k) * (1 + k))));
}

namespace {

void require_lambda(double lambda) {
  if (!(lambda > 0) || !(lambda < 0.5)) throw PreconditionError("legendre: lambda must lie in (0, 1/2)");
}

}  // namespace

double legendre_norm(double lambda) {
  require_lambda(lambda);
  return 4 * elliptic_k(std::sqrt(lambda)) * elliptic_k(std::sqrt(1 - lambda));
}

double nome(double lambda) {
  require_lambda(lambda);
  return std::exp(-std::numbers::pi * elliptic_k(std::sqrt(1 - lambda)) / elliptic_k(std::sqrt(lambda)));
}

std::vector<NormSample> legendre_samples(double lo, double hi, int count, Coordinate coord) {
  if (count < 2 || !(lo > 0) || !(hi > lo)) throw PreconditionError("legendre_samples: bad range");
  std::vector<NormSample> out;
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < count; ++i) {
    const double lambda = std::exp(a + (b - a) * i / (count - 1));
    out.push_back({coord == Coordinate::Nome ? nome(lambda) : lambda, std::log(legendre_norm(lambda))});
  }
  return out;
}

FitResult fit_asymptotics(const std::vector<NormSample>& samples) {
  if (samples.size() < 8) throw PreconditionError("fit_asymptotics: need at least 8 samples");
  double lo = 1, hi = 0;
  for (const auto& s : samples) {
    if (!(s.t > 0) || !(s.t < 1) || !std::isfinite(s.value))
      throw PreconditionError("fit_asymptotics: samples need t in (0, 1) and finite values");
    lo = std::min(lo, s.t);
    hi = std::max(hi, s.t);
  }
  if (std::log10(hi / lo) < 3) throw PreconditionError("fit_asymptotics: samples must span 3 decades");

  const auto m = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd a(m, 3);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double t = samples[static_cast<std::size_t>(i)].t;
    a(i, 0) = 2 * std::log(t);
    a(i, 1) = std::log(-std::log(t));
    a(i, 2) = 1;
    y(i) = samples[static_cast<std::size_t>(i)].value;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < 3) throw Error("fit_asymptotics: degenerate design matrix");
  const Eigen::VectorXd c = qr.solve(y);
  FitResult r;
  r.alpha_hat = c(0);
  r.beta_hat = c(1);
  r.const_hat = c(2);
  r.residual = std::sqrt((a * c - y).squaredNorm() / static_cast<double>(m));
  return r;
}

std::vector<NormSample> read_csv(std::istream& in) {
  std::vector<NormSample> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    NormSample s;
    if (!(ss >> s.t >> s.value)) {
      if (lineno == 1) continue;
      throw ValidationError("/csv/" + std::to_string(lineno), "expected two numeric columns t, value");
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace degen::periods
