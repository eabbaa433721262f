#include "degen/exactalg/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace degen::exactalg {

namespace {

std::vector<unsigned long> prime_factors(unsigned long d) {
  std::vector<unsigned long> ps;
  for (unsigned long p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    ps.push_back(p);
    while (d % p == 0) d /= p;
  }
  if (d > 1) ps.push_back(d);
  return ps;
}

PolynomialQ compute_cyclotomic(unsigned long d) {
  // Phi_1 = x - 1; Phi_{mp}(x) = Phi_m(x^p) / Phi_m(x) for a new prime p;
  // Phi_d(x) = Phi_rad(d)(x^{d / rad(d)}).
  PolynomialQ phi{Rational(-1), Rational(1)};
  unsigned long rad = 1;
  for (unsigned long p : prime_factors(d)) {
    phi = phi.inflate(p).divmod(phi).first;
    rad *= p;
  }
  return phi.inflate(d / rad);
}

}  // namespace

unsigned long euler_phi(unsigned long d) {
  unsigned long r = d;
  for (unsigned long p : prime_factors(d)) r = r / p * (p - 1);
  return r;
}

const PolynomialQ& cyclotomic(unsigned long d) {
  static std::mutex mu;
  static std::map<unsigned long, PolynomialQ> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, compute_cyclotomic(d)).first;
  return it->second;
}

CyclotomicFactorization cyclotomic_factor(const PolynomialQ& p) {
  CyclotomicFactorization out;
  PolynomialQ rest = p;
  // phi(d) >= sqrt(d / 2), so d <= 2 deg^2 covers every candidate.
  const unsigned long deg = p.degree() > 0 ? static_cast<unsigned long>(p.degree()) : 0;
  const unsigned long bound = std::max<unsigned long>(2, 2 * deg * deg);
  for (unsigned long d = 1; d <= bound && rest.degree() > 0; ++d) {
    if (euler_phi(d) > static_cast<unsigned long>(rest.degree())) continue;
    const PolynomialQ& phi = cyclotomic(d);
    unsigned mult = 0;
    while (rest.degree() >= phi.degree()) {
      auto [q, r] = rest.divmod(phi);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    if (mult) out.factors.emplace_back(d, mult);
  }
  out.remainder = rest;
  return out;
}

}  // namespace degen::exactalg
