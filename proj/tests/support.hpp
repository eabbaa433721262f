#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "degen/exactalg/cyclotomic.hpp"
#include "degen/exactalg/matrix.hpp"

namespace degen::testing {

using exactalg::Rational;
using exactalg::RationalMatrix;

inline Rational R(const char* s) { return Rational::parse(s); }

inline RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  RationalMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline RationalMatrix random_integer_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c,
                                            long lo, long hi) {
  RationalMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Rational(uniform(rng, lo, hi));
  return m;
}

// Product of elementary row operations: integral with integral inverse.
inline RationalMatrix random_unimodular(std::mt19937_64& rng, Eigen::Index n, int steps = 12) {
  RationalMatrix p = RationalMatrix::Identity(n, n);
  if (n < 2) return p;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<Eigen::Index>(uniform(rng, 0, n - 1));
    auto j = static_cast<Eigen::Index>(uniform(rng, 0, n - 2));
    if (j >= i) ++j;
    p.row(i) += Rational(uniform(rng, -2, 2)) * p.row(j);
  }
  return p;
}

inline RationalMatrix companion(const exactalg::PolynomialQ& p) {
  const auto n = static_cast<Eigen::Index>(p.degree());
  RationalMatrix c = RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = Rational(1);
  for (Eigen::Index i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(static_cast<std::size_t>(i));
  return c;
}

inline RationalMatrix block_diag(const std::vector<RationalMatrix>& blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  RationalMatrix m = RationalMatrix::Zero(n, n);
  Eigen::Index o = 0;
  for (const auto& b : blocks) {
    m.block(o, o, b.rows(), b.cols()) = b;
    o += b.rows();
  }
  return m;
}

struct QuasiUnipotentSample {
  RationalMatrix m;
  RationalMatrix semisimple;  // conjugate of the block-diagonal companion part
  unsigned long order = 1;
};

// Blocks [[C, I], [0, C]] (or C alone) for companion matrices C of Phi_d,
// conjugated by a random unimodular matrix. The semisimple part is known.
inline QuasiUnipotentSample random_quasi_unipotent(std::mt19937_64& rng, Eigen::Index max_dim) {
  static const unsigned long ds[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12};
  std::vector<RationalMatrix> blocks, semis;
  Eigen::Index n = 0;
  unsigned long order = 1;
  while (true) {
    const unsigned long d = ds[uniform(rng, 0, 11)];
    const RationalMatrix c = companion(exactalg::cyclotomic(d));
    const bool jordan = uniform(rng, 0, 2) == 0;
    const Eigen::Index sz = c.rows() * (jordan ? 2 : 1);
    if (n + sz > max_dim) {
      if (n > 0) break;
      continue;
    }
    if (jordan) {
      const Eigen::Index k = c.rows();
      RationalMatrix b = RationalMatrix::Zero(2 * k, 2 * k);
      b.topLeftCorner(k, k) = c;
      b.bottomRightCorner(k, k) = c;
      b.topRightCorner(k, k) = RationalMatrix::Identity(k, k);
      blocks.push_back(b);
      semis.push_back(block_diag({c, c}));
    } else {
      blocks.push_back(c);
      semis.push_back(c);
    }
    order = std::lcm(order, d);
    n += sz;
    if (uniform(rng, 0, 3) == 0) break;
  }
  const RationalMatrix p = random_unimodular(rng, n);
  const RationalMatrix pinv = exactalg::inverse<Rational>(p);
  return {p * block_diag(blocks) * pinv, p * block_diag(semis) * pinv, order};
}

}  // namespace degen::testing
