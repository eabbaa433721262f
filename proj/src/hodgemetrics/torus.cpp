#include "degen/hodgemetrics/torus.hpp"

#include <string>

#include "degen/error.hpp"

namespace degen::hodgemetrics {

using exactalg::determinant;
using exactalg::identity;
using exactalg::inverse;

namespace {

Rational rational_sqrt(const Rational& x) {
  const exactalg::Integer p = x.num(), q = x.den();
  if (x.sign() < 0 || !mpz_perfect_square_p(p.get_mpz_t()) || !mpz_perfect_square_p(q.get_mpz_t()))
    throw Error("volume: " + x.str() + " is not a rational square");
  return Rational(exactalg::Integer(sqrt(p)), exactalg::Integer(sqrt(q)));
}

}  // namespace

void validate(const TorusDescriptor& t) {
  if (t.n < 1) throw ValidationError("/n", "dimension must be positive");
  const Eigen::Index m = 2 * t.n;
  if (t.J.rows() != m || t.J.cols() != m) throw ValidationError("/J", "expected a " + std::to_string(m) + "x" + std::to_string(m) + " matrix");
  if (t.omega.rows() != m || t.omega.cols() != m)
    throw ValidationError("/omega", "expected a " + std::to_string(m) + "x" + std::to_string(m) + " matrix");
  if (RationalMatrix(t.J * t.J) != RationalMatrix(-identity<Rational>(m))) throw ValidationError("/J", "J^2 != -I");
  if (RationalMatrix(t.omega.transpose()) != RationalMatrix(-t.omega))
    throw ValidationError("/omega", "not alternating");
  if (RationalMatrix(t.J.transpose() * t.omega * t.J) != t.omega)
    throw ValidationError("/omega", "not J-invariant");
  const RationalMatrix g = metric(t);
  for (Eigen::Index k = 1; k <= m; ++k)
    if (determinant<Rational>(g.topLeftCorner(k, k)).sign() <= 0)
      throw ValidationError("/omega", "omega(x, Jy) is not positive definite");
}

RationalMatrix metric(const TorusDescriptor& t) { return t.omega * t.J; }

Rational volume(const TorusDescriptor& t) { return rational_sqrt(determinant<Rational>(t.omega)); }

std::vector<std::vector<long>> subsets(long size, long k) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long start) -> void {
    if (static_cast<long>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (long i = start; i < size; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

RationalMatrix compound(const RationalMatrix& m, long k) {
  const auto rows = subsets(m.rows(), k), cols = subsets(m.cols(), k);
  RationalMatrix c(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  if (k == 0) {
    c(0, 0) = Rational(1);
    return c;
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      RationalMatrix minor(k, k);
      for (long a = 0; a < k; ++a)
        for (long b = 0; b < k; ++b) minor(a, b) = m(rows[i][static_cast<std::size_t>(a)], cols[j][static_cast<std::size_t>(b)]);
      c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = determinant<Rational>(minor);
    }
  return c;
}

RationalMatrix l2_gram(const TorusDescriptor& t, long k) {
  if (k < 0 || k > 2 * t.n) throw DimensionError("l2_gram: degree out of range");
  return volume(t) * compound(inverse<Rational>(metric(t)), k);
}

Rational covol_sq(const TorusDescriptor& t, long k) { return determinant<Rational>(l2_gram(t, k)); }

Rational b_factor_sq(const TorusDescriptor& t) {
  Rational b(1);
  for (long k = 0; k < t.n; ++k) {
    const long e = (k % 2 ? -1 : 1) * (t.n - k);
    b *= exactalg::pow(covol_sq(t, k), e);
  }
  return b;
}

CovolumeReport covolume_report(const TorusDescriptor& t) {
  validate(t);
  CovolumeReport r;
  for (long k = 0; k <= 2 * t.n; ++k) r.covol_sq.push_back(covol_sq(t, k));
  r.b_squared = b_factor_sq(t);
  return r;
}

RationalMatrix pullback(const TorusDescriptor& t, long k) {
  return compound(RationalMatrix(t.J.transpose()), k);
}

TorusDescriptor square_elliptic() {
  TorusDescriptor t;
  t.n = 1;
  t.J = RationalMatrix(2, 2);
  t.J << Rational(0), Rational(-1), Rational(1), Rational(0);
  t.omega = RationalMatrix(2, 2);
  t.omega << Rational(0), Rational(1), Rational(-1), Rational(0);
  return t;
}

TorusDescriptor product(const TorusDescriptor& a, const TorusDescriptor& b) {
  TorusDescriptor t;
  t.n = a.n + b.n;
  const Eigen::Index ma = 2 * a.n, mb = 2 * b.n;
  t.J = RationalMatrix::Zero(ma + mb, ma + mb);
  t.omega = RationalMatrix::Zero(ma + mb, ma + mb);
  t.J.topLeftCorner(ma, ma) = a.J;
  t.J.bottomRightCorner(mb, mb) = b.J;
  t.omega.topLeftCorner(ma, ma) = a.omega;
  t.omega.bottomRightCorner(mb, mb) = b.omega;
  return t;
}

}  // namespace degen::hodgemetrics
