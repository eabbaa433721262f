#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <utility>
#include <vector>

#include "degen/error.hpp"
#include "degen/exactalg/rational.hpp"

namespace degen::exactalg {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Mat<Rational>;
using RationalVector = Vec<Rational>;

template <typename Scalar>
bool is_zero(const Mat<Scalar>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

template <typename Scalar>
void require_square(const Mat<Scalar>& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw DimensionError(std::string(what) + ": expected a nonempty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

template <typename Scalar>
Mat<Scalar> identity(Eigen::Index n) {
  return Mat<Scalar>::Identity(n, n);
}

template <typename Scalar>
Mat<Scalar> power(const Mat<Scalar>& m, long e) {
  require_square(m, "power");
  Mat<Scalar> r = identity<Scalar>(m.rows());
  Mat<Scalar> b = m;
  while (e > 0) {
    if (e & 1) r = (r * b).eval();
    e >>= 1;
    if (e > 0) b = (b * b).eval();
  }
  return r;
}

// Row echelon form by Bareiss fraction-free elimination. Every intermediate
// entry is a minor of the input, so integral input stays integral.
template <typename Scalar>
struct Echelon {
  Mat<Scalar> form;
  std::vector<Eigen::Index> pivot_cols;
  int sign = 1;  // parity of the row swaps
};

template <typename Scalar>
Echelon<Scalar> bareiss(Mat<Scalar> a) {
  Echelon<Scalar> out;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Scalar prev(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.row(p).swap(a.row(r));
      out.sign = -out.sign;
    }
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = Scalar(0);
    }
    prev = a(r, c);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.form = std::move(a);
  return out;
}

// Scales each row by the lcm of its denominators; rank, kernel and row space
// are unchanged.
inline RationalMatrix clear_denominators(const RationalMatrix& m) {
  RationalMatrix out = m;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer l(1);
    for (Eigen::Index j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).den());
    if (l != 1) out.row(i) *= Rational(l);
  }
  return out;
}

template <typename Scalar>
Echelon<Scalar> echelon(const Mat<Scalar>& m) {
  return bareiss<Scalar>(m);
}

template <>
inline Echelon<Rational> echelon<Rational>(const RationalMatrix& m) {
  return bareiss<Rational>(clear_denominators(m));
}

template <typename Scalar>
Eigen::Index rank(const Mat<Scalar>& m) {
  return static_cast<Eigen::Index>(echelon(m).pivot_cols.size());
}

// Columns form a basis of the null space.
template <typename Scalar>
Mat<Scalar> kernel(const Mat<Scalar>& m) {
  const Echelon<Scalar> e = echelon(m);
  const Eigen::Index cols = m.cols();
  const auto& piv = e.pivot_cols;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);

  Mat<Scalar> basis = Mat<Scalar>::Zero(cols, static_cast<Eigen::Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    const auto fc = static_cast<Eigen::Index>(f);
    basis(free[f], fc) = Scalar(1);
    for (std::size_t r = piv.size(); r-- > 0;) {
      const auto rr = static_cast<Eigen::Index>(r);
      const Eigen::Index pc = piv[r];
      Scalar acc(0);
      for (Eigen::Index j = pc + 1; j < cols; ++j) acc += e.form(rr, j) * basis(j, fc);
      basis(pc, fc) = -acc / e.form(rr, pc);
    }
  }
  return basis;
}

// A basis of the column space taken from the columns of m itself.
template <typename Scalar>
Mat<Scalar> column_space(const Mat<Scalar>& m) {
  const auto piv = echelon(m).pivot_cols;
  Mat<Scalar> out(m.rows(), static_cast<Eigen::Index>(piv.size()));
  for (std::size_t i = 0; i < piv.size(); ++i)
    out.col(static_cast<Eigen::Index>(i)) = m.col(piv[i]);
  return out;
}

template <typename Scalar>
Mat<Scalar> hstack(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  Mat<Scalar> out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

template <typename Scalar>
Mat<Scalar> subspace_sum(const Mat<Scalar>& u, const Mat<Scalar>& v) {
  return column_space<Scalar>(hstack<Scalar>(u, v));
}

template <typename Scalar>
Mat<Scalar> subspace_intersection(const Mat<Scalar>& u, const Mat<Scalar>& v) {
  if (u.cols() == 0 || v.cols() == 0) return Mat<Scalar>(u.rows(), 0);
  const Mat<Scalar> bu = column_space<Scalar>(u);
  const Mat<Scalar> bv = column_space<Scalar>(v);
  const Mat<Scalar> k = kernel<Scalar>(hstack<Scalar>(bu, Mat<Scalar>(-bv)));
  return column_space<Scalar>(Mat<Scalar>(bu * k.topRows(bu.cols())));
}

template <typename Scalar>
Scalar determinant(const Mat<Scalar>& m) {
  require_square(m, "determinant");
  const Echelon<Scalar> e = bareiss<Scalar>(m);
  if (static_cast<Eigen::Index>(e.pivot_cols.size()) < m.rows()) return Scalar(0);
  const Scalar last = e.form(m.rows() - 1, m.cols() - 1);
  return e.sign < 0 ? Scalar(-last) : last;
}

// Gauss-Jordan inverse over a field.
template <typename Scalar>
Mat<Scalar> inverse(const Mat<Scalar>& m) {
  require_square(m, "inverse");
  const Eigen::Index n = m.rows();
  Mat<Scalar> a = m;
  Mat<Scalar> inv = identity<Scalar>(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c) == Scalar(0)) ++p;
    if (p == n) throw DimensionError("inverse: singular matrix");
    if (p != c) {
      a.row(p).swap(a.row(c));
      inv.row(p).swap(inv.row(c));
    }
    const Scalar d = a(c, c);
    a.row(c) /= d;
    inv.row(c) /= d;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || a(i, c) == Scalar(0)) continue;
      const Scalar f = a(i, c);
      a.row(i) -= f * a.row(c);
      inv.row(i) -= f * inv.row(c);
    }
  }
  return inv;
}

// Solves a * x = b for x when b lies in the column space of a (a of full
// column rank); returns false otherwise.
template <typename Scalar>
bool solve_in_span(const Mat<Scalar>& a, const Vec<Scalar>& b, Vec<Scalar>& x) {
  Mat<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const Mat<Scalar> k = kernel<Scalar>(aug);
  for (Eigen::Index j = 0; j < k.cols(); ++j) {
    const Scalar last = k(a.cols(), j);
    if (last != Scalar(0)) {
      x = -k.col(j).head(a.cols()) / last;
      return true;
    }
  }
  return false;
}

}  // namespace degen::exactalg
