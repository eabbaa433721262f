#pragma once

#include <string>
#include <utility>
#include <vector>

#include "degen/exactalg/matrix.hpp"

namespace degen::exactalg {

// Dense univariate polynomial over a field, lowest degree first. The zero
// polynomial has no coefficients.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& a) { return Polynomial(std::vector<Scalar>{a}); }
  static Polynomial monomial(const Scalar& a, std::size_t deg) {
    std::vector<Scalar> c(deg + 1, Scalar(0));
    c[deg] = a;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(Scalar(1), 1); }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  Scalar operator()(const Scalar& v) const {
    Scalar acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
  }

  // Horner evaluation at a square matrix.
  Mat<Scalar> operator()(const Mat<Scalar>& m) const {
    require_square(m, "polynomial evaluation");
    Mat<Scalar> acc = Mat<Scalar>::Zero(m.rows(), m.cols());
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = (acc * m).eval();
      acc.diagonal().array() += c_[i];
    }
    return acc;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial r = *this;
    const Scalar l = leading();
    for (auto& a : r.c_) a /= l;
    return r;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Scalar& s, Polynomial p) {
    for (auto& a : p.c_) a *= s;
    p.trim();
    return p;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Scalar> r = c_;
    if (r.size() < d.c_.size()) return {Polynomial{}, *this};
    std::vector<Scalar> q(r.size() - d.c_.size() + 1, Scalar(0));
    const Scalar lead = d.leading();
    for (std::size_t k = q.size(); k-- > 0;) {
      const Scalar f = r[k + d.c_.size() - 1] / lead;
      q[k] = f;
      if (f == Scalar(0)) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= f * d.c_[j];
    }
    r.resize(d.c_.size() - 1);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(Scalar(1)), b = *this;
    while (e > 0) {
      if (e & 1u) r = r * b;
      e >>= 1u;
      if (e > 0) b = b * b;
    }
    return r;
  }

  // Substitutes x -> x^k.
  Polynomial inflate(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Scalar> r((c_.size() - 1) * k + 1, Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return Polynomial(std::move(r));
  }

  std::string str(const char* var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

template <typename Scalar>
Polynomial<Scalar> poly_gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <typename Scalar>
Polynomial<Scalar> squarefree_part(const Polynomial<Scalar>& p) {
  if (p.degree() <= 0) return p.monic();
  return p.divmod(poly_gcd(p, p.derivative())).first.monic();
}

template <typename Scalar>
std::string Polynomial<Scalar>::str(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Scalar& a = c_[i];
    if (a == Scalar(0)) continue;
    std::string mag;
    Scalar m = a < Scalar(0) ? Scalar(-a) : a;
    const bool unit = m == Scalar(1);
    if (!unit || i == 0) {
      if constexpr (std::is_same_v<Scalar, Rational>)
        mag = m.is_integer() ? m.num().get_str() : m.num().get_str() + "/" + m.den().get_str();
      else
        mag = std::to_string(m);
    }
    std::string term = mag;
    if (i > 0) {
      if (!unit) term += "*";
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty())
      out = (a < Scalar(0) ? "-" : "") + term;
    else
      out += (a < Scalar(0) ? " - " : " + ") + term;
  }
  return out;
}

using PolynomialQ = Polynomial<Rational>;

// Monic characteristic polynomial det(x I - m): similarity reduction to upper
// Hessenberg form followed by the Hessenberg recurrence, O(n^3) field ops.
template <typename Scalar>
Polynomial<Scalar> char_poly(const Mat<Scalar>& m) {
  require_square(m, "char_poly");
  const Eigen::Index n = m.rows();
  Mat<Scalar> h = m;
  for (Eigen::Index k = 1; k + 1 < n; ++k) {
    Eigen::Index i = k;
    while (i < n && h(i, k - 1) == Scalar(0)) ++i;
    if (i == n) continue;
    if (i != k) {
      h.row(i).swap(h.row(k));
      h.col(i).swap(h.col(k));
    }
    const Scalar t = h(k, k - 1);
    for (Eigen::Index r = k + 1; r < n; ++r) {
      const Scalar u = h(r, k - 1) / t;
      if (u == Scalar(0)) continue;
      h.row(r) -= u * h.row(k);
      h.col(k) += u * h.col(r);
    }
  }
  std::vector<Polynomial<Scalar>> p(static_cast<std::size_t>(n) + 1);
  p[0] = Polynomial<Scalar>::constant(Scalar(1));
  const auto x = Polynomial<Scalar>::x();
  for (Eigen::Index k = 1; k <= n; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    Polynomial<Scalar> acc =
        (x - Polynomial<Scalar>::constant(h(k - 1, k - 1))) * p[kk - 1];
    Scalar t(1);
    for (Eigen::Index i = k - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      const Scalar c = h(i - 1, k - 1) * t;
      if (c != Scalar(0)) acc -= c * p[static_cast<std::size_t>(i) - 1];
    }
    p[kk] = std::move(acc);
  }
  return p.back();
}

}  // namespace degen::exactalg
