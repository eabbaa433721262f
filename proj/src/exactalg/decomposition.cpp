#include "degen/exactalg/decomposition.hpp"

#include <numeric>

namespace degen::exactalg {

unsigned long quasi_unipotence_order(const RationalMatrix& m) {
  require_square(m, "quasi_unipotence_order");
  const PolynomialQ cp = char_poly(m);
  if (cp.coeff(0).is_zero()) throw InvalidMonodromy("monodromy matrix is singular");
  const CyclotomicFactorization f = cyclotomic_factor(cp);
  if (!f.complete())
    throw InvalidMonodromy("characteristic polynomial has a non-cyclotomic factor: " +
                               f.remainder.str(),
                           f.remainder.str());
  unsigned long l = 1;
  for (const auto& [d, mult] : f.factors) l = std::lcm(l, d);
  return l;
}

bool is_nilpotent(const RationalMatrix& l) {
  require_square(l, "is_nilpotent");
  return is_zero<Rational>(power<Rational>(l, l.rows()));
}

bool is_unipotent(const RationalMatrix& u) {
  require_square(u, "is_unipotent");
  return is_nilpotent(u - identity<Rational>(u.rows()));
}

ChevalleyDecomposition chevalley_decompose(const RationalMatrix& m) {
  quasi_unipotence_order(m);
  const PolynomialQ p = squarefree_part(char_poly(m));
  const PolynomialQ dp = p.derivative();
  RationalMatrix s = m;
  // The nilpotent defect p(s) at least doubles its order each step.
  for (Eigen::Index step = 0; step <= m.rows() + 1; ++step) {
    const RationalMatrix ps = p(s);
    if (is_zero<Rational>(ps)) {
      RationalMatrix u = inverse<Rational>(s) * m;
      return {std::move(s), std::move(u)};
    }
    s = (s - ps * inverse<Rational>(dp(s))).eval();
  }
  throw std::logic_error("chevalley_decompose: Newton iteration did not converge");
}

RationalMatrix nilpotent_log(const RationalMatrix& u) {
  require_square(u, "nilpotent_log");
  const Eigen::Index n = u.rows();
  const RationalMatrix x = u - identity<Rational>(n);
  if (!is_nilpotent(x)) throw PreconditionError("nilpotent_log: matrix is not unipotent");
  RationalMatrix acc = RationalMatrix::Zero(n, n);
  RationalMatrix term = x;
  for (long k = 1; k < n + 1 && !is_zero<Rational>(term); ++k) {
    const Rational c = Rational((k % 2) ? 1 : -1, k);
    acc += c * term;
    term = (term * x).eval();
  }
  return acc;
}

RationalMatrix nilpotent_exp(const RationalMatrix& l) {
  require_square(l, "nilpotent_exp");
  if (!is_nilpotent(l)) throw PreconditionError("nilpotent_exp: matrix is not nilpotent");
  const Eigen::Index n = l.rows();
  RationalMatrix acc = identity<Rational>(n);
  RationalMatrix term = identity<Rational>(n);
  for (long k = 1; k <= n; ++k) {
    term = (term * l).eval() / Rational(k);
    if (is_zero<Rational>(term)) break;
    acc += term;
  }
  return acc;
}

RationalMatrix WeightFiltration::subspace(long w) const {
  if (subspaces.empty()) return RationalMatrix(ambient_dim, 0);
  if (w < subspaces.begin()->first) return RationalMatrix(ambient_dim, 0);
  if (w > subspaces.rbegin()->first) return identity<Rational>(ambient_dim);
  return subspaces.at(w);
}

WeightFiltration weight_filtration(const RationalMatrix& l, long center) {
  require_square(l, "weight_filtration");
  if (!is_nilpotent(l)) throw PreconditionError("weight_filtration: operator is not nilpotent");
  const Eigen::Index n = l.rows();

  // ranks of powers; top = largest j with l^j != 0
  std::vector<RationalMatrix> pw{identity<Rational>(n)};
  std::vector<Eigen::Index> rk{n};
  while (rk.back() > 0) {
    pw.push_back(pw.back() * l);
    rk.push_back(rank<Rational>(pw.back()));
  }
  const long top = static_cast<long>(pw.size()) - 2;

  WeightFiltration wf;
  wf.center = center;
  wf.ambient_dim = n;
  // b_s = number of Jordan blocks of size >= s = rank l^{s-1} - rank l^s.
  // A block of size s contributes weights center - (s-1), ..., center + (s-1) in steps of 2.
  for (long s = 1; s <= top + 1; ++s) {
    const long ge = rk[static_cast<std::size_t>(s - 1)] - rk[static_cast<std::size_t>(s)];
    const long ge_next = static_cast<std::size_t>(s + 1) < rk.size()
                             ? rk[static_cast<std::size_t>(s)] - rk[static_cast<std::size_t>(s + 1)]
                             : 0;
    const long exact = ge - ge_next;
    if (exact == 0) continue;
    for (long r = -(s - 1); r <= s - 1; r += 2) wf.graded[center + r] += exact;
  }

  // W_{center+m} = sum_{j >= max(0,-m)} ker(l^{m+j+1}) cap im(l^j)
  auto pw_at = [&](long e) -> RationalMatrix {
    if (e < static_cast<long>(pw.size())) return pw[static_cast<std::size_t>(e)];
    return RationalMatrix::Zero(n, n);
  };
  for (long m = -top; m <= top; ++m) {
    RationalMatrix acc(n, 0);
    for (long j = std::max(0L, -m); j <= top; ++j) {
      const RationalMatrix ker = kernel<Rational>(pw_at(m + j + 1));
      const RationalMatrix im = column_space<Rational>(pw_at(j));
      acc = subspace_sum<Rational>(acc, subspace_intersection<Rational>(ker, im));
    }
    wf.subspaces[center + m] = acc;
  }

  // consistency between the two computations
  long prev_dim = 0;
  for (const auto& [w, basis] : wf.subspaces) {
    if (basis.cols() - prev_dim != wf.dim(w))
      throw std::logic_error("weight_filtration: subspace dimensions disagree with Jordan data");
    prev_dim = basis.cols();
  }
  if (prev_dim != n && !wf.subspaces.empty())
    throw std::logic_error("weight_filtration: top weight space is not everything");
  return wf;
}

RotationMultiset eigen_rotations(const RationalMatrix& ts) {
  require_square(ts, "eigen_rotations");
  const CyclotomicFactorization f = cyclotomic_factor(char_poly(ts));
  if (!f.complete())
    throw InvalidMonodromy("eigen_rotations: matrix has infinite order (factor " +
                               f.remainder.str() + ")",
                           f.remainder.str());
  RotationMultiset out;
  for (const auto& [d, mult] : f.factors)
    for (unsigned long a = 0; a < d; ++a)
      if (std::gcd(a, d) == 1)
        for (unsigned i = 0; i < mult; ++i)
          out.emplace_back(Rational(static_cast<long>(a), static_cast<long>(d)));
  return sorted(std::move(out));
}

}  // namespace degen::exactalg
