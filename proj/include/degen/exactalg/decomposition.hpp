#pragma once

#include <map>
#include <vector>

#include "degen/exactalg/cyclotomic.hpp"
#include "degen/exactalg/matrix.hpp"
#include "degen/exactalg/polynomial.hpp"
#include "degen/exactalg/rotation.hpp"

namespace degen::exactalg {

// Minimal l >= 1 with m^l unipotent. Throws InvalidMonodromy when m is
// singular or its characteristic polynomial has a non-cyclotomic factor.
unsigned long quasi_unipotence_order(const RationalMatrix& m);

struct ChevalleyDecomposition {
  RationalMatrix semisimple;  // T_s
  RationalMatrix unipotent;   // T_u
};

// m = T_s T_u = T_u T_s with T_s semisimple and T_u unipotent, both
// polynomials in m. Newton iteration on the squarefree part of char_poly(m).
ChevalleyDecomposition chevalley_decompose(const RationalMatrix& m);

bool is_unipotent(const RationalMatrix& u);
bool is_nilpotent(const RationalMatrix& l);

// log(u) = sum_{m>=1} (-1)^{m+1} (u - I)^m / m; throws PreconditionError when
// u is not unipotent.
RationalMatrix nilpotent_log(const RationalMatrix& u);
// exp(l) for nilpotent l; throws PreconditionError otherwise.
RationalMatrix nilpotent_exp(const RationalMatrix& l);

struct WeightFiltration {
  long center = 0;
  // Nonzero graded dimensions dim Gr^W_w keyed by weight w.
  std::map<long, long> graded;
  // Column bases of W_w for every w between the lowest and the highest weight.
  std::map<long, RationalMatrix> subspaces;

  long dim(long w) const {
    auto it = graded.find(w);
    return it == graded.end() ? 0 : it->second;
  }
  // W_w as a column basis; zero columns below the range and the whole space above.
  RationalMatrix subspace(long w) const;
  Eigen::Index ambient_dim = 0;
};

// Monodromy weight filtration of nilpotent l centered at k.
WeightFiltration weight_filtration(const RationalMatrix& l, long center);

// Rotation numbers a/d of the eigenvalues of a finite-order matrix, read off
// the cyclotomic factorization of its characteristic polynomial, sorted.
RotationMultiset eigen_rotations(const RationalMatrix& ts);

}  // namespace degen::exactalg
