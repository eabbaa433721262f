#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degen/exactalg/rotation.hpp"
#include "degen/monodromy/monodromy.hpp"

namespace degen::lmhs {

using exactalg::Rational;
using exactalg::RotationMultiset;
using exactalg::RotationNumber;
using monodromy::Branch;

// dim Gr_F^p Gr^W_w H^k of the limiting mixed Hodge structure, sparse.
class HodgeDeligneTable {
 public:
  using Key = std::pair<long, long>;  // (p, w)

  HodgeDeligneTable(long k, long n, std::map<Key, long> dims,
                    std::optional<long> betti = std::nullopt);
  // Range checks only; Hodge and nilpotent symmetry are left to
  // beta_symmetry_check. For diagnosing tables that fail validation.
  static HodgeDeligneTable unchecked(long k, long n, std::map<Key, long> dims);

  long degree() const { return k_; }
  long fiber_dim() const { return n_; }
  long dim(long p, long w) const;
  const std::map<Key, long>& dims() const { return d_; }
  long betti() const;
  // sum_w d[p][w]
  long level_dim(long p) const;

 private:
  HodgeDeligneTable(long k, long n) : k_(k), n_(n) {}
  void set_dims(std::map<Key, long> dims);

  long k_, n_;
  std::map<Key, long> d_;
};

// T_s rotations (lower convention) on Gr_F^p H^k, per level p.
using GrFRotations = std::map<long, RotationMultiset>;

struct DegreeData {
  HodgeDeligneTable table;
  GrFRotations rotations;
};

class LimitingMHS {
 public:
  // Levels missing from a degree's rotations are filled with zeros (trivial
  // T_s); levels present must match the table's level dimension.
  LimitingMHS(long n, std::map<long, DegreeData> degrees);

  long fiber_dim() const { return n_; }
  bool has_degree(long k) const { return degrees_.count(k) != 0; }
  const DegreeData& degree(long k) const;
  const std::map<long, DegreeData>& degrees() const { return degrees_; }
  bool unipotent() const;
  // Least common denominator of every rotation.
  exactalg::Integer rotation_denominator() const;

 private:
  long n_;
  std::map<long, DegreeData> degrees_;
};

struct AsymptoticExpansion {
  Rational log_coeff;     // coefficient of log|t|^2
  Rational loglog_coeff;  // coefficient of log log |t|^{-1}
  friend bool operator==(const AsymptoticExpansion& a, const AsymptoticExpansion& b) {
    return a.log_coeff == b.log_coeff && a.loglog_coeff == b.loglog_coeff;
  }
};

// Lower: sum of stored values a at level p of degree p+q. Upper: sum of the
// upper views u = (1 - a) mod 1.
Rational alpha(const LimitingMHS& mhs, long p, long q, Branch branch);
// sum_r r * d[p][k + r], k = p + q.
Rational beta(const LimitingMHS& mhs, long p, long q);

struct BetaSymmetryReport {
  bool antisymmetry = true;        // beta^{p,q} = -beta^{q,p}
  bool lefschetz = true;           // beta^{p,q} = beta^{n-q,n-p}
  long lefschetz_pairs_checked = 0;
  std::vector<std::string> failures;
};

BetaSymmetryReport beta_symmetry_check(const LimitingMHS& mhs);

AsymptoticExpansion hodge_expansion(const LimitingMHS& mhs, long p, long q);

// Hodge diamond h[p][q], 0 <= p, q <= n.
using HodgeDiamond = std::vector<std::vector<long>>;

LimitingMHS nodal_elliptic();
// Ordinary double points: n odd adds d[(n+1)/2][n+1] = d[(n-1)/2][n-1] = count
// to degree n with trivial T_s; n even puts T_s eigenvalue -1 (rotation 1/2)
// with multiplicity count at level n/2 of the pure degree n. `hodge` is the
// Hodge diamond of the smooth fiber; without it only degrees 0, n, 2n appear
// and degree n holds just the vanishing part.
LimitingMHS odp(long n, long count, const std::optional<HodgeDiamond>& hodge = std::nullopt);
// Pure, trivial monodromy, every degree 0..2n.
LimitingMHS pure(long n, const HodgeDiamond& hodge);

}  // namespace degen::lmhs
