#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degen/error.hpp"
#include "degen/exactalg/rational.hpp"

namespace degen::strata {

using exactalg::Integer;
using exactalg::Rational;

// Aggregated data of D(k), the disjoint union of the codimension-k
// intersections of special fiber components. D(k) has dimension n + 1 - k.
struct StratumRecord {
  long k = 1;
  long chi_top = 0;
  std::optional<long> chi_struct;              // chi(O_{D(k)})
  std::optional<std::vector<long>> hodge_chis;  // chi(Omega^j), j = 0..n+1-k
  std::optional<Rational> chern_c1cd;           // int_{D(k)} c_1(Omega) c_{n-k}(Omega)
};

struct Component {
  std::string name;
  long multiplicity = 1;
};

// Isolated-singularity data of the (blown down) special fiber, used by the
// corollaries and lints that talk about nodes and Milnor numbers.
struct Singularities {
  bool isolated = false;
  bool rational = false;
  bool odp_only = false;
  std::optional<long> odp_count;
  std::optional<long> milnor;
};

struct SpecialFiberModel {
  long n = 1;
  std::vector<Component> components;
  std::map<long, StratumRecord> strata;  // keyed by k; absent means empty
  std::optional<Rational> b_integral;    // int_B c_n(Omega_X)
  std::optional<long> quadruple_count;   // Q, n = 3 only
  bool semistable = false;
  bool kulikov = false;
  std::optional<Singularities> singularities;
  // chi(O) of a desingularization of each component (dimension 3 and 4 formulas)
  std::optional<std::vector<long>> desing_chi_struct;

  const StratumRecord* stratum(long k) const;
  // chi(D(k)); 0 when the stratum is empty.
  long chi(long k) const;
  // int_{D(k)} c_1 c_{n-k}; 0 for an empty stratum, nullopt when the record
  // carries no Chern data.
  std::optional<Rational> chern(long k) const;
  // B integral, defaulting to 0 for Kulikov models.
  std::optional<Rational> b() const;
  // lcm of the component multiplicities.
  Integer multiplicity_lcm() const;
};

enum class FiberType { Unspecified, StrictCY, Abelian, Hyperkahler };

const char* to_string(FiberType t);
FiberType parse_fiber_type(const std::string& s);

struct GeneralFiberData {
  long n = 1;
  long chi_top = 0;
  std::optional<long> chi_struct;
  std::optional<std::vector<long>> hodge_chis;  // chi(Omega^j), j = 0..n
  std::optional<std::vector<long>> betti;       // b_0..b_{2n}
  FiberType type = FiberType::Unspecified;

  // chi(Omega^j), with j = 0 falling back to chi_struct.
  std::optional<long> hodge_chi(long j) const;
};

// Throw ValidationError with a field path relative to the model or fiber.
void validate(const SpecialFiberModel& model);
void validate(const GeneralFiberData& fiber);

// chi(X_0) = -sum_k (-1)^k chi(D(k)).
long chi_special_fiber(const SpecialFiberModel& model);
// chi(X_inf) = sum_k (-1)^{k+1} k chi(D(k)), semistable only.
long chi_generic_semistable(const SpecialFiberModel& model);
// c = (-1)^n (chi(X_inf) - chi(X_0)).
Rational vanishing_defect(const SpecialFiberModel& model, const GeneralFiberData& fiber);

// int_{D(k)} c_1 c_{n-k} for k = 1..n from the Kulikov recursion.
std::map<long, Rational> kulikov_chern_numbers(const SpecialFiberModel& model);
// Copy of the model with chern_c1cd filled on every stratum record k <= n.
SpecialFiberModel derive_chern_kulikov(SpecialFiberModel model);

// Symmetric table of quadruple intersection numbers [D_i D_j D_k D_l] on a
// 3-dimensional total space with m components.
class IntersectionTensor {
 public:
  explicit IntersectionTensor(long m);
  long size() const { return m_; }
  const Rational& at(long i, long j, long k, long l) const;
  // Sets every permutation of the index tuple.
  void set(long i, long j, long k, long l, const Rational& v);

 private:
  std::size_t index(long i, long j, long k, long l) const;
  long m_;
  std::vector<Rational> v_;
};

struct LiuXiaReport {
  Rational quadruple_count;      // Q
  Rational self_intersection;    // sum_{i<j} sum_{k not in {i,j}} [D_k^2 D_ij]
  bool self_intersection_ok = false;  // equals -4Q
  std::optional<Rational> canonical_square;  // sum_{i<j} c_1(K_{D_ij})^2, Kulikov only
  bool canonical_square_ok = true;           // equals 8Q
};

// Rejects (ValidationError at /intersections) tensors where
// sum_i [D_i D_j D_k D_l] != 0 for some j, k, l.
LiuXiaReport liu_xia_identity_check(const IntersectionTensor& t, bool kulikov);

}  // namespace degen::strata
