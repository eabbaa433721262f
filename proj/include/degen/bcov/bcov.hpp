#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degen/lmhs/lmhs.hpp"
#include "degen/strata/strata.hpp"

namespace degen::bcov {

using exactalg::Integer;
using exactalg::Rational;
using lmhs::LimitingMHS;
using monodromy::Branch;
using strata::GeneralFiberData;
using strata::SpecialFiberModel;

struct KappaBreakdown {
  Rational euler_term;        // (3n+1)/12 (chi_inf - chi_0)
  Rational strata_term;       // sum_k (-1)^k (k-1)(3k+6n+2)/24 chi(D(k))
  Rational b_term;            // -(-1)^n/12 int_B c_n
  Rational chern_term;        // -(-1)^n/12 sum_k int_{D(k)} c_1 c_{n-k}
  Rational alpha_top_term;    // -alpha chi_inf / 12
  Rational alpha_hodge_term;  // -sum (-1)^{p+q} p alpha^{p,q}
  Rational total;
};

struct BcovAsymptotics {
  Rational kappa;
  Rational rho;
  friend bool operator==(const BcovAsymptotics& a, const BcovAsymptotics& b) {
    return a.kappa == b.kappa && a.rho == b.rho;
  }
};

// mu_p = (-1)^{p-1} chi(Omega^{<=p-1}_{X_inf}) - sum_{k=1}^p (-1)^{p-k} chi(Omega^{<=p-k}_{D(k)}).
long mu_p(const SpecialFiberModel& model, const GeneralFiberData& fiber, long p);
Rational mu_bcov(const SpecialFiberModel& model, const GeneralFiberData& fiber);

// Degrees absent from `mhs` count as pure with trivial monodromy; degree n is
// required. `top_branch` is used for alpha on Gr_F^n H^n, `hodge_branch` for
// the alpha^{p,q}. Missing Chern data is derived when the model is
// semistable and Kulikov.
KappaBreakdown kappa_general(const SpecialFiberModel& model, const GeneralFiberData& fiber,
                             const LimitingMHS& mhs, Branch top_branch, Branch hodge_branch);
Rational rho(const GeneralFiberData& fiber, const LimitingMHS& mhs);

Rational kappa_kulikov(const SpecialFiberModel& model);
BcovAsymptotics kappa_rho_odp(long n, long nodes);

// Chern numbers entering the blow-up model, per node.
struct OdpChernNumbers {
  Rational quadric_h;       // int_W c_1(O(1)) c_{n-2}(Omega_W)
  Rational quadric_c1;      // int_W c_1(Omega_W) c_{n-2}(Omega_W)
  Rational strict;          // int_Z c_1 c_{n-1}(Omega_Z), per node
  Rational exceptional;     // int_E c_1 c_{n-1}(Omega_E), E = P^n
  Rational exceptional_cn;  // int_E c_n(Omega_X|_E)
};

// int_W c_1(O(1)) c_{n-2}(Omega_W) for a smooth degree d hypersurface W in P^n.
Rational hypersurface_h_integral(long n, long d, const Rational& chi_w);
long quadric_euler(long n);
OdpChernNumbers odp_chern_numbers(long n);

struct OdpBlowup {
  SpecialFiberModel model;
  LimitingMHS mhs;
  OdpChernNumbers chern;
};

// Blow-up of s nodes: Z + 2(E_1 + ... + E_s), E_i = P^n, W_i = Z cap E_i smooth
// quadrics, B = nE.
OdpBlowup odp_blowup_model(long n, long nodes, const GeneralFiberData& fiber);

// Strict Calabi-Yau 3-folds, special fiber not necessarily normal crossings.
// `desing_chi_struct` lists chi(O) of desingularized components.
Rational kappa_dim3(const SpecialFiberModel& model, const GeneralFiberData& fiber, const LimitingMHS& mhs,
                    const std::vector<long>& desing_chi_struct);
Rational kappa_dim3_unipotent(const SpecialFiberModel& model, const GeneralFiberData& fiber,
                              const LimitingMHS& mhs, const std::vector<long>& desing_chi_struct);
Rational kappa_dim3_rational(const SpecialFiberModel& model, const GeneralFiberData& fiber,
                             const LimitingMHS& mhs);
Rational kappa_dim3_isolated(long milnor, const LimitingMHS& mhs);
Rational kappa_dim4(const SpecialFiberModel& model, const GeneralFiberData& fiber, const LimitingMHS& mhs,
                    const std::vector<long>& desing_chi_struct);
Rational kappa_dim4_rational(const SpecialFiberModel& model, const GeneralFiberData& fiber,
                             const LimitingMHS& mhs);
Rational kappa_dim4_isolated(long milnor, const LimitingMHS& mhs);

// Throws InconsistencyError unless chi_inf - chi_0 = (-1)^n mu when the model
// declares isolated singularities with a Milnor number. Returns whether a
// check was made.
bool check_milnor(const SpecialFiberModel& model, const GeneralFiberData& fiber);

// (chi(D(2)) - 6Q)/12, n = 3 semistable Kulikov with chi(D(3)) = 4Q.
Rational kappa_liuxia_special(const SpecialFiberModel& model);
struct LiuXiaIntro {
  Rational value;  // (chi(D(2)) - 4Q)/12
  std::string note;
};
LiuXiaIntro kappa_liuxia_intro(const SpecialFiberModel& model);

struct SerreDefect {
  Rational coefficient;     // (-1)^{n+1-p} c
  bool middle = false;      // n = 2m, p = m: coefficient of the 2 lambda relation
};
SerreDefect serre_defect(const SpecialFiberModel& model, const GeneralFiberData& fiber, long p);

struct FamilyContext {
  bool compact_base = false;
  bool primitive = false;
  bool non_isotrivial = false;
  std::optional<long> total_nodes;  // over all singular fibers
};

enum class LintStatus { Ok, Violation, Info, Unavailable };
const char* to_string(LintStatus s);

struct Lint {
  std::string name;
  LintStatus status = LintStatus::Info;
  std::string message;
  std::optional<Integer> value;
};

struct SpecializationReport {
  std::vector<std::pair<std::string, Rational>> formulas;
  // formula name and the reason it could not be evaluated
  std::vector<std::pair<std::string, std::string>> unavailable;
  // formulas whose own hypotheses contradict the inputs, with the message
  std::vector<std::pair<std::string, std::string>> inconsistencies;
  std::vector<Lint> lints;
  bool has_violation() const;
};

// Smallest even integer >= x.
Integer ceil_even(const Rational& x);
// Minimum total node count from the Fang-Lu type bounds, if one applies.
std::optional<Integer> min_total_nodes(long n, long chi);

SpecializationReport lints(const SpecialFiberModel& model, const GeneralFiberData& fiber,
                           const std::optional<LimitingMHS>& mhs, const FamilyContext& ctx);

// Every closed form that applies to the inputs, plus lints. InconsistencyError
// from a formula or the Milnor relation is recorded, not thrown. kappa_general
// uses the upper branch for alpha and the lower one for alpha^{p,q}.
SpecializationReport analyze(const SpecialFiberModel& model, const GeneralFiberData& fiber,
                             const std::optional<LimitingMHS>& mhs, const FamilyContext& ctx);

}  // namespace degen::bcov
