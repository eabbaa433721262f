#pragma once

#include <vector>

#include "degen/exactalg/decomposition.hpp"

namespace degen::monodromy {

using exactalg::PolynomialQ;
using exactalg::Rational;
using exactalg::RationalMatrix;
using exactalg::RotationMultiset;
using exactalg::RotationNumber;

enum class Branch { Upper, Lower };

const char* to_string(Branch b);
Branch parse_branch(const std::string& s);

// Residue eigenvalue rotations of the Deligne extension for a branch of log.
// For a rational T both branches give the same multiset (conjugate pairs);
// sorted.
RotationMultiset residue_rotations(const RationalMatrix& t, Branch branch);

// Basis e~_j of V_log built from T_s eigenvectors: e~_j has T_s eigenvalue
// exp(-2 pi i k_j / ell).
class TwistedFrame {
 public:
  TwistedFrame(long ell, std::vector<long> labels, RationalMatrix log_unipotent);
  TwistedFrame(long ell, std::vector<long> labels);

  long ell() const { return ell_; }
  std::size_t rank() const { return labels_.size(); }
  const std::vector<long>& labels() const { return labels_; }
  long label(std::size_t j) const { return labels_[j]; }
  RotationNumber rotation(std::size_t j) const { return RotationNumber(Rational(labels_[j], ell_)); }
  const RationalMatrix& log_unipotent() const { return log_u_; }

 private:
  long ell_;
  std::vector<long> labels_;
  RationalMatrix log_u_;
};

// sigma = sum_j f_j(q) e~_j with each f_j truncated at degree D.
class TwistedFrameSection {
 public:
  TwistedFrameSection(std::vector<PolynomialQ> coeffs, long truncation);
  // Constant coefficients.
  static TwistedFrameSection constant(const std::vector<Rational>& values, long truncation);

  std::size_t rank() const { return f_.size(); }
  long truncation() const { return d_; }
  const std::vector<PolynomialQ>& coefficients() const { return f_; }
  const PolynomialQ& coefficient(std::size_t j) const { return f_[j]; }
  exactalg::RationalVector value_at_zero() const;

  TwistedFrameSection operator-(const TwistedFrameSection& o) const;
  TwistedFrameSection scaled(const Rational& c) const;
  // Product with a power series in q, truncated at D.
  TwistedFrameSection times(const PolynomialQ& u) const;

  friend bool operator==(const TwistedFrameSection& a, const TwistedFrameSection& b) {
    return a.d_ == b.d_ && a.f_ == b.f_;
  }

 private:
  std::vector<PolynomialQ> f_;
  long d_;
};

struct ExponentReport {
  RotationMultiset exponents;                // sorted
  std::vector<RotationNumber> per_section;   // exponent of basis[i]
  std::vector<TwistedFrameSection> basis;    // theta_1 ... theta_h
};

// kappa(sigma) = min{k_j : f_j(0) != 0} / ell.
RotationNumber elementary_exponent(const TwistedFrameSection& sigma, const TwistedFrame& frame);

// The value ^rho sigma(0) of t^{-k} rho^* sigma at 0, k = ell * kappa(sigma):
// the coordinates f_j(0) with k_j = k, zero elsewhere.
exactalg::RationalVector leading_eigenvector(const TwistedFrameSection& sigma,
                                             const TwistedFrame& frame);

// Adapted basis theta_1..theta_h of the span of sigma_1..sigma_h: same flag,
// leading eigenvectors ^rho theta_j(0) independent. Corrections
// sigma' = sigma - sum_{j in J} mu_j theta_j, J ascending.
ExponentReport adapt_basis(const std::vector<TwistedFrameSection>& sections,
                           const TwistedFrame& frame);

// Compares the exponent multiset with T_s rotations on the graded piece.
bool exponents_vs_eigenvalues_check(const ExponentReport& report,
                                    const RotationMultiset& grF_rotations);

// Upper-branch exponents for T_s rotations (stored lower) on F^n.
RotationMultiset upper_extension_exponents(const RationalMatrix& t,
                                           const RotationMultiset& grFn_rotations);

struct FrameFromMonodromy {
  TwistedFrame frame;
  RationalMatrix basis;  // columns: e~_j(0) in the original coordinates
};

// Only when T_s has eigenvalues in {1, -1}; NotApplicable otherwise.
FrameFromMonodromy frame_from_monodromy(const RationalMatrix& t);

}  // namespace degen::monodromy
