#include "degen/monodromy/monodromy.hpp"

#include <algorithm>

namespace degen::monodromy {

using exactalg::RationalVector;

const char* to_string(Branch b) { return b == Branch::Upper ? "upper" : "lower"; }

Branch parse_branch(const std::string& s) {
  if (s == "upper") return Branch::Upper;
  if (s == "lower") return Branch::Lower;
  throw PreconditionError("unknown branch '" + s + "' (expected upper or lower)");
}

RotationMultiset residue_rotations(const RationalMatrix& t, Branch branch) {
  const auto d = exactalg::chevalley_decompose(t);
  RotationMultiset r = exactalg::eigen_rotations(d.semisimple);
  if (branch == Branch::Upper)
    for (auto& x : r) x = x.upper();
  return exactalg::sorted(std::move(r));
}

TwistedFrame::TwistedFrame(long ell, std::vector<long> labels, RationalMatrix log_unipotent)
    : ell_(ell), labels_(std::move(labels)), log_u_(std::move(log_unipotent)) {
  if (ell_ < 1) throw PreconditionError("twisted frame: ell must be >= 1");
  if (labels_.empty()) throw PreconditionError("twisted frame: empty frame");
  for (long k : labels_)
    if (k < 0 || k >= ell_)
      throw PreconditionError("twisted frame: label " + std::to_string(k) + " outside [0, ell)");
  const auto r = static_cast<Eigen::Index>(labels_.size());
  if (log_u_.rows() != r || log_u_.cols() != r)
    throw DimensionError("twisted frame: nilpotent part has the wrong size");
  if (!exactalg::is_nilpotent(log_u_))
    throw PreconditionError("twisted frame: nilpotent part is not nilpotent");
}

TwistedFrame::TwistedFrame(long ell, std::vector<long> labels)
    : TwistedFrame(ell, labels,
                   RationalMatrix::Zero(static_cast<Eigen::Index>(labels.size()),
                                        static_cast<Eigen::Index>(labels.size()))) {}

TwistedFrameSection::TwistedFrameSection(std::vector<PolynomialQ> coeffs, long truncation)
    : f_(std::move(coeffs)), d_(truncation) {
  if (d_ < 0) throw PreconditionError("section: negative truncation degree");
  for (const auto& p : f_)
    if (p.degree() > d_)
      throw PreconditionError("section: coefficient of degree " + std::to_string(p.degree()) +
                              " exceeds truncation " + std::to_string(d_));
}

TwistedFrameSection TwistedFrameSection::constant(const std::vector<Rational>& values,
                                                  long truncation) {
  std::vector<PolynomialQ> f;
  for (const auto& v : values) f.push_back(PolynomialQ::constant(v));
  return {std::move(f), truncation};
}

RationalVector TwistedFrameSection::value_at_zero() const {
  RationalVector v(static_cast<Eigen::Index>(f_.size()));
  for (std::size_t j = 0; j < f_.size(); ++j) v(static_cast<Eigen::Index>(j)) = f_[j].coeff(0);
  return v;
}

TwistedFrameSection TwistedFrameSection::operator-(const TwistedFrameSection& o) const {
  if (o.rank() != rank()) throw DimensionError("section: rank mismatch");
  std::vector<PolynomialQ> f = f_;
  for (std::size_t j = 0; j < f.size(); ++j) f[j] -= o.f_[j];
  return {std::move(f), std::min(d_, o.d_)};
}

TwistedFrameSection TwistedFrameSection::scaled(const Rational& c) const {
  std::vector<PolynomialQ> f;
  for (const auto& p : f_) f.push_back(c * p);
  return {std::move(f), d_};
}

TwistedFrameSection TwistedFrameSection::times(const PolynomialQ& u) const {
  std::vector<PolynomialQ> f;
  for (const auto& p : f_) {
    const PolynomialQ prod = p * u;
    std::vector<Rational> c;
    for (long i = 0; i <= std::min(prod.degree(), d_); ++i)
      c.push_back(prod.coeff(static_cast<std::size_t>(i)));
    f.emplace_back(std::move(c));
  }
  return {std::move(f), d_};
}

namespace {

void check_section(const TwistedFrameSection& s, const TwistedFrame& frame) {
  if (s.rank() != frame.rank())
    throw DimensionError("section rank " + std::to_string(s.rank()) + " does not match frame rank " +
                         std::to_string(frame.rank()));
  if (s.truncation() < frame.ell())
    throw InsufficientPrecision("section truncated at degree " + std::to_string(s.truncation()) +
                                " < ell = " + std::to_string(frame.ell()) +
                                "; exponents below 1 cannot be certified");
}

long leading_label(const TwistedFrameSection& s, const TwistedFrame& frame) {
  long best = -1;
  for (std::size_t j = 0; j < s.rank(); ++j)
    if (!s.coefficient(j).coeff(0).is_zero() && (best < 0 || frame.label(j) < best))
      best = frame.label(j);
  return best;
}

}  // namespace

RotationNumber elementary_exponent(const TwistedFrameSection& sigma, const TwistedFrame& frame) {
  check_section(sigma, frame);
  const long k = leading_label(sigma, frame);
  if (k < 0) throw PreconditionError("elementary_exponent: section vanishes at 0");
  return RotationNumber(Rational(k, frame.ell()));
}

RationalVector leading_eigenvector(const TwistedFrameSection& sigma, const TwistedFrame& frame) {
  check_section(sigma, frame);
  const long k = leading_label(sigma, frame);
  if (k < 0) throw PreconditionError("leading_eigenvector: section vanishes at 0");
  RationalVector v = RationalVector::Zero(static_cast<Eigen::Index>(sigma.rank()));
  for (std::size_t j = 0; j < sigma.rank(); ++j)
    if (frame.label(j) == k) v(static_cast<Eigen::Index>(j)) = sigma.coefficient(j).coeff(0);
  return v;
}

ExponentReport adapt_basis(const std::vector<TwistedFrameSection>& sections,
                           const TwistedFrame& frame) {
  if (sections.empty()) return {};
  const auto r = static_cast<Eigen::Index>(frame.rank());
  RationalMatrix initial(r, static_cast<Eigen::Index>(sections.size()));
  for (std::size_t i = 0; i < sections.size(); ++i) {
    check_section(sections[i], frame);
    initial.col(static_cast<Eigen::Index>(i)) = sections[i].value_at_zero();
  }
  if (exactalg::rank<Rational>(initial) != initial.cols())
    throw PreconditionError("adapt_basis: initial values are linearly dependent");

  ExponentReport out;
  std::vector<long> labels;            // ell * exponent of each theta
  std::vector<RationalVector> leads;   // ^rho theta_j(0)
  for (const auto& sigma : sections) {
    TwistedFrameSection s = sigma;
    long k = leading_label(s, frame);
    while (true) {
      std::vector<std::size_t> J;
      for (std::size_t j = 0; j < labels.size(); ++j)
        if (labels[j] == k) J.push_back(j);
      const RationalVector w = leading_eigenvector(s, frame);
      RationalMatrix a(r, static_cast<Eigen::Index>(J.size()));
      for (std::size_t c = 0; c < J.size(); ++c) a.col(static_cast<Eigen::Index>(c)) = leads[J[c]];
      RationalVector mu;
      if (J.empty() || !exactalg::solve_in_span<Rational>(a, w, mu)) break;
      for (std::size_t c = 0; c < J.size(); ++c) {
        const Rational& m = mu(static_cast<Eigen::Index>(c));
        if (!m.is_zero()) s = s - out.basis[J[c]].scaled(m);
      }
      const long next = leading_label(s, frame);
      if (next < 0)
        throw std::logic_error("adapt_basis: correction killed the initial value");
      if (next <= k)
        throw std::logic_error("adapt_basis: exponent did not increase after correction");
      k = next;
    }
    labels.push_back(k);
    leads.push_back(leading_eigenvector(s, frame));
    out.per_section.emplace_back(Rational(k, frame.ell()));
    out.basis.push_back(std::move(s));
  }
  out.exponents = exactalg::sorted(out.per_section);
  return out;
}

bool exponents_vs_eigenvalues_check(const ExponentReport& report,
                                    const RotationMultiset& grF_rotations) {
  if (report.exponents.size() != grF_rotations.size())
    throw PreconditionError("exponents_vs_eigenvalues_check: cardinality mismatch (" +
                            std::to_string(report.exponents.size()) + " vs " +
                            std::to_string(grF_rotations.size()) + ")");
  return exactalg::same_multiset(report.exponents, grF_rotations);
}

RotationMultiset upper_extension_exponents(const RationalMatrix& t,
                                           const RotationMultiset& grFn_rotations) {
  const unsigned long ell = exactalg::quasi_unipotence_order(t);
  RotationMultiset out;
  for (const auto& a : grFn_rotations) {
    const RotationNumber u = a.upper();
    if (exactalg::Integer(static_cast<long>(ell)) % u.value().den() != 0)
      throw PreconditionError("rotation " + a.value().str() +
                              " is not an eigenvalue rotation of T_s (order " +
                              std::to_string(ell) + ")");
    out.push_back(u);
  }
  return exactalg::sorted(std::move(out));
}

FrameFromMonodromy frame_from_monodromy(const RationalMatrix& t) {
  const auto d = exactalg::chevalley_decompose(t);
  const unsigned long ell = exactalg::quasi_unipotence_order(t);
  if (ell > 2)
    throw NotApplicable("frame_from_monodromy: T_s has eigenvalues other than +1/-1 (order " +
                        std::to_string(ell) + "); supply the frame directly");
  const auto n = t.rows();
  const RationalMatrix id = exactalg::identity<Rational>(n);
  const RationalMatrix plus = exactalg::kernel<Rational>(RationalMatrix(d.semisimple - id));
  const RationalMatrix minus = exactalg::kernel<Rational>(RationalMatrix(d.semisimple + id));
  const RationalMatrix p = exactalg::hstack<Rational>(plus, minus);
  std::vector<long> labels(static_cast<std::size_t>(plus.cols()), 0);
  labels.resize(static_cast<std::size_t>(n), 1);
  const RationalMatrix l = exactalg::inverse<Rational>(p) * exactalg::nilpotent_log(d.unipotent) * p;
  return {TwistedFrame(static_cast<long>(ell), std::move(labels), l), p};
}

}  // namespace degen::monodromy
