#include "degen/strata/strata.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace degen::strata {

namespace {

long sgn(long e) { return e % 2 == 0 ? 1 : -1; }

long alt_sum(const std::vector<long>& v) {
  long s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) s += sgn(static_cast<long>(j)) * v[j];
  return s;
}

}  // namespace

const StratumRecord* SpecialFiberModel::stratum(long k) const {
  auto it = strata.find(k);
  return it == strata.end() ? nullptr : &it->second;
}

long SpecialFiberModel::chi(long k) const {
  const auto* s = stratum(k);
  return s ? s->chi_top : 0;
}

std::optional<Rational> SpecialFiberModel::chern(long k) const {
  const auto* s = stratum(k);
  if (!s) return Rational(0);
  return s->chern_c1cd;
}

std::optional<Rational> SpecialFiberModel::b() const {
  if (b_integral) return b_integral;
  if (kulikov) return Rational(0);
  return std::nullopt;
}

Integer SpecialFiberModel::multiplicity_lcm() const {
  Integer l(1);
  for (const auto& c : components) l = exactalg::lcm(l, Integer(c.multiplicity));
  return l;
}

const char* to_string(FiberType t) {
  switch (t) {
    case FiberType::StrictCY: return "strict_cy";
    case FiberType::Abelian: return "abelian";
    case FiberType::Hyperkahler: return "hyperkahler";
    default: return "unspecified";
  }
}

FiberType parse_fiber_type(const std::string& s) {
  if (s == "strict_cy") return FiberType::StrictCY;
  if (s == "abelian") return FiberType::Abelian;
  if (s == "hyperkahler") return FiberType::Hyperkahler;
  if (s == "unspecified") return FiberType::Unspecified;
  throw ValidationError("/type", "unknown fiber type '" + s + "'");
}

std::optional<long> GeneralFiberData::hodge_chi(long j) const {
  if (hodge_chis && j >= 0 && j < static_cast<long>(hodge_chis->size()))
    return (*hodge_chis)[static_cast<std::size_t>(j)];
  if (j == 0) return chi_struct;
  return std::nullopt;
}

void validate(const SpecialFiberModel& m) {
  if (m.n < 1) throw ValidationError("/n", "relative dimension must be >= 1");
  if (m.components.empty()) throw ValidationError("/components", "at least one component required");
  std::set<std::string> names;
  for (std::size_t i = 0; i < m.components.size(); ++i) {
    const auto& c = m.components[i];
    const std::string at = "/components/" + std::to_string(i);
    if (c.multiplicity < 1) throw ValidationError(at + "/multiplicity", "multiplicity must be >= 1");
    if (m.semistable && c.multiplicity != 1)
      throw ValidationError(at + "/multiplicity", "semistable model requires multiplicity 1");
    if (!c.name.empty() && !names.insert(c.name).second)
      throw ValidationError(at + "/name", "duplicate component name '" + c.name + "'");
  }
  if (!m.stratum(1)) throw ValidationError("/strata/1", "stratum D(1) is required");
  for (const auto& [k, s] : m.strata) {
    const std::string at = "/strata/" + std::to_string(k);
    if (s.k != k) throw ValidationError(at + "/k", "codimension does not match its key");
    if (k < 1 || k > m.n + 1) throw ValidationError(at, "codimension outside 1..n+1");
    if (k == m.n + 1) {
      if (s.chi_top < 0) throw ValidationError(at + "/chi_top", "point stratum needs chi_top >= 0");
      if (s.chern_c1cd) throw ValidationError(at + "/chern_c1cd", "point stratum carries no Chern data");
    }
    if (s.hodge_chis) {
      const long want = m.n + 2 - k;
      if (static_cast<long>(s.hodge_chis->size()) != want)
        throw ValidationError(at + "/hodge_chis", "expected " + std::to_string(want) + " entries");
      if (alt_sum(*s.hodge_chis) != s.chi_top)
        throw ValidationError(at + "/hodge_chis", "alternating sum must equal chi_top");
      if (s.chi_struct && (*s.hodge_chis)[0] != *s.chi_struct)
        throw ValidationError(at + "/chi_struct", "disagrees with hodge_chis[0]");
    }
  }
  if (m.kulikov && m.b_integral && !m.b_integral->is_zero())
    throw ValidationError("/B_integral", "Kulikov model requires B_integral = 0");
  if (m.quadruple_count) {
    if (m.n != 3) throw ValidationError("/quadruple_count", "quadruple count applies to n = 3 only");
    if (*m.quadruple_count < 0) throw ValidationError("/quadruple_count", "must be >= 0");
    if (m.stratum(4) && m.chi(4) != *m.quadruple_count)
      throw ValidationError("/quadruple_count", "must equal chi(D(4))");
  }
  if (m.singularities) {
    const auto& s = *m.singularities;
    if (s.odp_count && *s.odp_count < 0)
      throw ValidationError("/singularities/odp_count", "must be >= 0");
    if (s.milnor && *s.milnor < 0) throw ValidationError("/singularities/milnor", "must be >= 0");
    if (s.odp_only && !s.odp_count)
      throw ValidationError("/singularities/odp_count", "odp_only requires odp_count");
  }
}

void validate(const GeneralFiberData& f) {
  if (f.n < 1) throw ValidationError("/n", "dimension must be >= 1");
  if (f.hodge_chis) {
    if (static_cast<long>(f.hodge_chis->size()) != f.n + 1)
      throw ValidationError("/hodge_chis", "expected n+1 entries");
    if (alt_sum(*f.hodge_chis) != f.chi_top)
      throw ValidationError("/hodge_chis", "alternating sum must equal chi_top");
    if (f.chi_struct && (*f.hodge_chis)[0] != *f.chi_struct)
      throw ValidationError("/chi_struct", "disagrees with hodge_chis[0]");
  }
  if (f.betti) {
    const auto& b = *f.betti;
    if (static_cast<long>(b.size()) != 2 * f.n + 1) throw ValidationError("/betti", "expected 2n+1 entries");
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (b[k] < 0) throw ValidationError("/betti/" + std::to_string(k), "negative Betti number");
      if (b[k] != b[b.size() - 1 - k])
        throw ValidationError("/betti/" + std::to_string(k), "Poincare duality b_k = b_{2n-k} violated");
    }
    if (alt_sum(b) != f.chi_top) throw ValidationError("/betti", "alternating sum must equal chi_top");
  }
  const auto chi0 = f.hodge_chi(0);
  switch (f.type) {
    case FiberType::StrictCY:
      if (chi0 && *chi0 != 1 + sgn(f.n))
        throw ValidationError("/chi_struct", "strict Calabi-Yau requires chi(O) = 1 + (-1)^n");
      break;
    case FiberType::Abelian:
      if (f.chi_top != 0) throw ValidationError("/chi_top", "abelian variety has chi_top = 0");
      if (chi0 && *chi0 != 0) throw ValidationError("/chi_struct", "abelian variety has chi(O) = 0");
      break;
    case FiberType::Hyperkahler:
      if (f.n % 2) throw ValidationError("/n", "hyperkahler fiber needs even dimension");
      if (chi0 && *chi0 != f.n / 2 + 1)
        throw ValidationError("/chi_struct", "hyperkahler requires chi(O) = n/2 + 1");
      break;
    case FiberType::Unspecified: break;
  }
}

long chi_special_fiber(const SpecialFiberModel& m) {
  if (!m.stratum(1)) throw MissingData("chi_special_fiber: stratum D(1) missing");
  long s = 0;
  for (long k = 1; k <= m.n + 1; ++k) s += sgn(k) * m.chi(k);
  return -s;
}

long chi_generic_semistable(const SpecialFiberModel& m) {
  if (!m.semistable) throw NotApplicable("chi_generic_semistable: model is not semistable");
  if (!m.stratum(1)) throw MissingData("chi_generic_semistable: stratum D(1) missing");
  long s = 0;
  for (long k = 1; k <= m.n + 1; ++k) s += sgn(k + 1) * k * m.chi(k);
  return s;
}

Rational vanishing_defect(const SpecialFiberModel& m, const GeneralFiberData& f) {
  return Rational(sgn(m.n) * (f.chi_top - chi_special_fiber(m)));
}

std::map<long, Rational> kulikov_chern_numbers(const SpecialFiberModel& m) {
  if (!m.semistable || !m.kulikov)
    throw NotApplicable("derive_chern_kulikov: requires semistable and kulikov flags");
  std::map<long, Rational> out;
  Rational next(0);  // int over D(k+1); 0 for points
  for (long k = m.n; k >= 1; --k) {
    next = Rational(sgn(m.n - k + 1) * (k + 1) * m.chi(k + 1)) + next;
    out[k] = next;
  }
  return out;
}

SpecialFiberModel derive_chern_kulikov(SpecialFiberModel m) {
  for (const auto& [k, v] : kulikov_chern_numbers(m))
    if (auto it = m.strata.find(k); it != m.strata.end()) it->second.chern_c1cd = v;
  return m;
}

IntersectionTensor::IntersectionTensor(long m) : m_(m) {
  if (m < 1) throw PreconditionError("IntersectionTensor: need at least one component");
  v_.assign(static_cast<std::size_t>(m * m * m * m), Rational(0));
}

std::size_t IntersectionTensor::index(long i, long j, long k, long l) const {
  for (long x : {i, j, k, l})
    if (x < 0 || x >= m_) throw PreconditionError("IntersectionTensor: index out of range");
  return static_cast<std::size_t>(((i * m_ + j) * m_ + k) * m_ + l);
}

const Rational& IntersectionTensor::at(long i, long j, long k, long l) const { return v_[index(i, j, k, l)]; }

void IntersectionTensor::set(long i, long j, long k, long l, const Rational& v) {
  std::array<long, 4> a{i, j, k, l};
  std::sort(a.begin(), a.end());
  do v_[index(a[0], a[1], a[2], a[3])] = v;
  while (std::next_permutation(a.begin(), a.end()));
}

LiuXiaReport liu_xia_identity_check(const IntersectionTensor& t, bool kulikov) {
  const long m = t.size();
  for (long j = 0; j < m; ++j)
    for (long k = j; k < m; ++k)
      for (long l = k; l < m; ++l) {
        Rational s(0);
        for (long i = 0; i < m; ++i) s += t.at(i, j, k, l);
        if (!s.is_zero())
          throw ValidationError("/intersections", "relation sum_i [D_i] = 0 violated at (" +
                                                      std::to_string(j) + "," + std::to_string(k) +
                                                      "," + std::to_string(l) + ")");
      }
  LiuXiaReport r;
  for (long i = 0; i < m; ++i)
    for (long j = i + 1; j < m; ++j)
      for (long k = j + 1; k < m; ++k)
        for (long l = k + 1; l < m; ++l) r.quadruple_count += t.at(i, j, k, l);
  for (long i = 0; i < m; ++i)
    for (long j = i + 1; j < m; ++j)
      for (long k = 0; k < m; ++k)
        if (k != i && k != j) r.self_intersection += t.at(k, k, i, j);
  r.self_intersection_ok = r.self_intersection == Rational(-4) * r.quadruple_count;
  if (kulikov) {
    // adjunction with K_X = 0 and sum_l D_l = 0: K_{D_ij} = -(sum_{l not in {i,j}} D_l)|_{D_ij}
    Rational s(0);
    for (long i = 0; i < m; ++i)
      for (long j = i + 1; j < m; ++j)
        for (long a = 0; a < m; ++a)
          for (long b = 0; b < m; ++b)
            if (a != i && a != j && b != i && b != j) s += t.at(a, b, i, j);
    r.canonical_square = s;
    r.canonical_square_ok = s == Rational(8) * r.quadruple_count;
  }
  return r;
}

}  // namespace degen::strata
