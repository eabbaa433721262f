#include "degen/bcov/bcov.hpp"

#include <functional>

#include "degen/bcov/chow.hpp"

namespace degen::bcov {

namespace {

long sgn(long e) { return e % 2 == 0 ? 1 : -1; }

Rational binom(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

// chi(Omega^{<=m}) = sum_{j<=m} (-1)^j chi(Omega^j)
long truncated_chi(const std::function<std::optional<long>(long)>& chi_j, long m, const std::string& where) {
  long s = 0;
  for (long j = 0; j <= m; ++j) {
    const auto v = chi_j(j);
    if (!v) throw MissingData("mu_p: missing chi(Omega^" + std::to_string(j) + ") at " + where);
    s += sgn(j) * *v;
  }
  return s;
}

Rational chern_or_derive(const SpecialFiberModel& m, long k, std::map<long, Rational>& derived) {
  if (auto c = m.chern(k)) return *c;
  if (m.semistable && m.kulikov) {
    if (derived.empty()) derived = strata::kulikov_chern_numbers(m);
    return derived.at(k);
  }
  throw MissingData("missing /strata/" + std::to_string(k) + "/chern_c1cd");
}

Rational delta_chi(const SpecialFiberModel& m, const GeneralFiberData& f) {
  return Rational(f.chi_top - strata::chi_special_fiber(m));
}

Rational alpha_or_zero(const LimitingMHS& mhs, long p, long q, Branch b) {
  return mhs.has_degree(p + q) ? lmhs::alpha(mhs, p, q, b) : Rational(0);
}

void require_dim(const SpecialFiberModel& m, const GeneralFiberData& f, long n, const char* what) {
  if (m.n != n || f.n != n)
    throw NotApplicable(std::string(what) + ": requires relative dimension " + std::to_string(n));
}

long desing_sum(const std::vector<long>& v) {
  long s = 0;
  for (long x : v) s += x;
  return s;
}

void require_unipotent(const LimitingMHS& mhs, const char* what) {
  if (!mhs.unipotent()) throw NotApplicable(std::string(what) + ": monodromy is not unipotent");
}

}  // namespace

long mu_p(const SpecialFiberModel& m, const GeneralFiberData& f, long p) {
  if (p < 0 || p > m.n + 1) throw PreconditionError("mu_p: p outside 0..n+1");
  long s = 0;
  if (p >= 1)
    s = sgn(p - 1) * truncated_chi([&](long j) { return f.hodge_chi(j); }, p - 1, "/general_fiber/hodge_chis");
  for (long k = 1; k <= p; ++k) {
    const auto* st = m.stratum(k);
    if (!st) continue;
    const std::string where = "/strata/" + std::to_string(k) + "/hodge_chis";
    const auto chi_j = [st](long j) -> std::optional<long> {
      if (st->hodge_chis && j < static_cast<long>(st->hodge_chis->size()))
        return (*st->hodge_chis)[static_cast<std::size_t>(j)];
      if (j == 0) return st->chi_struct;
      return std::nullopt;
    };
    s -= sgn(p - k) * truncated_chi(chi_j, p - k, where);
  }
  return s;
}

Rational mu_bcov(const SpecialFiberModel& m, const GeneralFiberData& f) {
  const long n = m.n;
  std::map<long, Rational> derived;
  Rational r = -Rational((9 * n + 5) * n, 24) * Rational(f.chi_top);
  Rational chern(0);
  for (long k = 1; k <= n; ++k) {
    const long d = n - k + 1;
    r -= Rational(sgn(k) * (9 * n + 3 * k + 2) * d, 24) * Rational(m.chi(k));
    chern += chern_or_derive(m, k, derived);
  }
  r -= Rational(sgn(n), 12) * chern;
  return r;
}

KappaBreakdown kappa_general(const SpecialFiberModel& m, const GeneralFiberData& f, const LimitingMHS& mhs,
                             Branch top_branch, Branch hodge_branch) {
  const long n = m.n;
  if (f.n != n || mhs.fiber_dim() != n) throw DimensionError("kappa_general: dimension mismatch");
  if (!mhs.has_degree(n)) throw MissingData("kappa_general: limiting MHS lacks degree n");
  const auto b = m.b();
  if (!b) throw MissingData("kappa_general: missing /B_integral");
  KappaBreakdown kb;
  kb.euler_term = Rational(3 * n + 1, 12) * delta_chi(m, f);
  for (long k = 1; k <= n + 1; ++k)
    kb.strata_term += Rational(sgn(k) * (k - 1) * (3 * k + 6 * n + 2), 24) * Rational(m.chi(k));
  kb.b_term = -Rational(sgn(n), 12) * *b;
  std::map<long, Rational> derived;
  Rational chern(0);
  for (long k = 1; k <= n; ++k) chern += chern_or_derive(m, k, derived);
  kb.chern_term = -Rational(sgn(n), 12) * chern;
  kb.alpha_top_term = -lmhs::alpha(mhs, n, 0, top_branch) * Rational(f.chi_top, 12);
  for (long p = 0; p <= n; ++p)
    for (long q = 0; q <= n; ++q)
      kb.alpha_hodge_term -= Rational(sgn(p + q) * p) * alpha_or_zero(mhs, p, q, hodge_branch);
  kb.total = kb.euler_term + kb.strata_term + kb.b_term + kb.chern_term + kb.alpha_top_term +
             kb.alpha_hodge_term;
  return kb;
}

Rational rho(const GeneralFiberData& f, const LimitingMHS& mhs) {
  const long n = f.n;
  if (mhs.fiber_dim() != n) throw DimensionError("rho: dimension mismatch");
  Rational r = Rational(f.chi_top, 12) * lmhs::beta(mhs, n, 0);
  for (long p = 0; p <= n; ++p)
    for (long q = 0; q <= n; ++q)
      if (mhs.has_degree(p + q)) r -= Rational(sgn(p + q) * p) * lmhs::beta(mhs, p, q);
  return r;
}

Rational kappa_kulikov(const SpecialFiberModel& m) {
  if (!m.semistable || !m.kulikov) throw NotApplicable("kappa_kulikov: requires semistable and kulikov flags");
  Rational r(0);
  for (long k = 1; k <= m.n + 1; ++k) r += Rational(sgn(k) * k * (k - 1), 24) * Rational(m.chi(k));
  return r;
}

BcovAsymptotics kappa_rho_odp(long n, long s) {
  if (n < 2 || s < 1) throw PreconditionError("kappa_rho_odp: needs n >= 2 and at least one node");
  if (n % 2) return {Rational((n + 1) * s, 24), Rational(s)};
  return {Rational(-(n - 2) * s, 24), Rational(0)};
}

long quadric_euler(long n) { return n + (n % 2 ? 1 : 0); }

Rational hypersurface_h_integral(long n, long d, const Rational& chi_w) {
  return Rational(sgn(n - 1), d) * chi_w + Rational(sgn(n) * n * (n + 1), 2);
}

OdpChernNumbers odp_chern_numbers(long n) {
  OdpChernNumbers c;
  const Rational chi_q(quadric_euler(n));
  c.quadric_h = hypersurface_h_integral(n, 2, chi_q);
  // K_W = O(1-n)
  c.quadric_c1 = Rational(-(n - 1)) * c.quadric_h;
  c.strict = Rational(sgn(n - 1) * 3 * (n - 2), 2) * chi_q + Rational(sgn(n) * (n - 2) * n * (n + 1), 2);
  // c(Omega_E) = (1-h)^{n+1}: c_1 = -(n+1) h, c_{n-1} = (-1)^{n-1} C(n+1, n-1) h^{n-1}
  c.exceptional = Rational(-(n + 1) * sgn(n - 1)) * binom(n + 1, n - 1);
  // c(Omega_X|_E) = (1-h)^{n+1} (1+h)
  c.exceptional_cn = Rational(sgn(n)) * (binom(n + 1, n) - binom(n + 1, n - 1));
  return c;
}

OdpBlowup odp_blowup_model(long n, long s, const GeneralFiberData& fiber) {
  if (n < 2 || s < 1) throw PreconditionError("odp_blowup_model: needs n >= 2 and at least one node");
  if (fiber.n != n) throw DimensionError("odp_blowup_model: fiber dimension mismatch");
  const auto c = odp_chern_numbers(n);
  const long chi_e = s * (n + 1);
  const long chi_w = s * quadric_euler(n);
  const long chi_z = fiber.chi_top - 2 * chi_e + 3 * chi_w;

  SpecialFiberModel m;
  m.n = n;
  m.components.push_back({"Z", 1});
  for (long i = 1; i <= s; ++i) m.components.push_back({"E" + std::to_string(i), 2});
  strata::StratumRecord d1;
  d1.k = 1;
  d1.chi_top = chi_z + chi_e;
  d1.chern_c1cd = Rational(s) * (c.strict + c.exceptional);
  m.strata[1] = d1;
  strata::StratumRecord d2;
  d2.k = 2;
  d2.chi_top = chi_w;
  // for n = 2, W is a conic and c_{n-2} = c_0: the integral is deg K_W
  d2.chern_c1cd = Rational(s) * c.quadric_c1;
  m.strata[2] = d2;
  m.b_integral = Rational(n * s) * c.exceptional_cn;
  // node data of the blown-down fiber; the strata above describe the blow-up,
  // so the Milnor relation and the normal-fiber corollaries do not apply here
  strata::Singularities sing;
  sing.odp_only = true;
  sing.odp_count = s;
  m.singularities = sing;
  return {m, lmhs::odp(n, s), c};
}

Rational kappa_dim3(const SpecialFiberModel& m, const GeneralFiberData& f, const LimitingMHS& mhs,
                    const std::vector<long>& desing) {
  require_dim(m, f, 3, "kappa_dim3");
  const auto b = m.b();
  if (!b) throw MissingData("kappa_dim3: missing /B_integral");
  const Rational a = lmhs::alpha(mhs, 3, 0, Branch::Upper);
  return -Rational(1, 6) * delta_chi(m, f) - (Rational(f.chi_top, 12) + Rational(3)) * a +
         alpha_or_zero(mhs, 1, 1, Branch::Lower) - alpha_or_zero(mhs, 1, 2, Branch::Lower) -
         Rational(desing_sum(desing)) + *b / Rational(12);
}

Rational kappa_dim3_unipotent(const SpecialFiberModel& m, const GeneralFiberData& f, const LimitingMHS& mhs,
                              const std::vector<long>& desing) {
  require_dim(m, f, 3, "kappa_dim3_unipotent");
  require_unipotent(mhs, "kappa_dim3_unipotent");
  const auto b = m.b();
  if (!b) throw MissingData("kappa_dim3_unipotent: missing /B_integral");
  const auto chi_o = f.hodge_chi(0);
  if (!chi_o) throw MissingData("kappa_dim3_unipotent: missing /general_fiber/chi_struct");
  return -Rational(1, 6) * delta_chi(m, f) + Rational(*chi_o - desing_sum(desing)) + *b / Rational(12);
}

Rational kappa_dim3_rational(const SpecialFiberModel& m, const GeneralFiberData& f, const LimitingMHS& mhs) {
  require_dim(m, f, 3, "kappa_dim3_rational");
  return -Rational(1, 6) * delta_chi(m, f) - alpha_or_zero(mhs, 1, 2, Branch::Lower);
}

Rational kappa_dim3_isolated(long milnor, const LimitingMHS& mhs) {
  if (mhs.fiber_dim() != 3) throw NotApplicable("kappa_dim3_isolated: requires relative dimension 3");
  return Rational(milnor, 6) - alpha_or_zero(mhs, 1, 2, Branch::Lower);
}

Rational kappa_dim4(const SpecialFiberModel& m, const GeneralFiberData& f, const LimitingMHS& mhs,
                    const std::vector<long>& desing) {
  require_dim(m, f, 4, "kappa_dim4");
  const auto b = m.b();
  if (!b) throw MissingData("kappa_dim4: missing /B_integral");
  const Rational a = lmhs::alpha(mhs, 4, 0, Branch::Upper);
  return -Rational(1, 12) * delta_chi(m, f) + (Rational(-f.chi_top, 12) + Rational(4)) * a +
         Rational(2) * alpha_or_zero(mhs, 1, 1, Branch::Lower) -
         Rational(2) * alpha_or_zero(mhs, 1, 2, Branch::Lower) +
         Rational(2) * alpha_or_zero(mhs, 1, 3, Branch::Lower) + Rational(2 * (2 - desing_sum(desing))) -
         *b / Rational(12);
}

Rational kappa_dim4_rational(const SpecialFiberModel& m, const GeneralFiberData& f, const LimitingMHS& mhs) {
  require_dim(m, f, 4, "kappa_dim4_rational");
  return -Rational(1, 12) * delta_chi(m, f) - Rational(2) * alpha_or_zero(mhs, 1, 2, Branch::Lower) +
         Rational(2) * alpha_or_zero(mhs, 1, 3, Branch::Lower);
}

Rational kappa_dim4_isolated(long milnor, const LimitingMHS& mhs) {
  if (mhs.fiber_dim() != 4) throw NotApplicable("kappa_dim4_isolated: requires relative dimension 4");
  return Rational(-milnor, 12) + Rational(2) * alpha_or_zero(mhs, 1, 3, Branch::Lower);
}

bool check_milnor(const SpecialFiberModel& m, const GeneralFiberData& f) {
  if (!m.singularities || !m.singularities->isolated || !m.singularities->milnor) return false;
  const Rational d = delta_chi(m, f);
  const Rational want(sgn(m.n) * *m.singularities->milnor);
  if (d != want)
    throw InconsistencyError("Milnor relation chi_inf - chi_0 = (-1)^n mu violated: " + d.str() + " vs " +
                             want.str());
  return true;
}

namespace {

long liuxia_q(const SpecialFiberModel& m, const char* what) {
  if (m.n != 3) throw NotApplicable(std::string(what) + ": requires n = 3");
  if (!m.semistable || !m.kulikov) throw NotApplicable(std::string(what) + ": requires semistable and kulikov");
  if (!m.quadruple_count) throw MissingData(std::string(what) + ": missing /quadruple_count");
  const long q = *m.quadruple_count;
  if (m.chi(3) != 4 * q)
    throw InconsistencyError(std::string(what) + ": chi(D(3)) = " + std::to_string(m.chi(3)) +
                             " but 4Q = " + std::to_string(4 * q));
  return q;
}

}  // namespace

Rational kappa_liuxia_special(const SpecialFiberModel& m) {
  const long q = liuxia_q(m, "kappa_liuxia_special");
  const Rational k = Rational(m.chi(2) - 6 * q, 12);
  SpecialFiberModel withq = m;
  if (!withq.stratum(4)) withq.strata[4] = strata::StratumRecord{4, q, {}, {}, {}};
  if (k != kappa_kulikov(withq))
    throw InconsistencyError("kappa_liuxia_special: disagrees with the Kulikov closed form");
  return k;
}

LiuXiaIntro kappa_liuxia_intro(const SpecialFiberModel& m) {
  const long q = liuxia_q(m, "kappa_liuxia_intro");
  LiuXiaIntro r;
  r.value = Rational(m.chi(2) - 4 * q, 12);
  r.note =
      "intro form (chi(D(2)) - 4Q)/12 differs from the Kulikov closed form (chi(D(2)) - 6Q)/12 by Q/6 "
      "when chi(D(3)) = 4Q and chi(D(4)) = Q; the latter is the value used everywhere else";
  return r;
}

SerreDefect serre_defect(const SpecialFiberModel& m, const GeneralFiberData& f, long p) {
  if (p < 0 || p > m.n) throw PreconditionError("serre_defect: p outside 0..n");
  const Rational c = strata::vanishing_defect(m, f);
  SerreDefect d;
  d.coefficient = Rational(sgn(m.n + 1 - p)) * c;
  d.middle = m.n % 2 == 0 && p == m.n / 2;
  return d;
}

const char* to_string(LintStatus s) {
  switch (s) {
    case LintStatus::Ok: return "ok";
    case LintStatus::Violation: return "violation";
    case LintStatus::Unavailable: return "unavailable";
    default: return "info";
  }
}

bool SpecializationReport::has_violation() const {
  for (const auto& l : lints)
    if (l.status == LintStatus::Violation) return true;
  return false;
}

Integer ceil_even(const Rational& x) {
  Integer c = x.floor();
  if (Rational(c) < x) c += 1;
  if (c % 2 != 0) c += 1;
  return c;
}

std::optional<Integer> min_total_nodes(long n, long chi) {
  if (n % 2 == 1 && chi > -24) {
    const Rational x(48 + 2 * chi, n + 1);
    Integer c = x.floor();
    if (Rational(c) < x) c += 1;
    return c;
  }
  if (n % 2 == 0 && n >= 4 && chi < 24) return ceil_even(Rational(48 - 2 * chi, n - 2));
  return std::nullopt;
}

SpecializationReport lints(const SpecialFiberModel& m, const GeneralFiberData& f,
                           const std::optional<LimitingMHS>& mhs, const FamilyContext& ctx) {
  SpecializationReport rep;
  const auto& sing = m.singularities;
  const bool odp_only = sing && sing->odp_only;
  std::optional<long> total = ctx.total_nodes;
  if (!total && odp_only) total = sing->odp_count;

  {
    Lint l{"parity", LintStatus::Unavailable, "needs even n, compact base and an ODP-only node count", {}};
    if (m.n % 2 == 0 && ctx.compact_base && odp_only && total) {
      l.value = Integer(*total);
      if (*total % 2) {
        l.status = LintStatus::Violation;
        l.message = "odd total number of ordinary double points over a compact base in even dimension";
      } else {
        l.status = LintStatus::Ok;
        l.message = "total node count is even";
      }
    }
    rep.lints.push_back(l);
  }
  {
    Lint l{"fang_lu_bound", LintStatus::Unavailable, "needs a primitive non-isotrivial family", {}};
    if (ctx.primitive && ctx.non_isotrivial) {
      const auto bound = min_total_nodes(m.n, f.chi_top);
      if (!bound) {
        l.status = LintStatus::Info;
        l.message = "no constraint for this dimension and Euler characteristic";
      } else {
        l.value = *bound;
        if (total && Integer(*total) < *bound) {
          l.status = LintStatus::Violation;
          l.message = "total nodes " + std::to_string(*total) + " below the minimum " + bound->get_str();
        } else {
          l.status = total ? LintStatus::Ok : LintStatus::Info;
          l.message = "minimum total nodes " + bound->get_str();
        }
      }
    }
    rep.lints.push_back(l);
  }
  {
    Lint l{"abelian_hyperkahler", LintStatus::Unavailable, "fiber is neither abelian nor hyperkahler", {}};
    const bool ab = f.type == strata::FiberType::Abelian && f.n >= 2;
    const bool hk = f.type == strata::FiberType::Hyperkahler && f.n >= 4;
    if (ab || hk) {
      const bool has_nodes = odp_only && sing->odp_count && *sing->odp_count > 0;
      l.status = has_nodes ? LintStatus::Violation : LintStatus::Ok;
      l.message = has_nodes ? "impossible degeneration: fiber with only ordinary double points"
                            : "no ODP-only fiber declared";
    }
    rep.lints.push_back(l);
  }
  {
    Lint l{"rationality", LintStatus::Unavailable, "kappa not computable from the inputs", {}};
    if (mhs) {
      try {
        const Rational k = kappa_general(m, f, *mhs, Branch::Upper, Branch::Lower).total;
        const Rational v = Rational(12) * Rational(m.multiplicity_lcm()) * k;
        l.status = v.is_integer() ? LintStatus::Ok : LintStatus::Violation;
        l.message = "12 lcm(m_i) kappa = " + v.str();
        if (v.is_integer()) l.value = v.num();
        rep.lints.push_back(l);
        Lint u{"rationality_unipotent", LintStatus::Unavailable, "monodromy is not unipotent", {}};
        if (mhs->unipotent()) {
          const Rational w = Rational(12) * k;
          u.status = w.is_integer() ? LintStatus::Ok : LintStatus::Violation;
          u.message = "12 kappa = " + w.str();
          if (w.is_integer()) u.value = w.num();
        }
        rep.lints.push_back(u);
        return rep;
      } catch (const InconsistencyError&) {
        throw;
      } catch (const Error& e) {
        l.message = e.what();
      }
    }
    rep.lints.push_back(l);
  }
  return rep;
}

SpecializationReport analyze(const SpecialFiberModel& m, const GeneralFiberData& f,
                             const std::optional<LimitingMHS>& mhs, const FamilyContext& ctx) {
  SpecializationReport rep = lints(m, f, mhs, ctx);
  const auto attempt = [&](const std::string& name, const std::function<Rational()>& fn) {
    try {
      rep.formulas.emplace_back(name, fn());
    } catch (const InconsistencyError& e) {
      rep.inconsistencies.emplace_back(name, e.what());
    } catch (const Error& e) {
      rep.unavailable.emplace_back(name, e.what());
    }
  };
  const auto need_mhs = [&]() -> const LimitingMHS& {
    if (!mhs) throw MissingData("no limiting MHS supplied");
    return *mhs;
  };
  const auto desing = [&]() -> const std::vector<long>& {
    if (!m.desing_chi_struct) throw MissingData("missing /special_fiber/desing_chi_struct");
    return *m.desing_chi_struct;
  };
  const auto sing = [&]() -> const strata::Singularities& {
    if (!m.singularities) throw MissingData("missing /special_fiber/singularities");
    return *m.singularities;
  };
  try {
    check_milnor(m, f);
  } catch (const InconsistencyError& e) {
    rep.inconsistencies.emplace_back("milnor_relation", e.what());
  }

  attempt("chi_special_fiber", [&] { return Rational(strata::chi_special_fiber(m)); });
  attempt("chi_generic_semistable", [&] { return Rational(strata::chi_generic_semistable(m)); });
  attempt("vanishing_defect", [&] { return strata::vanishing_defect(m, f); });
  attempt("mu_bcov", [&] { return mu_bcov(m, f); });
  attempt("kappa_general", [&] { return kappa_general(m, f, need_mhs(), Branch::Upper, Branch::Lower).total; });
  attempt("rho", [&] { return rho(f, need_mhs()); });
  attempt("kappa_kulikov", [&] { return kappa_kulikov(m); });
  attempt("kappa_liuxia_special", [&] { return kappa_liuxia_special(m); });
  attempt("kappa_odp", [&] {
    const auto& s = sing();
    if (!s.odp_only || !s.odp_count) throw NotApplicable("singularities are not declared ODP-only");
    return kappa_rho_odp(m.n, *s.odp_count).kappa;
  });
  attempt("rho_odp", [&] {
    const auto& s = sing();
    if (!s.odp_only || !s.odp_count) throw NotApplicable("singularities are not declared ODP-only");
    return kappa_rho_odp(m.n, *s.odp_count).rho;
  });
  if (m.n == 3) {
    attempt("kappa_dim3", [&] { return kappa_dim3(m, f, need_mhs(), desing()); });
    attempt("kappa_dim3_unipotent", [&] { return kappa_dim3_unipotent(m, f, need_mhs(), desing()); });
    attempt("kappa_dim3_rational", [&] {
      if (!sing().rational) throw NotApplicable("singularities not declared rational");
      return kappa_dim3_rational(m, f, need_mhs());
    });
    attempt("kappa_dim3_isolated", [&] {
      const auto& s = sing();
      if (!s.rational || !s.isolated || !s.milnor) throw NotApplicable("needs rational isolated singularities with a Milnor number");
      return kappa_dim3_isolated(*s.milnor, need_mhs());
    });
  }
  if (m.n == 4) {
    attempt("kappa_dim4", [&] { return kappa_dim4(m, f, need_mhs(), desing()); });
    attempt("kappa_dim4_rational", [&] {
      if (!sing().rational) throw NotApplicable("singularities not declared rational");
      return kappa_dim4_rational(m, f, need_mhs());
    });
    attempt("kappa_dim4_isolated", [&] {
      const auto& s = sing();
      if (!s.rational || !s.isolated || !s.milnor) throw NotApplicable("needs rational isolated singularities with a Milnor number");
      return kappa_dim4_isolated(*s.milnor, need_mhs());
    });
  }
  return rep;
}

}  // namespace degen::bcov
