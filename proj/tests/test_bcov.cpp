#include <doctest.h>

#include "degen/bcov/bcov.hpp"
#include "degen/bcov/chow.hpp"
#include "generators.hpp"
#include "support.hpp"

using namespace degen;
using namespace degen::bcov;
using degen::testing::R;

namespace {

GeneralFiberData fiber(long n, long chi) {
  GeneralFiberData f;
  f.n = n;
  f.chi_top = chi;
  return f;
}

LimitingMHS trivial_mhs(long n) { return lmhs::pure(n, [n] {
  lmhs::HodgeDiamond h(static_cast<std::size_t>(n + 1), std::vector<long>(static_cast<std::size_t>(n + 1), 0));
  h[0][0] = h[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] = 1;
  return h;
}()); }

// Smooth special fiber: one component equal to the general fiber.
SpecialFiberModel smooth_model(long n, long chi, long chern = 0) {
  auto m = testing::strata_model(n, {chi});
  m.strata[1].chern_c1cd = Rational(chern);
  return m;
}

}  // namespace

TEST_CASE("mu_p") {
  // two components (chi(O) = 1 each) meeting in a K3; strict CY3 fiber
  auto m = testing::strata_model(3, {0, 24});
  m.components.push_back({"D2", 1});
  m.strata[1].chi_struct = 2;
  m.strata[2].chi_struct = 2;
  GeneralFiberData f = fiber(3, 0);
  f.chi_struct = 0;
  CHECK(mu_p(m, f, 1) == -2);
  CHECK(mu_p(m, f, 0) == 0);
  CHECK_THROWS_AS(mu_p(m, f, 2), MissingData);

  // smooth special fiber: every mu_p vanishes
  std::mt19937_64 rng(3);
  for (long n = 1; n <= 5; ++n) {
    const auto chis = testing::coherent_chis(rng, n, 48, n == 1 ? -48 : 0);
    auto s = smooth_model(n, 48);
    s.strata[1].hodge_chis = std::vector<long>(chis.begin(), chis.end());
    s.strata[1].hodge_chis->push_back(0);  // placeholder, trimmed below
    s.strata[1].hodge_chis->pop_back();
    GeneralFiberData g = fiber(n, 48);
    g.hodge_chis = chis;
    for (long p = 0; p <= n; ++p) CHECK(mu_p(s, g, p) == 0);
  }
}

TEST_CASE("coherent data generator satisfies its identities") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const long d = testing::uniform(rng, 2, 7);
    const long chi = 24 * testing::uniform(rng, -5, 5);
    const long c = 12 * testing::uniform(rng, -5, 5);
    const auto x = testing::coherent_chis(rng, d, chi, c);
    Rational e1(0), e2(0), e3(0);
    for (long j = 0; j <= d; ++j) {
      const long sg = j % 2 ? -1 : 1;
      e1 += Rational(sg * x[static_cast<std::size_t>(j)]);
      e2 += Rational(sg * j * x[static_cast<std::size_t>(j)]);
      e3 += Rational(sg * j * (j + 1) * x[static_cast<std::size_t>(j)], 2);
    }
    CHECK(e1 == chi);
    CHECK(e2 == Rational(d * chi, 2));
    CHECK(e3 == Rational(d * (3 * d + 7) * chi, 24) + Rational(d % 2 ? -c : c, 12));
  }
  // P^2: chi(O) = 1, chi(Omega^1) = -1, chi(Omega^2) = 1 with c_1^2 = 9
  const auto p2 = [] {
    std::vector<long> x{1, -1, 1};
    return x;
  }();
  CHECK(Rational(-p2[1] + 3 * p2[2]) == Rational(2 * 13 * 3, 24) + Rational(9, 12));
}

TEST_CASE("mu_bcov examples") {
  for (long chi : {-200, 0, 24, 7}) CHECK(mu_bcov(smooth_model(3, chi), fiber(3, chi)) == 0);
  CHECK(mu_bcov(smooth_model(1, 0), fiber(1, 0)) == 0);
  auto kul = testing::strata_model(3, {10, 24, 8, 2});
  CHECK(mu_bcov(kul, fiber(3, strata::chi_generic_semistable(kul))) ==
        mu_bcov(strata::derive_chern_kulikov(kul), fiber(3, -22)));
  auto no_chern = kul;
  no_chern.kulikov = false;
  CHECK_THROWS_AS(mu_bcov(no_chern, fiber(3, -22)), MissingData);
}

TEST_CASE("mu_bcov against the sum of p (-1)^p mu_p on coherent data") {
  std::mt19937_64 rng(13);
  const auto check = [&](long n, const std::vector<long>& chi_k, long chi_inf, const std::vector<long>& chern_k) {
    auto m = testing::strata_model(n, chi_k);
    for (long k = 1; k <= n + 1; ++k) {
      auto& r = m.strata[k];
      const long d = n + 1 - k;
      if (k <= n) r.chern_c1cd = Rational(chern_k[static_cast<std::size_t>(k - 1)]);
      r.hodge_chis = testing::coherent_chis(rng, d, r.chi_top, k <= n ? chern_k[static_cast<std::size_t>(k - 1)] : 0);
    }
    GeneralFiberData f = fiber(n, chi_inf);
    f.hodge_chis = testing::coherent_chis(rng, n, chi_inf, n == 1 ? -chi_inf : 0);
    Rational oracle(0);
    for (long p = 0; p <= n; ++p) oracle += Rational((p % 2 ? -p : p) * mu_p(m, f, p));
    CHECK(mu_bcov(m, f) == oracle);
  };
  for (int t = 0; t < 200; ++t) {
    const long n = testing::uniform(rng, 2, 6);
    std::vector<long> chi_k, chern_k;
    for (long k = 1; k <= n + 1; ++k) chi_k.push_back(24 * testing::uniform(rng, -4, 4));
    chi_k.back() = std::abs(chi_k.back());
    for (long k = 1; k <= n; ++k)
      chern_k.push_back(k == n ? -chi_k[static_cast<std::size_t>(k - 1)] : 12 * testing::uniform(rng, -6, 6));
    check(n, chi_k, 24 * testing::uniform(rng, -10, 10), chern_k);
  }
  // the Kulikov vector (10,24,8,2), scaled by 12 for integrality of the synthetic data
  auto kul = testing::strata_model(3, {120, 288, 96, 24});
  const auto c = strata::kulikov_chern_numbers(kul);
  check(3, {120, 288, 96, 24}, strata::chi_generic_semistable(kul),
        {c.at(1).num().get_si(), c.at(2).num().get_si(), c.at(3).num().get_si()});
}

TEST_CASE("kappa_general examples") {
  for (long n = 1; n <= 5; ++n) {
    auto m = smooth_model(n, 24, 0);
    m.b_integral = Rational(0);
    CHECK(kappa_general(m, fiber(n, 24), trivial_mhs(n), Branch::Upper, Branch::Lower).total == 0);
  }
  auto kul = testing::strata_model(3, {10, 24, 8, 2});
  const auto kb = kappa_general(kul, fiber(3, -22), trivial_mhs(3), Branch::Upper, Branch::Lower);
  CHECK(kb.total == 1);
  CHECK(kb.total == kb.euler_term + kb.strata_term + kb.b_term + kb.chern_term + kb.alpha_top_term +
                        kb.alpha_hodge_term);
  CHECK(kb.b_term == 0);

  const auto blow = odp_blowup_model(3, 1, fiber(3, -200));
  CHECK(kappa_general(blow.model, fiber(3, -200), blow.mhs, Branch::Upper, Branch::Lower).total == R("1/6"));

  auto nob = kul;
  nob.kulikov = false;
  nob = strata::derive_chern_kulikov(testing::strata_model(3, {10, 24, 8, 2}));
  nob.kulikov = false;
  CHECK_THROWS_AS(kappa_general(nob, fiber(3, -22), trivial_mhs(3), Branch::Upper, Branch::Lower), MissingData);
}

TEST_CASE("Kulikov identity replay") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 300; ++t) {
    const long n = testing::uniform(rng, 2, 6);
    std::vector<long> chis;
    for (long k = 1; k <= n + 1; ++k) chis.push_back(testing::uniform(rng, -50, 50));
    chis.back() = std::abs(chis.back());
    const auto m = testing::strata_model(n, chis);
    const auto f = fiber(n, strata::chi_generic_semistable(m));
    const auto kb = kappa_general(strata::derive_chern_kulikov(m), f, trivial_mhs(n), Branch::Upper, Branch::Lower);
    Rational closed(0);
    for (long k = 1; k <= n + 1; ++k)
      closed += Rational((k % 2 ? -1 : 1) * k * (k - 1), 24) * Rational(chis[static_cast<std::size_t>(k - 1)]);
    CHECK(kb.total == closed);
    CHECK(kappa_kulikov(m) == closed);
  }
}

TEST_CASE("kappa_kulikov examples") {
  CHECK(kappa_kulikov(testing::strata_model(3, {10, 24, 8, 2})) == 1);
  CHECK(kappa_kulikov(testing::strata_model(3, {5})) == 0);
  // type II K3 chain: rational ends, elliptic ruled middles, elliptic double curves
  CHECK(kappa_kulikov(testing::strata_model(2, {24, 0})) == 0);
  auto ns = testing::strata_model(3, {5});
  ns.kulikov = false;
  CHECK_THROWS_AS(kappa_kulikov(ns), NotApplicable);
}

TEST_CASE("rho") {
  CHECK(rho(fiber(3, -200), trivial_mhs(3)) == 0);
  for (long s : {1, 2, 5}) {
    for (long n : {3, 5, 7}) CHECK(rho(fiber(n, 10), lmhs::odp(n, s)) == s);
    for (long n : {2, 4, 6}) CHECK(rho(fiber(n, 10), lmhs::odp(n, s)) == 0);
  }
  CHECK(rho(fiber(1, 0), lmhs::nodal_elliptic()) == -Rational(-1));
}

TEST_CASE("kappa_rho_odp") {
  CHECK(kappa_rho_odp(3, 1) == BcovAsymptotics{R("1/6"), R("1")});
  CHECK(kappa_rho_odp(4, 3) == BcovAsymptotics{R("-1/4"), R("0")});
  CHECK(kappa_rho_odp(2, 5) == BcovAsymptotics{R("0"), R("0")});
  CHECK_THROWS_AS(kappa_rho_odp(1, 1), PreconditionError);
}

TEST_CASE("chow ring") {
  for (long n = 1; n <= 6; ++n) {
    const auto p = ChowRing::projective_space(n);
    CHECK(p.integrate(PolynomialQ::monomial(Rational(1), static_cast<std::size_t>(n))) == 1);
    CHECK(p.euler() == n + 1);
  }
  const auto p3 = ChowRing::projective_space(3);
  CHECK(p3.integrate_top(p3.mul(p3.c(1), p3.c(2))) == -24);
  CHECK_THROWS_AS(p3.integrate_top(p3.c(1)), DimensionError);
  const auto q = ChowRing::hypersurface(3, 2);
  CHECK(q.euler() == 4);
  CHECK(q.integrate(q.mul(q.h(), q.h())) == 2);
  CHECK(q.c(1) == q.line(-2));
  // quintic threefold
  CHECK(ChowRing::hypersurface(4, 5).euler() == -200);
  for (long n = 2; n <= 7; ++n) CHECK(ChowRing::hypersurface(n, 2).euler() == quadric_euler(n));
}

TEST_CASE("ODP blow-up Chern numbers against the Chow ring") {
  for (long n = 2; n <= 6; ++n) {
    const auto c = odp_chern_numbers(n);
    const auto w = ChowRing::hypersurface(n, 2);
    const auto e = ChowRing::projective_space(n);
    CHECK(c.quadric_h == w.integrate(w.mul(w.h(), w.c(n - 2))));
    CHECK(c.quadric_c1 == w.integrate(w.mul(w.c(1), w.c(n - 2))));
    CHECK(c.exceptional == e.integrate(e.mul(e.c(1), e.c(n - 1))));
    // conormal sequence: c(Omega_X|_E) = c(Omega_E) c(O_E(1)), N_E = O(-1)
    CHECK(c.exceptional_cn == e.integrate(e.mul(e.omega(), PolynomialQ{Rational(1), Rational(1)})));
    // K_Z = (n-2) W and c_1(N_{W/Z}) = -h restrict the Z integral to W
    const Rational z = Rational(n - 2) * (w.integrate(w.c(n - 1)) + w.integrate(w.mul(w.h(), w.c(n - 2))));
    CHECK(c.strict == z);
    for (long d = 1; d <= 5; ++d) {
      const auto hd = ChowRing::hypersurface(n, d);
      CHECK(hypersurface_h_integral(n, d, hd.euler()) == hd.integrate(hd.mul(hd.h(), hd.c(n - 2))));
    }
  }
  // hand value: n = 3 gives a zero Z integral
  CHECK(odp_chern_numbers(3).strict == 0);
  CHECK(odp_chern_numbers(2).strict == 0);
}

TEST_CASE("ODP consistency") {
  for (long n = 2; n <= 8; ++n)
    for (long s : {1, 2, 5})
      for (long chi : {-200, 0, 48}) {
        const auto f = fiber(n, chi);
        const auto b = odp_blowup_model(n, s, f);
        CHECK_NOTHROW(strata::validate(b.model));
        const auto want = kappa_rho_odp(n, s);
        CHECK(kappa_general(b.model, f, b.mhs, Branch::Upper, Branch::Lower).total == want.kappa);
        CHECK(rho(f, b.mhs) == want.rho);
      }
}

TEST_CASE("dimension 3 and 4 corollaries") {
  for (long s = 1; s <= 10; ++s) {
    CHECK(kappa_dim3_isolated(s, lmhs::odp(3, s)) == kappa_rho_odp(3, s).kappa);
    CHECK(kappa_dim4_isolated(s, lmhs::odp(4, s)) == kappa_rho_odp(4, s).kappa);
  }
  // blown-down fiber with s nodes: chi_0 = chi_inf - (-1)^n s
  for (long s = 1; s <= 4; ++s) {
    auto m3 = smooth_model(3, -200 + s);
    m3.semistable = m3.kulikov = false;
    m3.b_integral = Rational(0);
    strata::Singularities sing;
    sing.isolated = sing.rational = sing.odp_only = true;
    sing.odp_count = sing.milnor = s;
    m3.singularities = sing;
    CHECK(check_milnor(m3, fiber(3, -200)));
    CHECK(kappa_dim3_rational(m3, fiber(3, -200), lmhs::odp(3, s)) == kappa_rho_odp(3, s).kappa);
    // smooth total space, normal fiber: sum chi(O_Dtilde) = chi(O_X_inf) = 0
    CHECK(kappa_dim3(m3, fiber(3, -200), lmhs::odp(3, s), {0}) == kappa_rho_odp(3, s).kappa);

    auto m4 = smooth_model(4, 100 - s);
    m4.b_integral = Rational(0);
    m4.semistable = m4.kulikov = false;
    m4.singularities = sing;
    CHECK(check_milnor(m4, fiber(4, 100)));
    CHECK(kappa_dim4_rational(m4, fiber(4, 100), lmhs::odp(4, s)) == kappa_rho_odp(4, s).kappa);
    CHECK(kappa_dim4(m4, fiber(4, 100), lmhs::odp(4, s), {2}) == kappa_rho_odp(4, s).kappa);

    auto bad = m3;
    bad.singularities->milnor = s + 1;
    CHECK_THROWS_AS(check_milnor(bad, fiber(3, -200)), InconsistencyError);
  }
  auto sm3 = smooth_model(3, -200);
  sm3.b_integral = Rational(0);
  CHECK(kappa_dim3(sm3, fiber(3, -200), trivial_mhs(3), {0}) == 0);
  GeneralFiberData f3 = fiber(3, -200);
  f3.chi_struct = 0;
  CHECK(kappa_dim3_unipotent(sm3, f3, trivial_mhs(3), {0}) == 0);
  auto sm4 = smooth_model(4, 100);
  sm4.b_integral = Rational(0);
  CHECK(kappa_dim4(sm4, fiber(4, 100), trivial_mhs(4), {2}) == 0);
  CHECK_THROWS_AS(kappa_dim3(sm4, fiber(4, 100), trivial_mhs(4), {2}), NotApplicable);
}

TEST_CASE("Liu-Xia special fiber") {
  auto m = testing::strata_model(3, {10, 24, 8, 2});
  m.quadruple_count = 2;
  CHECK(kappa_liuxia_special(m) == 1);
  CHECK(kappa_liuxia_special(m) == kappa_kulikov(m));
  const auto intro = kappa_liuxia_intro(m);
  CHECK(intro.value == R("4/3"));
  CHECK_FALSE(intro.note.empty());
  auto q0 = testing::strata_model(3, {10, 36, 0});
  q0.quadruple_count = 0;
  CHECK(kappa_liuxia_special(q0) == 3);
  auto z = testing::strata_model(3, {10, 0, 0});
  z.quadruple_count = 0;
  CHECK(kappa_liuxia_special(z) == 0);
  auto bad = testing::strata_model(3, {10, 24, 7, 2});
  bad.quadruple_count = 2;
  CHECK_THROWS_AS(kappa_liuxia_special(bad), InconsistencyError);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const long q = testing::uniform(rng, 0, 20);
    auto r = testing::strata_model(3, {testing::uniform(rng, -50, 50), testing::uniform(rng, -50, 50), 4 * q, q});
    r.quadruple_count = q;
    CHECK(kappa_liuxia_special(r) == kappa_kulikov(r));
  }
}

TEST_CASE("serre_defect") {
  CHECK(serre_defect(smooth_model(3, 5), fiber(3, 5), 1).coefficient == 0);
  for (long n = 1; n <= 6; ++n) {
    const long chi0 = 10 - (n % 2 ? -1 : 1);
    for (long p = 0; p <= n; ++p) {
      const auto d = serre_defect(testing::strata_model(n, {chi0}), fiber(n, 10), p);
      CHECK(d.coefficient == ((n + 1 - p) % 2 ? -1 : 1));
    }
  }
  // n = 4, c = 3
  const auto d = serre_defect(testing::strata_model(4, {7}), fiber(4, 10), 2);
  CHECK(d.coefficient == -3);
  CHECK(d.middle);
}

TEST_CASE("lints") {
  auto m4 = smooth_model(4, 97);
  strata::Singularities sing;
  sing.odp_only = true;
  sing.odp_count = 3;
  m4.singularities = sing;
  FamilyContext ctx;
  ctx.compact_base = true;
  ctx.total_nodes = 3;
  auto rep = lints(m4, fiber(4, 100), std::nullopt, ctx);
  CHECK(rep.lints[0].name == "parity");
  CHECK(rep.lints[0].status == LintStatus::Violation);
  CHECK(rep.has_violation());
  ctx.total_nodes = 4;
  CHECK(lints(m4, fiber(4, 100), std::nullopt, ctx).lints[0].status == LintStatus::Ok);

  FamilyContext fl;
  fl.primitive = fl.non_isotrivial = true;
  auto m3 = smooth_model(3, -20);
  auto r3 = lints(m3, fiber(3, -20), std::nullopt, fl);
  CHECK(r3.lints[1].name == "fang_lu_bound");
  REQUIRE(r3.lints[1].value);
  CHECK(*r3.lints[1].value == 2);
  CHECK(*min_total_nodes(3, -20) == 2);
  CHECK_FALSE(min_total_nodes(3, -200));
  CHECK(*min_total_nodes(4, 0) == 24);
  CHECK(*min_total_nodes(6, 10) == 8);  // 28/4 = 7, next even 8
  CHECK(ceil_even(R("7")) == 8);
  CHECK(ceil_even(R("6")) == 6);
  CHECK(ceil_even(R("-3/2")) == 0);
  fl.total_nodes = 1;
  CHECK(lints(m3, fiber(3, -20), std::nullopt, fl).lints[1].status == LintStatus::Violation);

  GeneralFiberData ab = fiber(2, 0);
  ab.type = strata::FiberType::Abelian;
  auto ma = smooth_model(2, 1);
  strata::Singularities one;
  one.odp_only = true;
  one.odp_count = 1;
  ma.singularities = one;
  CHECK(lints(ma, ab, std::nullopt, {}).lints[2].status == LintStatus::Violation);

  auto kul = testing::strata_model(3, {10, 24, 8, 2});
  auto rr = lints(kul, fiber(3, -22), trivial_mhs(3), {});
  CHECK(rr.lints[3].name == "rationality");
  CHECK(rr.lints[3].status == LintStatus::Ok);
  CHECK(*rr.lints[3].value == 12);
  CHECK(rr.lints[4].status == LintStatus::Ok);
}

TEST_CASE("rationality certificates on random descriptors") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 300; ++t) {
    const auto d = testing::random_descriptor(rng);
    CHECK_NOTHROW(strata::validate(d.model));
    const Rational k = kappa_general(d.model, d.fiber, d.mhs, Branch::Upper, Branch::Lower).total;
    CHECK((Rational(12) * Rational(d.model.multiplicity_lcm()) * k).is_integer());
    if (d.mhs.unipotent()) CHECK((Rational(12) * k).is_integer());
  }
}

TEST_CASE("analyze") {
  auto kul = testing::strata_model(3, {10, 24, 8, 2});
  kul.quadruple_count = 2;
  const auto rep = analyze(kul, fiber(3, -22), trivial_mhs(3), {});
  std::map<std::string, Rational> got(rep.formulas.begin(), rep.formulas.end());
  CHECK(got.at("kappa_general") == 1);
  CHECK(got.at("kappa_kulikov") == 1);
  CHECK(got.at("kappa_liuxia_special") == 1);
  CHECK(got.at("chi_special_fiber") == -8);
  CHECK(got.at("vanishing_defect") == 14);
  CHECK(got.at("rho") == 0);
  CHECK_FALSE(got.count("kappa_odp"));
  CHECK_FALSE(rep.unavailable.empty());
}
