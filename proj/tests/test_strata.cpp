#include <doctest.h>

#include "degen/strata/strata.hpp"
#include "generators.hpp"
#include "support.hpp"

using namespace degen;
using namespace degen::strata;
using degen::testing::R;

TEST_CASE("chi_special_fiber and chi_generic_semistable") {
  const auto smooth = testing::strata_model(3, {7});
  CHECK(chi_special_fiber(smooth) == 7);
  CHECK(chi_generic_semistable(smooth) == 7);

  const auto kul = testing::strata_model(3, {10, 24, 8, 2});
  CHECK(chi_special_fiber(kul) == -8);
  CHECK(chi_generic_semistable(kul) == -22);

  for (long c : {-4, 0, 24}) {
    const auto two = testing::strata_model(3, {2 * c, 24});
    CHECK(chi_generic_semistable(two) == 2 * c - 48);
  }
  auto ns = kul;
  ns.semistable = false;
  CHECK_THROWS_AS(chi_generic_semistable(ns), NotApplicable);
  auto none = kul;
  none.strata.clear();
  CHECK_THROWS_AS(chi_special_fiber(none), MissingData);
}

TEST_CASE("vanishing_defect") {
  GeneralFiberData f;
  f.n = 3;
  f.chi_top = -22;
  CHECK(vanishing_defect(testing::strata_model(3, {10, 24, 8, 2}), f) == 14);
  f.chi_top = 7;
  CHECK(vanishing_defect(testing::strata_model(3, {7}), f) == 0);
  // blown-down fiber with one node: chi(X_0) = chi_inf - (-1)^n
  for (long n = 1; n <= 6; ++n) {
    GeneralFiberData g;
    g.n = n;
    g.chi_top = 10;
    const long chi0 = 10 - (n % 2 ? -1 : 1);
    CHECK(vanishing_defect(testing::strata_model(n, {chi0}), g) == 1);
  }
}

TEST_CASE("derive_chern_kulikov") {
  const auto m = derive_chern_kulikov(testing::strata_model(3, {10, 24, 8, 2}));
  CHECK(*m.chern(3) == -8);
  CHECK(*m.chern(2) == 16);
  CHECK(*m.chern(1) == -32);
  CHECK(*m.chern(4) == 0);
  const auto e = derive_chern_kulikov(testing::strata_model(4, {5}));
  for (long k = 1; k <= 4; ++k) CHECK(*e.chern(k) == 0);
  auto nk = testing::strata_model(3, {10, 24, 8, 2});
  nk.kulikov = false;
  CHECK_THROWS_AS(derive_chern_kulikov(nk), NotApplicable);

  // recursion replayed directly for random data
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const long n = testing::uniform(rng, 1, 6);
    std::vector<long> chis;
    for (long k = 1; k <= n + 1; ++k) chis.push_back(testing::uniform(rng, -50, 50));
    chis.back() = std::abs(chis.back());
    const auto c = kulikov_chern_numbers(testing::strata_model(n, chis));
    for (long k = 1; k <= n; ++k) {
      const Rational deeper = k == n ? Rational(0) : c.at(k + 1);
      const long sign = (n - k + 1) % 2 ? -1 : 1;
      CHECK(c.at(k) - deeper == Rational(sign * (k + 1) * chis[static_cast<std::size_t>(k)]));
    }
  }
}

TEST_CASE("model validation") {
  auto m = testing::strata_model(3, {10, 24, 8, 2});
  CHECK_NOTHROW(validate(m));
  auto bad = m;
  bad.strata[4].chi_top = -1;
  try {
    validate(bad);
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(e.path() == "/strata/4/chi_top");
  }
  bad = m;
  bad.strata[4].chern_c1cd = Rational(1);
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = m;
  bad.components[0].multiplicity = 2;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = m;
  bad.b_integral = Rational(1);
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = m;
  bad.quadruple_count = 3;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  m.quadruple_count = 2;
  CHECK_NOTHROW(validate(m));
  bad = m;
  bad.strata[2].hodge_chis = std::vector<long>{1, 2};
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad.strata[2].hodge_chis = std::vector<long>{2, -20, 3};
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad.strata[2].hodge_chis = std::vector<long>{2, -20, 2};
  CHECK_NOTHROW(validate(bad));

  GeneralFiberData f;
  f.n = 3;
  f.chi_top = -200;
  f.type = FiberType::StrictCY;
  f.chi_struct = 0;
  CHECK_NOTHROW(validate(f));
  f.chi_struct = 2;
  CHECK_THROWS_AS(validate(f), ValidationError);
  f.chi_struct.reset();
  f.betti = std::vector<long>{1, 0, 1, 204, 1, 0, 1};
  CHECK_NOTHROW(validate(f));
  f.betti = std::vector<long>{1, 0, 1, 204, 2, 0, 1};
  CHECK_THROWS_AS(validate(f), ValidationError);
  f.betti.reset();
  f.hodge_chis = std::vector<long>{0, -101, 0, 0};
  CHECK_THROWS_AS(validate(f), ValidationError);
  f.hodge_chis = std::vector<long>{0, 100, -100, 0};
  CHECK_NOTHROW(validate(f));
}

TEST_CASE("liu_xia_identity_check") {
  IntersectionTensor zero(5);
  auto r0 = liu_xia_identity_check(zero, true);
  CHECK(r0.quadruple_count == 0);
  CHECK(r0.self_intersection == 0);
  CHECK(r0.self_intersection_ok);
  CHECK(*r0.canonical_square == 0);

  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto tensor = testing::random_liuxia_tensor(rng, testing::uniform(rng, 4, 7), Rational(2));
    const auto r = liu_xia_identity_check(tensor, true);
    CHECK(r.quadruple_count == 2);
    CHECK(r.self_intersection == -8);
    CHECK(r.self_intersection_ok);
    CHECK(*r.canonical_square == 16);
    CHECK(r.canonical_square_ok);
  }

  IntersectionTensor bad(4);
  bad.set(0, 1, 2, 3, Rational(1));
  CHECK_THROWS_AS(liu_xia_identity_check(bad, false), ValidationError);
}
