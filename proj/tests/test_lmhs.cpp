#include <doctest.h>

#include "degen/lmhs/lmhs.hpp"
#include "generators.hpp"
#include "support.hpp"

using namespace degen;
using namespace degen::lmhs;
using degen::testing::R;

namespace {

HodgeDiamond quintic_diamond() {
  return {{1, 0, 0, 1}, {0, 1, 101, 0}, {0, 101, 1, 0}, {1, 0, 0, 1}};
}

}  // namespace

TEST_CASE("alpha examples") {
  const auto ne = nodal_elliptic();
  CHECK(alpha(ne, 1, 0, Branch::Lower) == 0);
  CHECK(alpha(ne, 0, 1, Branch::Upper) == 0);

  std::map<long, DegreeData> deg;
  deg.emplace(1, DegreeData{HodgeDeligneTable(1, 1, {{{1, 1}, 1}, {{0, 1}, 1}}),
                            {{1, {RotationNumber(R("1/3"))}}, {0, {RotationNumber(R("2/3"))}}}});
  const LimitingMHS twisted(1, deg);
  CHECK(alpha(twisted, 1, 0, Branch::Lower) == R("1/3"));
  CHECK(alpha(twisted, 1, 0, Branch::Upper) == R("2/3"));

  std::map<long, DegreeData> deg2;
  deg2.emplace(2, DegreeData{HodgeDeligneTable(2, 2, {{{1, 2}, 2}}),
                             {{1, {RotationNumber(R("1/3")), RotationNumber()}}}});
  CHECK(alpha(LimitingMHS(2, deg2), 1, 1, Branch::Lower) == R("1/3"));

  for (long n : {2, 4, 6})
    for (long s : {1, 3}) {
      const auto m = odp(n, s);
      CHECK(alpha(m, n / 2, n / 2, Branch::Lower) == Rational(s, 2));
      CHECK(alpha(m, n / 2, n / 2, Branch::Upper) == Rational(s, 2));
    }
  CHECK_THROWS_AS(alpha(ne, 2, 1, Branch::Lower), MissingData);
}

TEST_CASE("beta examples") {
  const auto ne = nodal_elliptic();
  CHECK(beta(ne, 1, 0) == 1);
  CHECK(beta(ne, 0, 1) == -1);
  CHECK(beta(ne, 0, 0) == 0);
  CHECK(beta(ne, 1, 1) == 0);
  for (long n : {3, 5, 7})
    for (long s : {1, 2, 5}) {
      const auto m = odp(n, s);
      CHECK(beta(m, (n + 1) / 2, (n - 1) / 2) == s);
      CHECK(beta(m, (n - 1) / 2, (n + 1) / 2) == -s);
    }
  const auto p = pure(3, quintic_diamond());
  for (long k = 0; k <= 6; ++k)
    for (long a = 0; a <= k; ++a) {
      CHECK(beta(p, a, k - a) == 0);
      CHECK(alpha(p, a, k - a, Branch::Lower) == 0);
    }
  CHECK_THROWS_AS(beta(odp(3, 1), 1, 0), MissingData);
}

TEST_CASE("odp(3,1) gives the node count through rho's beta sum") {
  const auto m = odp(3, 1);
  // sum_{p+q=3} (-1)^{p+q} p beta^{p,q} with the sign flipped
  Rational s(0);
  for (long p = 0; p <= 3; ++p) s += Rational(p) * beta(m, p, 3 - p);
  CHECK(s == 1);
}

TEST_CASE("odp with a Hodge diamond") {
  const auto m = odp(3, 2, quintic_diamond());
  const auto& t = m.degree(3).table;
  CHECK(t.dim(2, 3) == 99);
  CHECK(t.dim(2, 4) == 2);
  CHECK(t.dim(1, 2) == 2);
  CHECK(t.dim(3, 3) == 1);
  CHECK(t.betti() == 204);
  CHECK(beta(m, 2, 1) == 2);
  CHECK(beta_symmetry_check(m).lefschetz);
  CHECK_THROWS_AS(odp(3, 200, quintic_diamond()), ValidationError);
  HodgeDiamond bad = quintic_diamond();
  bad[1][2] = 7;
  CHECK_THROWS_AS(odp(3, 1, bad), ValidationError);

  const HodgeDiamond k3 = {{1, 0, 1}, {0, 20, 0}, {1, 0, 1}};
  const auto e = odp(2, 4, k3);
  CHECK(alpha(e, 1, 1, Branch::Lower) == 2);
  CHECK(e.degree(2).rotations.at(1).size() == 20);
  CHECK(beta_symmetry_check(e).antisymmetry);
}

TEST_CASE("beta_symmetry_check") {
  auto rep = beta_symmetry_check(nodal_elliptic());
  CHECK(rep.antisymmetry);
  CHECK(rep.lefschetz);
  CHECK(rep.lefschetz_pairs_checked > 0);
  for (long n = 2; n <= 6; ++n) {
    const auto r = beta_symmetry_check(odp(n, 3));
    CHECK(r.antisymmetry);
    CHECK(r.lefschetz);
  }
  CHECK(beta_symmetry_check(pure(3, quintic_diamond())).failures.empty());

  // N would map (1,2) onto (0,0) but the weight 0 class is missing
  const std::map<HodgeDeligneTable::Key, long> broken{{{1, 2}, 1}};
  CHECK_THROWS_AS(HodgeDeligneTable(1, 1, broken), ValidationError);
  std::map<long, DegreeData> deg;
  deg.emplace(1, DegreeData{HodgeDeligneTable::unchecked(1, 1, broken), {}});
  const auto bad = beta_symmetry_check(LimitingMHS(1, deg));
  CHECK_FALSE(bad.antisymmetry);
  CHECK_FALSE(bad.failures.empty());
}

TEST_CASE("table validation") {
  try {
    HodgeDeligneTable(2, 2, {{{2, 2}, 1}});
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(e.path() == "/table/(2,2)");
  }
  CHECK_THROWS_AS(HodgeDeligneTable(1, 1, {{{0, 1}, -1}}), ValidationError);
  CHECK_THROWS_AS(HodgeDeligneTable(1, 1, {{{0, 1}, 1}, {{1, 1}, 1}}, 3), ValidationError);
  CHECK_NOTHROW(HodgeDeligneTable(1, 1, {{{0, 1}, 1}, {{1, 1}, 1}}, 2));
  CHECK_THROWS_AS(HodgeDeligneTable(3, 1, {}), ValidationError);

  std::map<long, DegreeData> deg;
  deg.emplace(1, DegreeData{HodgeDeligneTable(1, 1, {{{0, 1}, 1}, {{1, 1}, 1}}),
                            {{1, {RotationNumber(), RotationNumber()}}}});
  try {
    LimitingMHS(1, deg);
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(e.path() == "/degrees/1/rotations/1");
  }
}

TEST_CASE("hodge_expansion") {
  CHECK(hodge_expansion(nodal_elliptic(), 1, 0) == AsymptoticExpansion{R("0"), R("1")});
  CHECK(hodge_expansion(pure(3, quintic_diamond()), 2, 1) == AsymptoticExpansion{R("0"), R("0")});
  CHECK(hodge_expansion(odp(4, 1), 2, 2) == AsymptoticExpansion{R("1/2"), R("0")});
  CHECK(hodge_expansion(odp(2, 1), 1, 1) == AsymptoticExpansion{R("1/2"), R("0")});
}

TEST_CASE("random limiting MHS properties") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const long n = testing::uniform(rng, 1, 5);
    const bool unip = trial % 3 == 0;
    const auto m = testing::random_mhs(rng, n, unip);
    const auto rep = beta_symmetry_check(m);
    CHECK(rep.antisymmetry);
    const Rational ell(m.rotation_denominator());
    for (const auto& [k, data] : m.degrees())
      for (long p = 0; p <= k; ++p) {
        const auto e = hodge_expansion(m, p, k - p);
        CHECK((e.log_coeff * ell).is_integer());
        CHECK(e.loglog_coeff.is_integer());
        if (unip) CHECK(e.log_coeff == 0);
        // lower + upper = number of nontrivial rotations
        long nontrivial = 0;
        if (auto it = data.rotations.find(p); it != data.rotations.end())
          for (const auto& r : it->second) nontrivial += r.value().is_zero() ? 0 : 1;
        CHECK(alpha(m, p, k - p, Branch::Lower) + alpha(m, p, k - p, Branch::Upper) ==
              Rational(nontrivial));
      }
  }
}
