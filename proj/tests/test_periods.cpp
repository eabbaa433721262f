#include <doctest.h>

#include <boost/math/special_functions/ellint_1.hpp>
#include <cmath>
#include <random>
#include <sstream>

#include "degen/error.hpp"
#include "degen/periods/periods.hpp"

using namespace degen;
using namespace degen::periods;

TEST_CASE("agm") {
  CHECK(agm(1, 2) == doctest::Approx(1.4567910310469068).epsilon(1e-15));
  for (double x : {1e-6, 0.3, 1.0, 7.5}) CHECK(agm(x, x) == x);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 10);
  for (int i = 0; i < 100; ++i) {
    const double a = u(rng), b = u(rng);
    CHECK(agm(a, b) == doctest::Approx(agm((a + b) / 2, std::sqrt(a * b))).epsilon(1e-14));
    CHECK(agm(a, b) == doctest::Approx(agm(b, a)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(agm(0, 1), PreconditionError);
  CHECK_THROWS_AS(agm(1, -1), PreconditionError);
}

TEST_CASE("elliptic K against Boost") {
  for (double k = 0; k < 0.9999; k += 0.0137)
    CHECK(elliptic_k(k) == doctest::Approx(boost::math::ellint_1(k)).epsilon(1e-13));
  CHECK(elliptic_k(0) == doctest::Approx(M_PI / 2).epsilon(1e-15));
}

TEST_CASE("legendre norm") {
  // 4 K(m = 1/4) K(m = 3/4), 30-digit reference
  CHECK(legendre_norm(0.25) == doctest::Approx(14.541388071725755).epsilon(1e-13));
  CHECK(legendre_norm(0.25) > 0);
  CHECK_THROWS_AS(legendre_norm(0), PreconditionError);
  CHECK_THROWS_AS(legendre_norm(0.5), PreconditionError);
  // grows like log(1/lambda): pi log(16/lambda) + o(1)
  for (double l : {1e-6, 1e-8, 1e-10})
    CHECK(legendre_norm(l) == doctest::Approx(M_PI * std::log(16 / l)).epsilon(1e-4));
  // nome: q = lambda/16 + O(lambda^2)
  CHECK(nome(1e-8) == doctest::Approx(1e-8 / 16).epsilon(1e-6));
}

TEST_CASE("fit recovers its own model") {
  std::vector<NormSample> s;
  for (int i = 0; i <= 40; ++i) {
    const double t = std::pow(10.0, -8 + 5.0 * i / 40);
    s.push_back({t, 0.5 * std::log(t * t) + 2 * std::log(-std::log(t)) + 3});
  }
  const auto f = fit_asymptotics(s);
  CHECK(std::abs(f.alpha_hat - 0.5) < 1e-9);
  CHECK(std::abs(f.beta_hat - 2) < 1e-9);
  CHECK(std::abs(f.const_hat - 3) < 1e-9);
  CHECK(f.residual < 1e-9);

  for (auto& x : s) x.value = 7;
  const auto c = fit_asymptotics(s);
  CHECK(std::abs(c.alpha_hat) < 1e-9);
  CHECK(std::abs(c.beta_hat) < 1e-9);
  CHECK(std::abs(c.const_hat - 7) < 1e-9);
}

TEST_CASE("fit preconditions") {
  std::vector<NormSample> few(5, {0.1, 1});
  CHECK_THROWS_AS(fit_asymptotics(few), PreconditionError);
  std::vector<NormSample> narrow;
  for (int i = 0; i < 10; ++i) narrow.push_back({0.01 + 0.001 * i, 1});
  CHECK_THROWS_AS(fit_asymptotics(narrow), PreconditionError);
  std::vector<NormSample> same(10, {1e-5, 1});
  same[0].t = 1e-9;
  for (int i = 1; i < 10; ++i) same[static_cast<std::size_t>(i)].t = 1e-5;
  CHECK_THROWS_AS(fit_asymptotics(same), Error);
}

TEST_CASE("Legendre fit in the nome coordinate") {
  const auto f = fit_asymptotics(legendre_samples(1e-8, 1e-3, 60));
  CHECK(std::abs(f.alpha_hat) <= 0.02);
  CHECK(std::abs(f.beta_hat - 1) <= 0.1);
  // the lambda coordinate carries an O(1/log) remainder the fit cannot absorb
  const auto g = fit_asymptotics(legendre_samples(1e-8, 1e-3, 60, Coordinate::Lambda));
  CHECK(std::abs(g.beta_hat - 1) > std::abs(f.beta_hat - 1));
}

TEST_CASE("csv ingestion") {
  std::istringstream in("t,value\n0.1,2.5\n\n1e-3, -4\n");
  const auto s = read_csv(in);
  REQUIRE(s.size() == 2);
  CHECK(s[1].t == 1e-3);
  CHECK(s[1].value == -4);
  std::istringstream bad("0.1,2\nx,y\n");
  CHECK_THROWS_AS(read_csv(bad), ValidationError);
}
