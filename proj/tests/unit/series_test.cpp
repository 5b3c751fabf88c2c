#include <doctest.h>

#include "schubert/series.hpp"
#include "support/oracles.hpp"
#include "support/seed.hpp"

using namespace schubert;
using testing::FreeAlgebra;

static_assert(GradedAlgebra<FreeAlgebra>);
static_assert(GradedAlgebra<UnivariateSeries>);

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(30) == Rational(Integer("8615841276005"), Integer("14322")));
}

TEST_CASE("todd log coefficients") {
  const ToddLogCoeffs& a = todd_log_coeffs(30);
  CHECK(a.degree() == 30);
  CHECK(a[1] == Rational(1, 2));
  CHECK(a[2] == Rational(-1, 24));
  for (int m = 3; m <= 30; m += 2) CHECK(a[m] == 0);
  // d/dx log(x / (1 - e^{-x})) = 1/x - 1/(e^x - 1), whose expansion gives
  // a_m = -B_m / (m * m!) for m >= 2.
  for (int m = 2; m <= 30; ++m) CHECK(a[m] == -bernoulli(m) / (Rational(m) * Rational(factorial(m))));
  CHECK(&todd_log_coeffs(30) == &a);
}

TEST_CASE("todd generating series") {
  const auto g = todd_generating_series(6);
  CHECK(g[0] == 1);
  CHECK(g[1] == Rational(1, 2));
  CHECK(g[2] == Rational(1, 12));
  CHECK(g[3] == 0);
  CHECK(g[4] == Rational(-1, 720));
  // x/(1-e^{-x}) = sum_k (-1)^k B_k x^k / k!
  for (int k = 0; k <= 6; ++k)
    CHECK(g[k] == (k % 2 == 0 ? 1 : -1) * bernoulli(k) / Rational(factorial(k)));
}

TEST_CASE("univariate series inverse") {
  const UnivariateSeries s(6);
  UnivariateSeries::Element a{Rational(2), Rational(1), Rational(0), Rational(-3), Rational(0),
                              Rational(1, 2), Rational(0)};
  CHECK(s.multiply(a, s.inverse(a)) == s.unit());
  CHECK_THROWS_AS(s.inverse(s.zero()), std::domain_error);
}

TEST_CASE("newton identities in a free algebra") {
  const FreeAlgebra alg({1, 2, 3, 4}, 4);
  const std::vector<FreeAlgebra::Element> e{alg.generator(0), alg.generator(1), alg.generator(2),
                                            alg.generator(3)};
  const auto p = power_sums_from_elementary<FreeAlgebra>(alg, e, 4);
  REQUIRE(p.size() == 4);
  const auto& e1 = e[0];
  const auto& e2 = e[1];
  const auto& e3 = e[2];
  CHECK(p[0] == e1);
  CHECK(p[1] == alg.add(alg.multiply(e1, e1), alg.scale(-2, e2)));
  CHECK(p[2] == alg.add(alg.add(alg.power(e1, 3), alg.scale(-3, alg.multiply(e1, e2))),
                        alg.scale(3, e3)));
  const auto back = elementary_from_power_sums<FreeAlgebra>(alg, p);
  for (int i = 0; i < 4; ++i) CHECK(back[i] == e[i]);

  const auto two = elementary_from_power_sums<FreeAlgebra>(alg, std::vector{alg.generator(0), alg.generator(1)});
  CHECK(two[0] == alg.generator(0));
  CHECK(two[1] == alg.scale(Rational(1, 2), alg.add(alg.multiply(alg.generator(0), alg.generator(0)),
                                                    alg.scale(-1, alg.generator(1)))));
}

TEST_CASE("newton identities respect the rank") {
  const FreeAlgebra alg({1, 2, 3}, 6);
  const std::vector<FreeAlgebra::Element> e{alg.generator(0), alg.generator(1), alg.generator(2)};
  const auto p2 = power_sums_from_elementary<FreeAlgebra>(alg, e, 2);
  const std::vector<FreeAlgebra::Element> truncated{alg.generator(0), alg.generator(1)};
  CHECK(p2 == power_sums_from_elementary<FreeAlgebra>(alg, truncated, 5));
}

TEST_CASE("newton round trip on random inputs") {
  auto rng = testing::rng("newton");
  for (int trial = 0; trial < 20; ++trial) {
    const int top = std::uniform_int_distribution<int>(1, 8)(rng);
    const FreeAlgebra alg({1, 1, 2}, top);
    std::vector<FreeAlgebra::Element> e;
    for (int i = 1; i <= top; ++i) e.push_back(alg.component(alg.random_element(rng, 6, i), i));
    const auto p = power_sums_from_elementary<FreeAlgebra>(alg, e, top);
    CHECK(elementary_from_power_sums<FreeAlgebra>(alg, p) == e);
  }
}

TEST_CASE("exp and log") {
  const FreeAlgebra alg({1, 2}, 3);
  CHECK(exp_graded(alg, alg.zero()) == alg.unit());
  const auto g = alg.generator(0);
  const auto expected = alg.add(
      alg.add(alg.add(alg.unit(), g), alg.scale(Rational(1, 2), alg.multiply(g, g))),
      alg.scale(Rational(1, 6), alg.power(g, 3)));
  CHECK(exp_graded(alg, g) == expected);
  CHECK_THROWS_AS(exp_graded(alg, alg.unit()), std::invalid_argument);
  CHECK_THROWS_AS(log_graded(alg, g), std::invalid_argument);
  CHECK_THROWS_AS(log_graded(alg, alg.scale(2, alg.unit())), std::invalid_argument);
}

TEST_CASE("exp agrees with the literal series and inverts log") {
  auto rng = testing::rng("exp-log");
  for (int trial = 0; trial < 30; ++trial) {
    const int top = std::uniform_int_distribution<int>(1, 10)(rng);
    const FreeAlgebra alg({1, 2, 3}, top);
    const auto x = alg.random_element(rng, 5, top);
    const auto ex = exp_graded(alg, x);
    CHECK(ex == alg.literal_exp(x));
    CHECK(log_graded(alg, ex) == x);
    if (top <= 8) {
      const auto y = alg.random_element(rng, 4, top);
      CHECK(exp_graded(alg, alg.add(x, y)) == alg.multiply(ex, exp_graded(alg, y)));
    }
  }
}

TEST_CASE("todd class of a line bundle") {
  // A single formal line bundle with first Chern class g: ch_m = g^m / m!.
  const int top = 8;
  const FreeAlgebra alg({1}, top);
  const auto g = alg.generator(0);
  const ToddLogCoeffs& a = todd_log_coeffs(top);
  FreeAlgebra::Element exponent = alg.zero();
  for (int m = 1; m <= top; ++m) exponent = alg.add(exponent, alg.scale(a[m], alg.power(g, m)));
  const auto td = exp_graded(alg, exponent);
  for (int m = 0; m <= top; ++m) {
    const Rational expected = (m % 2 == 0 ? 1 : -1) * bernoulli(m) / Rational(factorial(m));
    CHECK(alg.component(td, m) == alg.scale(expected, alg.power(g, m)));
  }
}
