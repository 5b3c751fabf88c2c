#include <doctest.h>

#include "schubert/linalg.hpp"
#include "schubert/numeric.hpp"
#include "support/oracles.hpp"
#include "support/seed.hpp"

using namespace schubert;

TEST_CASE("binomial and factorial") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(factorial(25) == Integer("15511210043330985984000000"));
}

TEST_CASE("rational text round trip") {
  CHECK(to_string(Rational(-1, 12)) == "-1/12");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("-5") == Rational(-5));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("fraction-free rank and determinant agree with plain elimination") {
  auto rng = testing::rng("linalg");
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = size(rng);
    MatrixX<Rational> m(k, k);
    std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) rows[i][j] = m(i, j) = Rational(num(rng), den(rng));
    CHECK(exact_determinant(m) == testing::gauss_determinant(rows));
    MatrixX<Integer> z(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) z(i, j) = num(rng);
    std::vector<std::vector<Rational>> zr(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) zr[i][j] = Rational(z(i, j));
    CHECK(exact_determinant(z) == numerator(testing::gauss_determinant(zr)));
    if (exact_determinant(z) != 0) CHECK(exact_rank(z) == k);
  }
}

TEST_CASE("rank of structured matrices") {
  MatrixX<Integer> zero = MatrixX<Integer>::Zero(3, 4);
  CHECK(exact_rank(zero) == 0);
  MatrixX<Integer> m(3, 3);
  m << 1, 2, 3, 2, 4, 6, 1, 1, 1;
  CHECK(exact_rank(m) == 2);
  CHECK(exact_determinant(m) == 0);
  MatrixX<Integer> wide(2, 3);
  wide << 1, 1, 0, 0, 1, 1;
  CHECK(exact_rank(wide) == 2);
}

TEST_CASE("reduced row echelon form") {
  MatrixX<Rational> m(3, 3);
  m << 2, 4, 6, 1, 2, 4, 3, 6, 9;
  const RowEchelon r = reduced_row_echelon(m);
  REQUIRE(r.rank() == 2);
  CHECK(r.pivots == std::vector<Eigen::Index>{0, 2});
  CHECK(r.rows(0, 0) == 1);
  CHECK(r.rows(0, 1) == 2);
  CHECK(r.rows(0, 2) == 0);
  CHECK(r.rows(1, 2) == 1);
}
