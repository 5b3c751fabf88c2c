#include <doctest.h>

#include "schubert/cone.hpp"
#include "schubert/pfaffian.hpp"
#include "support/oracles.hpp"
#include "support/seed.hpp"

using namespace schubert;

namespace {

MatrixX<Rational> to_matrix(const std::vector<std::vector<Rational>>& z) {
  const auto k = static_cast<Eigen::Index>(z.size());
  MatrixX<Rational> m(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) m(i, j) = z[i][j];
  return m;
}

}  // namespace

TEST_CASE("antisymmetric validation") {
  MatrixX<Rational> m(3, 3);
  m << 0, 1, 2, -1, 0, 3, -2, -3, 0;
  CHECK_NOTHROW(AntisymmetricMatrix<Rational>{m});
  m(2, 1) = 3;
  try {
    AntisymmetricMatrix<Rational> bad(m);
    FAIL("expected NotAntisymmetric");
  } catch (const NotAntisymmetric& e) {
    CHECK(e.row() == 2);
    CHECK(e.col() == 3);
    CHECK(std::string(e.what()).find("(2,3)") != std::string::npos);
  }
  MatrixX<Rational> diag = MatrixX<Rational>::Zero(2, 2);
  diag(1, 1) = 1;
  CHECK_THROWS_AS(AntisymmetricMatrix<Rational>{diag}, NotAntisymmetric);
  CHECK_THROWS_AS(AntisymmetricMatrix<Rational>(MatrixX<Rational>::Zero(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("pfaffian examples") {
  MatrixX<Rational> two(2, 2);
  two << 0, Rational(7, 2), Rational(-7, 2), 0;
  CHECK(pfaffian(AntisymmetricMatrix<Rational>(two)) == Rational(7, 2));
  CHECK(pfaffian(AntisymmetricMatrix<Rational>(MatrixX<Rational>(0, 0))) == 1);

  const Rational z12(3), z13(-1, 2), z14(5), z23(2, 3), z24(-4), z34(7, 5);
  MatrixX<Rational> four(4, 4);
  four << 0, z12, z13, z14, -z12, 0, z23, z24, -z13, -z23, 0, z34, -z14, -z24, -z34, 0;
  CHECK(pfaffian(AntisymmetricMatrix<Rational>(four)) == z12 * z34 - z13 * z24 + z14 * z23);

  MatrixX<Integer> ints(4, 4);
  ints << 0, 1, 2, 3, -1, 0, 4, 5, -2, -4, 0, 6, -3, -5, -6, 0;
  CHECK(pfaffian(AntisymmetricMatrix<Integer>(ints)) == 1 * 6 - 2 * 5 + 3 * 4);
}

TEST_CASE("pfaffian properties") {
  auto rng = testing::rng("pfaffian");
  for (int k = 1; k <= 7; ++k)
    for (int trial = 0; trial < 20; ++trial) {
      const auto z = testing::random_antisymmetric(rng, k);
      const AntisymmetricMatrix<Rational> a(to_matrix(z));
      const Rational pf = pfaffian(a);
      if (k % 2 == 1) CHECK(pf == 0);
      CHECK(pf * pf == testing::gauss_determinant(z));
      if (k <= 6) CHECK(pf == testing::permutation_pfaffian(z));
    }
  for (int trial = 0; trial < 20; ++trial) {
    auto z = testing::random_antisymmetric(rng, 6);
    const Rational before = pfaffian(AntisymmetricMatrix<Rational>(to_matrix(z)));
    const int i = std::uniform_int_distribution<int>(0, 5)(rng);
    const Rational c(std::uniform_int_distribution<int>(-9, 9)(rng), 4);
    for (int j = 0; j < 6; ++j) {
      z[i][j] *= c;
      z[j][i] *= c;
    }
    CHECK(pfaffian(AntisymmetricMatrix<Rational>(to_matrix(z))) == c * before);
  }
}

TEST_CASE("classify_B") {
  const auto b24 = classify_B(2, 4);
  CHECK(b24.generators == 1);
  CHECK(b24.height == 1);
  CHECK(b24.is_complete_intersection);
  CHECK(b24.is_roberts);
  const auto b25 = classify_B(2, 5);
  CHECK(b25.generators == 5);
  CHECK(b25.height == 3);
  CHECK_FALSE(b25.is_complete_intersection);
  CHECK_FALSE(b25.is_roberts);
  const auto b15 = classify_B(1, 5);
  CHECK(b15.generators == 10);
  CHECK(b15.height == 10);
  CHECK(b15.is_complete_intersection);
  CHECK(b15.is_roberts);
  for (int m = 1; m <= 6; ++m) CHECK(classify_B(m, 2 * m).is_complete_intersection);
  for (int m = 1; m <= 5; ++m)
    for (int n = 2 * m; n <= 12; ++n) {
      const auto c = classify_B(m, n);
      CHECK(c.height == (n - 2 * m + 1) * (n - 2 * m + 2) / 2);
      CHECK(c.dimension_deficit == c.height);
      CHECK(c.is_complete_intersection == (c.generators == c.height));
      CHECK(c.is_roberts == (n == 2 * m || m == 1));
      CHECK(c.is_roberts == c.is_complete_intersection);
    }
  CHECK_THROWS_AS(classify_B(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(classify_B(3, 5), std::invalid_argument);
}

TEST_CASE("B_2 agrees with the cone verdict") {
  for (int n = 4; n <= 9; ++n) CHECK(cross_check_B2(n));
  for (int n = 4; n <= 9; ++n)
    CHECK(classify_B(2, n).generators == plucker_relation_count(GrassmannShape(2, n)));
  CHECK_THROWS_AS(cross_check_B2(3), std::invalid_argument);
}
