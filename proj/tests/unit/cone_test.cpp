#include <doctest.h>

#include "schubert/cone.hpp"

using namespace schubert;

namespace {

bool expected_roberts(int d, int n) {
  return d == 1 || d == n - 1 || (d == 2 && n == 4) || (d == 3 && n == 6);
}

}  // namespace

TEST_CASE("cone chow dimensions") {
  CHECK(cone_chow_dims(GrassmannShape(1, 2)).dims == std::vector<std::size_t>{0, 0, 1});
  CHECK(cone_chow_dims(GrassmannShape(2, 4)).dims == std::vector<std::size_t>{0, 0, 0, 1, 0, 1});
  for (int n = 2; n <= 10; ++n)
    for (int d = 1; d < n; ++d) {
      const GrassmannShape shape(d, n);
      const int t = shape.dimension();
      const auto dims = cone_chow_dims(shape).dims;
      REQUIRE(static_cast<int>(dims.size()) == t + 2);
      CHECK(dims[0] == 0);
      CHECK(dims[t] == 0);
      CHECK(dims[t + 1] == 1);
      const auto ring = ChowRing::create(shape);
      std::size_t total = 0, ranks = 0;
      for (std::size_t x : dims) total += x;
      for (int i = 1; i <= t; ++i) ranks += ring->h_matrices().into_degree(i).rank;
      // Everything except the point class of CH^0 is counted once.
      CHECK(Integer(total - 1 + ranks + 1) == binomial(n, d));
    }
}

TEST_CASE("tau examples") {
  const RobertsReport g25 = tau_components(GrassmannShape(2, 5));
  REQUIRE(g25.records.size() == 6);
  CHECK(g25.cone_dimension == 7);
  CHECK(g25.records[1].degree == 2);
  CHECK(g25.records[1].homological_index == 5);
  CHECK_FALSE(g25.records[1].is_zero);
  CHECK(g25.records[1].representative.to_string() == "-1/12*[2]");
  CHECK(g25.witness == 2);
  CHECK_FALSE(g25.verdict);

  const RobertsReport g36 = tau_components(GrassmannShape(3, 6));
  CHECK(g36.records[1].is_zero);
  CHECK(g36.verdict);
  CHECK_FALSE(g36.witness.has_value());

  const RobertsReport g48 = tau_components(GrassmannShape(4, 8));
  CHECK(g48.records[1].is_zero);
  CHECK_FALSE(g48.records[3].is_zero);
  const auto ring = g48.records[3].representative.ring();
  const auto s2 = ChowElement::special(ring, 2);
  CHECK(g48.records[3].representative ==
        reduce_mod_h(Rational(-1, 120) * (s2 * s2)).representative);
  CHECK(g48.witness == 4);
}

TEST_CASE("roberts verdicts") {
  CHECK(roberts_verdict(GrassmannShape(1, 5)).verdict);
  CHECK(roberts_verdict(GrassmannShape(3, 6)).verdict);
  const auto g25 = roberts_verdict(GrassmannShape(2, 5));
  CHECK_FALSE(g25.verdict);
  CHECK(g25.witness == 2);
  CHECK(g25.complete);
  const auto g48 = roberts_verdict(GrassmannShape(4, 8));
  CHECK_FALSE(g48.verdict);
  CHECK(g48.witness == 4);
  const auto quick = roberts_verdict(GrassmannShape(2, 7), ReportMode::VerdictOnly);
  CHECK_FALSE(quick.verdict);
  CHECK_FALSE(quick.complete);
  CHECK(quick.witness == 2);
}

TEST_CASE("verdict grid, duality and parity") {
  for (int n = 2; n <= 10; ++n)
    for (int d = 1; d < n; ++d) {
      CAPTURE(d);
      CAPTURE(n);
      const RobertsReport full = roberts_verdict(GrassmannShape(d, n));
      CHECK(full.complete);
      CHECK(full.verdict == expected_roberts(d, n));
      CHECK(full.records.front().is_zero);
      CHECK(gorenstein_parity_check(full));
      for (const auto& r : full.records) {
        CHECK(r.homological_index == full.shape.dimension() + 1 - r.degree);
        CHECK(r.is_zero == r.representative.is_zero());
        if (r.degree % 2 == 1) CHECK(r.is_zero);
      }
      if (d >= 2 && d <= n - 2 && n != 2 * d) {
        CHECK_FALSE(full.records[1].is_zero);
        CHECK(full.witness == 2);
      }
      const RobertsReport quick = roberts_verdict(GrassmannShape(d, n), ReportMode::VerdictOnly);
      CHECK(quick.verdict == full.verdict);
      CHECK(roberts_verdict(GrassmannShape(n - d, n), ReportMode::VerdictOnly).verdict ==
            full.verdict);
    }
  CHECK(gorenstein_parity_check(GrassmannShape(3, 7)));
  CHECK(gorenstein_parity_check(GrassmannShape(1, 6)));
}

TEST_CASE("verdict table") {
  const auto table = verdict_table(6, 3);
  REQUIRE(table.size() == 15);
  std::size_t i = 0;
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d < n; ++d, ++i) {
      CHECK(table[i].shape.d() == d);
      CHECK(table[i].shape.n() == n);
      CHECK(table[i].roberts == expected_roberts(d, n));
    }
  const auto single = verdict_table(2, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].roberts);
  const auto serial = verdict_table(8, 1);
  const auto parallel = verdict_table(8, 8);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].shape.d() == parallel[k].shape.d());
    CHECK(serial[k].roberts == parallel[k].roberts);
    CHECK(serial[k].witness == parallel[k].witness);
  }
  CHECK_THROWS_AS(verdict_table(1), std::invalid_argument);
}
