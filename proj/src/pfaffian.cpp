#include "schubert/pfaffian.hpp"

#include "schubert/cone.hpp"

namespace schubert {

PfaffianClassification classify_B(int m, int n) {
  if (m < 1 || n < 2 * m)
    throw std::invalid_argument("classify_B requires m >= 1 and n >= 2m");
  PfaffianClassification out;
  out.m = m;
  out.n = n;
  out.generators = binomial(n, 2 * m);
  out.height = binomial(n - 2 * m + 2, 2);
  out.dimension_deficit = out.height;
  out.is_complete_intersection = out.generators == out.height;
  out.is_roberts = n == 2 * m || m == 1;
  return out;
}

bool cross_check_B2(int n) {
  if (n < 4) throw std::invalid_argument("cross_check_B2 requires n >= 4");
  return classify_B(2, n).is_roberts ==
         roberts_verdict(GrassmannShape(2, n), ReportMode::VerdictOnly).verdict;
}

}  // namespace schubert
