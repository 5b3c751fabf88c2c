#include "schubert/series.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace schubert {

Rational bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli: k must be nonnegative");
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= k; ++m) {
    Rational sum(0);
    for (int j = 0; j < m; ++j) sum += Rational(binomial(m + 1, j)) * b[j];
    b.push_back(-sum / Rational(m + 1));
  }
  return b[k];
}

UnivariateSeries::Element UnivariateSeries::add(const Element& a, const Element& b) const {
  Element out(degree_ + 1);
  for (int k = 0; k <= degree_; ++k) out[k] = a[k] + b[k];
  return out;
}

UnivariateSeries::Element UnivariateSeries::scale(const Rational& q, const Element& a) const {
  Element out(degree_ + 1);
  for (int k = 0; k <= degree_; ++k) out[k] = q * a[k];
  return out;
}

UnivariateSeries::Element UnivariateSeries::multiply(const Element& a, const Element& b) const {
  Element out(degree_ + 1);
  for (int i = 0; i <= degree_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= degree_; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

UnivariateSeries::Element UnivariateSeries::component(const Element& a, int k) const {
  Element out(degree_ + 1);
  if (k >= 0 && k <= degree_) out[k] = a[k];
  return out;
}

bool UnivariateSeries::is_zero(const Element& a) const {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

UnivariateSeries::Element UnivariateSeries::inverse(const Element& a) const {
  if (a[0] == 0) throw std::domain_error("series inverse needs a nonzero constant term");
  Element out(degree_ + 1);
  out[0] = Rational(1) / a[0];
  for (int n = 1; n <= degree_; ++n) {
    Rational sum(0);
    for (int k = 1; k <= n; ++k) sum += a[k] * out[n - k];
    out[n] = -sum / a[0];
  }
  return out;
}

std::vector<Rational> todd_generating_series(int degree) {
  // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
  const UnivariateSeries series(degree);
  auto denominator = series.zero();
  for (int k = 0; k <= degree; ++k) {
    denominator[k] = Rational(1) / Rational(factorial(k + 1));
    if (k % 2 == 1) denominator[k] = -denominator[k];
  }
  return series.inverse(denominator);
}

const ToddLogCoeffs& todd_log_coeffs(int degree) {
  if (degree < 1) throw std::invalid_argument("todd_log_coeffs: degree must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ToddLogCoeffs>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[degree];
  if (!slot) {
    const UnivariateSeries series(degree);
    slot = std::make_unique<ToddLogCoeffs>(
        ToddLogCoeffs{log_graded(series, todd_generating_series(degree))});
  }
  return *slot;
}

}  // namespace schubert
