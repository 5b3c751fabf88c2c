#pragma once

// Truncated power-series combinators over a commutative graded Q-algebra.
//
// The algebra is supplied as a context object satisfying GradedAlgebra; all
// routines only add, scale, multiply and take graded components, so the same
// code runs over CH(G_d(n)) and over the free test algebras.

#include "schubert/numeric.hpp"

#include <algorithm>
#include <concepts>
#include <span>
#include <stdexcept>
#include <vector>

namespace schubert {

template <typename A>
concept GradedAlgebra = requires(const A& alg, const typename A::Element& x, const Rational& q,
                                 int k) {
  typename A::Element;
  { alg.truncation() } -> std::convertible_to<int>;
  { alg.zero() } -> std::same_as<typename A::Element>;
  { alg.unit() } -> std::same_as<typename A::Element>;
  { alg.add(x, x) } -> std::same_as<typename A::Element>;
  { alg.scale(q, x) } -> std::same_as<typename A::Element>;
  { alg.multiply(x, x) } -> std::same_as<typename A::Element>;
  { alg.component(x, k) } -> std::same_as<typename A::Element>;
  { alg.is_zero(x) } -> std::convertible_to<bool>;
};

/// B_k with B_1 = -1/2, from sum_{j<=k} binom(k+1, j) B_j = 0.
Rational bernoulli(int k);

/// a_1..a_D with log(x / (1 - e^{-x})) = sum_m a_m x^m, so that
/// td(E) = exp(sum_m a_m p_m(E)) where p_m = m! ch_m(E).
struct ToddLogCoeffs {
  std::vector<Rational> a;  // a[0] unused (zero)
  const Rational& operator[](int m) const { return a.at(m); }
  int degree() const { return static_cast<int>(a.size()) - 1; }
};

/// Cached per truncation degree.
const ToddLogCoeffs& todd_log_coeffs(int degree);

/// Coefficients of x / (1 - e^{-x}) through x^degree by exact series division.
std::vector<Rational> todd_generating_series(int degree);

/// Newton's identities: p_m = e_1 p_{m-1} - e_2 p_{m-2} + ... + (-1)^{m-1} m e_m.
/// `e[i-1]` holds e_i; e_i is taken as zero beyond `rank` and beyond e.size().
/// Returns p_1..p_D with D the algebra's truncation.
template <GradedAlgebra A>
std::vector<typename A::Element> power_sums_from_elementary(
    const A& alg, std::span<const typename A::Element> e, int rank) {
  using Element = typename A::Element;
  const int top = alg.truncation();
  const int available = std::min<int>(rank, static_cast<int>(e.size()));
  std::vector<Element> p;
  p.reserve(top);
  for (int m = 1; m <= top; ++m) {
    Element pm = alg.zero();
    for (int i = 1; i < m && i <= available; ++i) {
      const Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
      pm = alg.add(pm, alg.scale(sign, alg.multiply(e[i - 1], p[m - i - 1])));
    }
    if (m <= available) {
      const Rational sign = (m % 2 == 1) ? Rational(m) : Rational(-m);
      pm = alg.add(pm, alg.scale(sign, e[m - 1]));
    }
    p.push_back(std::move(pm));
  }
  return p;
}

/// Inverse of power_sums_from_elementary: m e_m = sum_{i=1}^m (-1)^{i-1} e_{m-i} p_i.
/// `p[i-1]` holds p_i. Returns e_1..e_D.
template <GradedAlgebra A>
std::vector<typename A::Element> elementary_from_power_sums(
    const A& alg, std::span<const typename A::Element> p) {
  using Element = typename A::Element;
  const int top = alg.truncation();
  std::vector<Element> e;  // e[k-1] = e_k
  e.reserve(top);
  auto e_at = [&](int k) -> Element { return k == 0 ? alg.unit() : e[k - 1]; };
  for (int m = 1; m <= top; ++m) {
    Element sum = alg.zero();
    for (int i = 1; i <= m && i <= static_cast<int>(p.size()); ++i) {
      const Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
      sum = alg.add(sum, alg.scale(sign, alg.multiply(e_at(m - i), p[i - 1])));
    }
    e.push_back(alg.scale(Rational(1, m), sum));
  }
  return e;
}

/// exp(x) = sum_k x^k / k! truncated at D, for x without constant term.
/// Evaluated through the Euler-derivation recursion n E_n = sum_k k X_k E_{n-k},
/// which needs only products of graded components.
template <GradedAlgebra A>
typename A::Element exp_graded(const A& alg, const typename A::Element& x) {
  using Element = typename A::Element;
  if (!alg.is_zero(alg.component(x, 0)))
    throw std::invalid_argument("exp_graded: argument has a nonzero constant term");
  const int top = alg.truncation();
  std::vector<Element> parts;
  std::vector<Element> result{alg.unit()};
  for (int k = 0; k <= top; ++k) parts.push_back(alg.component(x, k));
  Element total = alg.unit();
  for (int n = 1; n <= top; ++n) {
    Element en = alg.zero();
    for (int k = 1; k <= n; ++k) {
      if (alg.is_zero(parts[k]) || alg.is_zero(result[n - k])) continue;
      en = alg.add(en, alg.scale(Rational(k), alg.multiply(parts[k], result[n - k])));
    }
    en = alg.scale(Rational(1, n), en);
    total = alg.add(total, en);
    result.push_back(std::move(en));
  }
  return total;
}

/// log(u) = sum_k (-1)^{k-1} (u-1)^k / k truncated at D, for u with constant
/// term one. Uses n L_n = n U_n - sum_{k<n} k L_k U_{n-k}.
template <GradedAlgebra A>
typename A::Element log_graded(const A& alg, const typename A::Element& u) {
  using Element = typename A::Element;
  if (!alg.is_zero(alg.add(alg.component(u, 0), alg.scale(Rational(-1), alg.unit()))))
    throw std::invalid_argument("log_graded: argument must have constant term 1");
  const int top = alg.truncation();
  std::vector<Element> parts;
  for (int k = 0; k <= top; ++k) parts.push_back(alg.component(u, k));
  std::vector<Element> result{alg.zero()};
  Element total = alg.zero();
  for (int n = 1; n <= top; ++n) {
    Element ln = alg.scale(Rational(n), parts[n]);
    for (int k = 1; k < n; ++k) {
      if (alg.is_zero(result[k]) || alg.is_zero(parts[n - k])) continue;
      ln = alg.add(ln, alg.scale(Rational(-k), alg.multiply(result[k], parts[n - k])));
    }
    ln = alg.scale(Rational(1, n), ln);
    total = alg.add(total, ln);
    result.push_back(std::move(ln));
  }
  return total;
}

/// Q[[x]] truncated at x^degree, graded by the power of x.
class UnivariateSeries {
 public:
  using Element = std::vector<Rational>;

  explicit UnivariateSeries(int degree) : degree_(degree) {}

  int truncation() const { return degree_; }
  Element zero() const { return Element(degree_ + 1); }
  Element unit() const {
    Element e = zero();
    e[0] = 1;
    return e;
  }
  Element add(const Element& a, const Element& b) const;
  Element scale(const Rational& q, const Element& a) const;
  Element multiply(const Element& a, const Element& b) const;
  Element component(const Element& a, int k) const;
  bool is_zero(const Element& a) const;
  /// 1 / a; throws std::domain_error if a has zero constant term.
  Element inverse(const Element& a) const;

 private:
  int degree_;
};

}  // namespace schubert
