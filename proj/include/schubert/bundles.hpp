#pragma once

// Characteristic classes of the tautological bundles on G_d(n).
//
// Q is the rank n-d universal quotient with c_m(Q) = sigma_m, S the rank d
// universal subbundle, and the tangent bundle is S^dual (x) Q. Everything is
// expressed in the Schubert basis of CH(G_d(n))_Q; Chern roots never appear.
// `max_degree` arguments truncate the computation (default: t).

#include "schubert/chow.hpp"
#include "schubert/series.hpp"

#include <vector>

namespace schubert {

/// CH(G_d(n))_Q as a GradedAlgebra, truncated at `truncation` <= t.
class ChowAlgebra {
 public:
  using Element = ChowElement;

  explicit ChowAlgebra(ChowRingPtr ring, int truncation = -1);

  const ChowRingPtr& ring() const { return ring_; }
  int truncation() const { return truncation_; }
  Element zero() const { return ChowElement::zero(ring_); }
  Element unit() const { return ChowElement::unit(ring_); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element scale(const Rational& q, const Element& a) const { return q * a; }
  Element multiply(const Element& a, const Element& b) const;
  Element component(const Element& a, int k) const { return a.component(k); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  /// Drops every component above the truncation degree.
  Element truncate(const Element& a) const;

 private:
  ChowRingPtr ring_;
  int truncation_;
};

static_assert(GradedAlgebra<ChowAlgebra>);

struct BundleChern {
  int rank = 0;
  std::vector<ChowElement> classes;  // classes[i-1] = c_i

  /// c_i, with c_0 = 1 and c_i = 0 past the stored range.
  ChowElement c(int i) const;
  /// 1 + c_1 + c_2 + ...
  ChowElement total() const;
};

struct BundleCharacter {
  int rank = 0;
  std::vector<ChowElement> components;  // components[m-1] = ch_m

  /// ch_m for m >= 1; zero past the stored range.
  ChowElement ch(int m) const;
  /// rank + ch_1 + ch_2 + ...
  ChowElement total() const;
  /// p_m = m! ch_m for m = 1..stored range.
  std::vector<ChowElement> power_sums() const;
};

BundleChern chern_Q(const ChowRingPtr& ring);
BundleCharacter ch_Q(const ChowRingPtr& ring, int max_degree = -1);
BundleCharacter ch_S(const ChowRingPtr& ring, int max_degree = -1);
BundleCharacter ch_S_dual(const ChowRingPtr& ring, int max_degree = -1);

/// Coefficients of (1 + sigma_1 + ... + sigma_{n-d})^{-1} in degrees 1..t.
/// Degrees 1..d are c_i(S); the remaining ones vanish in CH.
std::vector<ChowElement> chern_S_inverse_series(const ChowRingPtr& ring);

/// c_i(S) recovered from ch(S) by the inverse Newton identities; the second,
/// independent route to the Chern classes of S.
BundleChern chern_S_from_character(const ChowRingPtr& ring);

BundleCharacter ch_tangent(const ChowRingPtr& ring, int max_degree = -1);
BundleChern chern_tangent(const ChowRingPtr& ring, int max_degree = -1);

/// td(T G_d(n)) = exp(sum_m a_m m! ch_m(T)), degrees 0..max_degree.
ChowElement todd_tangent(const ChowRingPtr& ring, int max_degree = -1);

}  // namespace schubert
