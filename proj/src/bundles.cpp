#include "schubert/bundles.hpp"

namespace schubert {

namespace {

int clamp_degree(const ChowRingPtr& ring, int max_degree) {
  const int t = ring->shape().dimension();
  if (max_degree < 0 || max_degree > t) return t;
  if (max_degree == 0) throw std::invalid_argument("bundle classes need max_degree >= 1");
  return max_degree;
}

BundleCharacter from_power_sums(int rank, std::vector<ChowElement> p) {
  BundleCharacter out{rank, {}};
  for (std::size_t m = 1; m <= p.size(); ++m)
    out.components.push_back(Rational(1) / Rational(factorial(static_cast<long>(m))) * p[m - 1]);
  return out;
}

}  // namespace

ChowAlgebra::ChowAlgebra(ChowRingPtr ring, int truncation)
    : ring_(std::move(ring)), truncation_(clamp_degree(ring_, truncation)) {}

ChowElement ChowAlgebra::multiply(const Element& a, const Element& b) const {
  return schubert::multiply(a, b, truncation_);
}

ChowElement ChowAlgebra::truncate(const Element& a) const {
  ChowElement out = zero();
  for (int k = 0; k <= truncation_; ++k) out += a.component(k);
  return out;
}

ChowElement BundleChern::c(int i) const {
  if (classes.empty()) throw std::logic_error("BundleChern without a ring");
  if (i == 0) return ChowElement::unit(classes.front().ring());
  if (i < 0 || i > static_cast<int>(classes.size())) return ChowElement::zero(classes.front().ring());
  return classes[i - 1];
}

ChowElement BundleChern::total() const {
  ChowElement out = c(0);
  for (const auto& ci : classes) out += ci;
  return out;
}

ChowElement BundleCharacter::ch(int m) const {
  if (components.empty()) throw std::logic_error("BundleCharacter without a ring");
  if (m < 1 || m > static_cast<int>(components.size()))
    return ChowElement::zero(components.front().ring());
  return components[m - 1];
}

ChowElement BundleCharacter::total() const {
  ChowElement out = Rational(rank) * ChowElement::unit(components.front().ring());
  for (const auto& chm : components) out += chm;
  return out;
}

std::vector<ChowElement> BundleCharacter::power_sums() const {
  std::vector<ChowElement> p;
  for (std::size_t m = 1; m <= components.size(); ++m)
    p.push_back(Rational(factorial(static_cast<long>(m))) * components[m - 1]);
  return p;
}

BundleChern chern_Q(const ChowRingPtr& ring) {
  BundleChern out{ring->shape().cols(), {}};
  for (int m = 1; m <= out.rank; ++m) out.classes.push_back(ChowElement::special(ring, m));
  return out;
}

BundleCharacter ch_Q(const ChowRingPtr& ring, int max_degree) {
  const ChowAlgebra alg(ring, max_degree);
  const BundleChern c = chern_Q(ring);
  return from_power_sums(c.rank,
                         power_sums_from_elementary(alg, std::span<const ChowElement>(c.classes), c.rank));
}

BundleCharacter ch_S(const ChowRingPtr& ring, int max_degree) {
  BundleCharacter out = ch_Q(ring, max_degree);
  out.rank = ring->shape().d();
  for (auto& chm : out.components) chm = -chm;
  return out;
}

BundleCharacter ch_S_dual(const ChowRingPtr& ring, int max_degree) {
  BundleCharacter out = ch_S(ring, max_degree);
  for (std::size_t m = 1; m <= out.components.size(); m += 2) out.components[m - 1] = -out.components[m - 1];
  return out;
}

std::vector<ChowElement> chern_S_inverse_series(const ChowRingPtr& ring) {
  const int t = ring->shape().dimension();
  const int cols = ring->shape().cols();
  std::vector<ChowElement> s{ChowElement::unit(ring)};
  for (int k = 1; k <= t; ++k) {
    ChowElement sk = ChowElement::zero(ring);
    for (int i = 1; i <= std::min(k, cols); ++i) sk -= pieri(s[k - i], i);
    s.push_back(std::move(sk));
  }
  s.erase(s.begin());
  return s;
}

BundleChern chern_S_from_character(const ChowRingPtr& ring) {
  const ChowAlgebra alg(ring);
  const std::vector<ChowElement> p = ch_S(ring).power_sums();
  std::vector<ChowElement> e = elementary_from_power_sums(alg, std::span<const ChowElement>(p));
  const int d = ring->shape().d();
  e.resize(d, ChowElement::zero(ring));
  return BundleChern{d, std::move(e)};
}

BundleCharacter ch_tangent(const ChowRingPtr& ring, int max_degree) {
  const ChowAlgebra alg(ring, max_degree);
  const ChowElement total =
      alg.multiply(ch_S_dual(ring, alg.truncation()).total(), ch_Q(ring, alg.truncation()).total());
  BundleCharacter out{ring->shape().dimension(), {}};
  for (int m = 1; m <= alg.truncation(); ++m) out.components.push_back(total.component(m));
  return out;
}

BundleChern chern_tangent(const ChowRingPtr& ring, int max_degree) {
  const ChowAlgebra alg(ring, max_degree);
  const std::vector<ChowElement> p = ch_tangent(ring, alg.truncation()).power_sums();
  return BundleChern{ring->shape().dimension(),
                     elementary_from_power_sums(alg, std::span<const ChowElement>(p))};
}

ChowElement todd_tangent(const ChowRingPtr& ring, int max_degree) {
  const ChowAlgebra alg(ring, max_degree);
  const ToddLogCoeffs& a = todd_log_coeffs(alg.truncation());
  const std::vector<ChowElement> p = ch_tangent(ring, alg.truncation()).power_sums();
  ChowElement exponent = alg.zero();
  for (int m = 1; m <= alg.truncation(); ++m)
    if (a[m] != 0) exponent += a[m] * p[m - 1];
  return exp_graded(alg, exponent);
}

}  // namespace schubert
