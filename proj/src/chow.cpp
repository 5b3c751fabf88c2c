#include "schubert/chow.hpp"

#include <algorithm>
#include <numeric>

namespace schubert {

namespace {

void checked_add(std::int64_t& target, std::int64_t value) {
  if (__builtin_add_overflow(target, value, &target))
    throw std::overflow_error("Schubert structure constant exceeds 64 bits");
}

IntCombination to_combination(const std::map<std::uint32_t, std::int64_t>& acc) {
  IntCombination out;
  out.reserve(acc.size());
  for (const auto& [index, c] : acc)
    if (c != 0) out.emplace_back(index, c);
  return out;
}

// All mu in the box with n-d >= mu_1 >= lambda_1 >= mu_2 >= ... >= mu_d >= lambda_d
// and |mu| = |lambda| + m.
void interlacing(const Partition& lambda, int rows, int cols, int row, int budget,
                 std::vector<int>& mu, std::vector<Partition>& out) {
  if (row == rows) {
    if (budget == 0) out.emplace_back(mu);
    return;
  }
  const int low = lambda[row];
  const int high = row == 0 ? cols : lambda[row - 1];
  for (int part = low; part <= high && part - low <= budget; ++part) {
    mu[row] = part;
    interlacing(lambda, rows, cols, row + 1, budget - (part - low), mu, out);
  }
}

std::vector<Partition> pieri_partitions(const Partition& lambda, const GrassmannShape& shape,
                                        int m) {
  std::vector<Partition> out;
  std::vector<int> mu(shape.rows(), 0);
  interlacing(lambda, shape.rows(), shape.cols(), 0, m, mu, out);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ChowRing

ChowRingPtr ChowRing::create(const GrassmannShape& shape) {
  return ChowRingPtr(new ChowRing(shape));
}

ChowRing::~ChowRing() = default;

ChowRing::ChowRing(const GrassmannShape& shape) : shape_(shape) {
  const int t = shape.dimension();
  offsets_.push_back(0);
  for (int degree = 0; degree <= t; ++degree) {
    for (auto& lambda : enumerate_box(shape, degree)) {
      index_.emplace(lambda, basis_.size());
      basis_.push_back(std::move(lambda));
      degrees_.push_back(degree);
    }
    offsets_.push_back(basis_.size());
  }

  pieri_.resize(basis_.size() * shape.cols());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (int m = 1; m <= shape.cols(); ++m) {
      auto& image = pieri_[i * shape.cols() + (m - 1)];
      for (const auto& mu : pieri_partitions(basis_[i], shape, m))
        image.push_back(static_cast<std::uint32_t>(index_.at(mu)));
      std::sort(image.begin(), image.end());
    }
  }
}

std::optional<std::size_t> ChowRing::index_of(const Partition& lambda) const {
  const auto it = index_.find(lambda);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ChowRing::degree_size(int degree) const {
  if (degree < 0 || degree > shape_.dimension()) return 0;
  return offsets_[degree + 1] - offsets_[degree];
}

IntCombination ChowRing::apply_special(const IntCombination& x, int m) const {
  if (m == 0) return x;
  std::map<std::uint32_t, std::int64_t> acc;
  for (const auto& [index, c] : x)
    for (std::uint32_t out : pieri_image(index, m)) checked_add(acc[out], c);
  return to_combination(acc);
}

const IntCombination& ChowRing::basis_product(std::size_t i, std::size_t j) const {
  const std::uint64_t key = static_cast<std::uint64_t>(i) * basis_.size() + j;
  {
    std::shared_lock lock(memo_mutex_);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  // Computed without the lock: the recursion re-enters basis_product.
  IntCombination value = compute_product(i, j);
  std::unique_lock lock(memo_mutex_);
  return memo_.try_emplace(key, std::move(value)).first->second;
}

// {lambda} * {mu} through the first-column expansion of the Giambelli
// determinant: {mu} = sum_r (-1)^r sigma_{mu_r - r} {nu_r}, where nu_r drops
// row r of mu and adds one box to each earlier row. Classes that leave the
// box vanish in CH(G_d(n)).
IntCombination ChowRing::compute_product(std::size_t i, std::size_t j) const {
  const Partition& mu = basis_[j];
  const int k = static_cast<int>(mu.length());
  if (k == 0) return {{static_cast<std::uint32_t>(i), 1}};
  if (k == 1) {
    IntCombination out;
    for (std::uint32_t index : pieri_image(i, mu[0])) out.emplace_back(index, 1);
    return out;
  }

  std::map<std::uint32_t, std::int64_t> acc;
  for (int r = 0; r < k; ++r) {
    const int m = mu[r] - r;
    if (m < 0 || m > shape_.cols()) continue;
    std::vector<int> nu;
    nu.reserve(k - 1);
    for (int s = 0; s < r; ++s) nu.push_back(mu[s] + 1);
    for (int s = r + 1; s < k; ++s) nu.push_back(mu[s]);
    const auto nu_index = index_of(Partition(std::move(nu)));
    if (!nu_index) continue;
    const std::int64_t sign = (r % 2 == 0) ? 1 : -1;
    for (const auto& [index, c] : apply_special(basis_product(i, *nu_index), m))
      checked_add(acc[index], sign * c);
  }
  return to_combination(acc);
}

const HMatrixSet& ChowRing::h_matrices() const {
  std::call_once(h_once_, [this] { h_matrices_ = std::make_unique<HMatrixSet>(shared_from_this()); });
  return *h_matrices_;
}

// ---------------------------------------------------------------------------
// ChowElement

ChowElement ChowElement::unit(const ChowRingPtr& ring) {
  ChowElement e(ring);
  e.terms_.emplace(0, Rational(1));
  return e;
}

ChowElement ChowElement::schubert(const ChowRingPtr& ring, const Partition& lambda,
                                  const Rational& coeff) {
  const auto index = ring->index_of(lambda);
  if (!index)
    throw std::invalid_argument("partition " + lambda.to_string() + " does not fit the box");
  ChowElement e(ring);
  e.add_scaled(*index, coeff);
  return e;
}

ChowElement ChowElement::special(const ChowRingPtr& ring, int m) {
  if (m == 0) return unit(ring);
  if (m < 0 || m > ring->shape().cols()) return zero(ring);
  return schubert(ring, Partition{m});
}

void ChowElement::add_scaled(std::size_t index, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ChowElement::coeff(const Partition& lambda) const {
  const auto index = ring_->index_of(lambda);
  if (!index) return Rational(0);
  const auto it = terms_.find(*index);
  return it == terms_.end() ? Rational(0) : it->second;
}

ChowElement ChowElement::component(int degree) const {
  ChowElement out(ring_);
  if (degree < 0 || degree > shape().dimension()) return out;
  const auto first = terms_.lower_bound(ring_->degree_begin(degree));
  const auto last = terms_.lower_bound(ring_->degree_end(degree));
  out.terms_.insert(first, last);
  return out;
}

std::optional<int> ChowElement::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int low = ring_->degree(terms_.begin()->first);
  const int high = ring_->degree(terms_.rbegin()->first);
  if (low != high) return std::nullopt;
  return low;
}

VectorX<Rational> ChowElement::coordinates(int degree) const {
  const std::size_t begin = ring_->degree_begin(degree);
  VectorX<Rational> v = VectorX<Rational>::Zero(ring_->degree_size(degree));
  for (const auto& [index, c] : component(degree).terms_)
    v(static_cast<Eigen::Index>(index - begin)) = c;
  return v;
}

ChowElement ChowElement::from_coordinates(const ChowRingPtr& ring, int degree,
                                          const VectorX<Rational>& v) {
  ChowElement out(ring);
  const std::size_t begin = ring->degree_begin(degree);
  for (Eigen::Index k = 0; k < v.size(); ++k) out.add_scaled(begin + k, v(k));
  return out;
}

ChowElement ChowElement::from_terms(const ChowRingPtr& ring,
                                    std::map<std::size_t, Rational> terms) {
  std::erase_if(terms, [](const auto& term) { return term.second == 0; });
  ChowElement out(ring);
  out.terms_ = std::move(terms);
  return out;
}

ChowElement& ChowElement::operator+=(const ChowElement& other) {
  if (!(ring_->shape() == other.shape())) throw IncompatibleShapes();
  for (const auto& [index, c] : other.terms_) add_scaled(index, c);
  return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& other) {
  if (!(ring_->shape() == other.shape())) throw IncompatibleShapes();
  for (const auto& [index, c] : other.terms_) add_scaled(index, -c);
  return *this;
}

ChowElement& ChowElement::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, c] : terms_) c *= q;
  return *this;
}

bool operator==(const ChowElement& a, const ChowElement& b) {
  return a.shape() == b.shape() && a.terms_ == b.terms_;
}

ChowElement operator*(const ChowElement& a, const ChowElement& b) { return multiply(a, b); }

std::string ChowElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [index, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (magnitude != 1) out += schubert::to_string(magnitude) + "*";
    out += ring_->partition(index).to_string();
    first = false;
  }
  return out;
}

ChowElement unit(const ChowRingPtr& ring) { return ChowElement::unit(ring); }
ChowElement add(const ChowElement& a, const ChowElement& b) { return a + b; }
ChowElement scale(const Rational& q, const ChowElement& a) { return q * a; }

// ---------------------------------------------------------------------------
// Products

ChowElement pieri(const ChowElement& a, int m) {
  const auto& ring = a.ring();
  if (m < 1 || m > ring->shape().cols()) return ChowElement(ring);
  std::map<std::size_t, Rational> acc;
  for (const auto& [index, c] : a.terms())
    for (std::uint32_t image : ring->pieri_image(index, m)) acc[image] += c;
  return ChowElement::from_terms(ring, std::move(acc));
}

std::vector<SigmaMonomial> giambelli_expand(const Partition& lambda, const GrassmannShape& shape) {
  const int k = static_cast<int>(lambda.length());
  std::map<std::vector<int>, std::int64_t> merged;
  std::vector<int> column_of_row(k);
  std::iota(column_of_row.begin(), column_of_row.end(), 0);
  // Sum over permutations; the sign is tracked through next_permutation by
  // recomputing inversions, which is fine for the d <= 12 boxes in scope.
  do {
    std::vector<int> factors;
    bool vanishes = false;
    for (int row = 0; row < k && !vanishes; ++row) {
      const int index = lambda[row] + column_of_row[row] - row;
      if (index < 0 || index > shape.cols())
        vanishes = true;
      else if (index > 0)
        factors.push_back(index);
    }
    if (vanishes) continue;
    int inversions = 0;
    for (int x = 0; x < k; ++x)
      for (int y = x + 1; y < k; ++y)
        if (column_of_row[x] > column_of_row[y]) ++inversions;
    std::sort(factors.begin(), factors.end(), std::greater<>());
    merged[factors] += (inversions % 2 == 0) ? 1 : -1;
  } while (std::next_permutation(column_of_row.begin(), column_of_row.end()));

  std::vector<SigmaMonomial> out;
  for (auto& [factors, c] : merged)
    if (c != 0) out.push_back({factors, c});
  std::sort(out.begin(), out.end(), [](const SigmaMonomial& x, const SigmaMonomial& y) {
    if (x.factors.size() != y.factors.size()) return x.factors.size() > y.factors.size();
    return x.factors > y.factors;
  });
  return out;
}

ChowElement apply_monomial(const ChowElement& a, const SigmaMonomial& monomial) {
  ChowElement out = a;
  for (int m : monomial.factors) out = pieri(out, m);
  return Rational(monomial.coefficient) * out;
}

ChowElement multiply(const ChowElement& a, const ChowElement& b) {
  return multiply(a, b, a.shape().dimension());
}

ChowElement multiply(const ChowElement& a, const ChowElement& b, int max_degree) {
  if (!(a.shape() == b.shape())) throw IncompatibleShapes();
  const auto& ring = a.ring();
  const int t = std::min(max_degree, ring->shape().dimension());
  std::vector<Rational> acc(ring->size());
  std::vector<bool> touched(ring->size(), false);
  for (const auto& [i, ca] : a.terms()) {
    const int da = ring->degree(i);
    if (da > t) break;
    for (const auto& [j, cb] : b.terms()) {
      if (da + ring->degree(j) > t) break;  // terms are sorted by degree
      const Rational c = ca * cb;
      for (const auto& [k, structure] : ring->basis_product(i, j)) {
        acc[k] += c * structure;
        touched[k] = true;
      }
    }
  }
  std::map<std::size_t, Rational> terms;
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (touched[k] && acc[k] != 0) terms.emplace_hint(terms.end(), k, std::move(acc[k]));
  return ChowElement::from_terms(ring, std::move(terms));
}

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.weight() != lambda.weight() + mu.weight()) return Integer(0);
  const int rows = std::max<int>(1, static_cast<int>(lambda.length() + mu.length()));
  const int cols = std::max(1, lambda[0] + mu[0]);
  const GrassmannShape shape(rows, rows + cols);
  if (!fits_box(nu, shape)) return Integer(0);
  const auto ring = ChowRing::create(shape);
  const Rational c =
      multiply(ChowElement::schubert(ring, lambda), ChowElement::schubert(ring, mu)).coeff(nu);
  return numerator(c);
}

// ---------------------------------------------------------------------------
// Multiplication by h and reduction

HMatrixSet::HMatrixSet(const ChowRingPtr& ring) : shape_(ring->shape()) {
  const int t = shape_.dimension();
  for (int i = 0; i <= t; ++i) basis_sizes_.push_back(ring->degree_size(i));
  matrices_.resize(t + 1);
  for (int i = 1; i <= t; ++i) {
    HMatrix& h = matrices_[i];
    const auto rows = static_cast<Eigen::Index>(basis_sizes_[i]);
    const auto cols = static_cast<Eigen::Index>(basis_sizes_[i - 1]);
    h.map = MatrixX<Integer>::Zero(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c)
      for (std::uint32_t image : ring->pieri_image(ring->degree_begin(i - 1) + c, 1))
        h.map(static_cast<Eigen::Index>(image - ring->degree_begin(i)), c) = Integer(1);
    h.rank = exact_rank(h.map);

    // Echelon basis of the column space with pivots taken from the last
    // basis element backwards.
    const MatrixX<Integer> reversed = h.map.transpose().rowwise().reverse();
    RowEchelon echelon = reduced_row_echelon(reversed);
    echelon.rows = echelon.rows.rowwise().reverse().eval();
    for (auto& p : echelon.pivots) p = rows - 1 - p;
    if (echelon.rank() != h.rank)
      throw std::logic_error("echelon rank disagrees with fraction-free rank");
    h.column_space = std::move(echelon);
  }
}

std::size_t HMatrixSet::cokernel_dimension(int i) const {
  return basis_sizes_.at(i) - static_cast<std::size_t>(matrices_.at(i).rank);
}

HMatrixSet build_h_matrices(const ChowRingPtr& ring) { return HMatrixSet(ring); }

Reduction reduce_mod_h(const ChowElement& a, const HMatrixSet& hmats) {
  if (!(a.shape() == hmats.shape())) throw IncompatibleShapes();
  if (a.is_zero()) return {a, true};
  const auto degree = a.homogeneous_degree();
  if (!degree) throw std::invalid_argument("reduce_mod_h needs a homogeneous class");
  if (*degree == 0) throw std::invalid_argument("reduce_mod_h needs positive degree");
  const HMatrix& h = hmats.into_degree(*degree);
  const VectorX<Rational> v = a.coordinates(*degree);

  // Membership by rank: clear denominators, then compare rank([M | w]) to rank(M).
  Integer common(1);
  for (Eigen::Index k = 0; k < v.size(); ++k) common = lcm(common, denominator(v(k)));
  MatrixX<Integer> augmented(h.map.rows(), h.map.cols() + 1);
  augmented.leftCols(h.map.cols()) = h.map;
  for (Eigen::Index k = 0; k < v.size(); ++k)
    augmented(k, h.map.cols()) = numerator(v(k) * Rational(common));
  const bool in_image = exact_rank(augmented) == h.rank;

  VectorX<Rational> residual = v;
  const RowEchelon& basis = h.column_space;
  for (Eigen::Index r = 0; r < basis.rank(); ++r) {
    const Rational pivot_value = residual(basis.pivots[r]);
    if (pivot_value != 0) residual -= pivot_value * basis.rows.row(r).transpose();
  }
  ChowElement representative = ChowElement::from_coordinates(a.ring(), *degree, residual);
  if (in_image != representative.is_zero())
    throw std::logic_error("rank test and residual disagree in reduce_mod_h");
  return {std::move(representative), in_image};
}

Reduction reduce_mod_h(const ChowElement& a) { return reduce_mod_h(a, a.ring()->h_matrices()); }

}  // namespace schubert
