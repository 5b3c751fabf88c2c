#pragma once

// The rational Chow ring of G_d(n) in the Schubert basis.
//
// A ChowRing owns everything that depends only on the shape: the ordered
// basis, precomputed Pieri images, the memoized structure constants, and the
// multiplication-by-h matrices. ChowElements are immutable values that hold a
// shared pointer to their ring.

#include "schubert/linalg.hpp"
#include "schubert/numeric.hpp"
#include "schubert/partition.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace schubert {

class IncompatibleShapes : public std::invalid_argument {
 public:
  IncompatibleShapes() : std::invalid_argument("Chow elements belong to different Grassmannians") {}
};

/// Sparse integer combination of basis indices, sorted by index.
using IntCombination = std::vector<std::pair<std::uint32_t, std::int64_t>>;

class HMatrixSet;
class ChowRing;
using ChowRingPtr = std::shared_ptr<const ChowRing>;

class ChowRing : public std::enable_shared_from_this<ChowRing> {
 public:
  static ChowRingPtr create(const GrassmannShape& shape);
  ~ChowRing();

  const GrassmannShape& shape() const { return shape_; }
  /// binom(n, d).
  std::size_t size() const { return basis_.size(); }
  const Partition& partition(std::size_t index) const { return basis_[index]; }
  int degree(std::size_t index) const { return degrees_[index]; }
  std::optional<std::size_t> index_of(const Partition& lambda) const;

  /// Basis indices of degree `degree` occupy [begin, end).
  std::size_t degree_begin(int degree) const { return offsets_[degree]; }
  std::size_t degree_end(int degree) const { return offsets_[degree + 1]; }
  std::size_t degree_size(int degree) const;

  /// Indices of the Schubert classes in {lambda} * sigma_m, 1 <= m <= n-d.
  const std::vector<std::uint32_t>& pieri_image(std::size_t index, int m) const {
    return pieri_[index * shape_.cols() + (m - 1)];
  }

  /// Structure constants of {lambda_i} * {lambda_j}. Memoized; safe to call
  /// from several threads.
  const IntCombination& basis_product(std::size_t i, std::size_t j) const;

  /// Lazily built multiplication-by-h matrices, shared by all reductions.
  const HMatrixSet& h_matrices() const;

 private:
  explicit ChowRing(const GrassmannShape& shape);
  IntCombination compute_product(std::size_t i, std::size_t j) const;
  IntCombination apply_special(const IntCombination& x, int m) const;

  GrassmannShape shape_;
  std::vector<Partition> basis_;
  std::vector<int> degrees_;
  std::vector<std::size_t> offsets_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::vector<std::uint32_t>> pieri_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<std::uint64_t, IntCombination> memo_;
  mutable std::once_flag h_once_;
  mutable std::unique_ptr<HMatrixSet> h_matrices_;
};

class ChowElement {
 public:
  explicit ChowElement(ChowRingPtr ring) : ring_(std::move(ring)) {}

  static ChowElement zero(const ChowRingPtr& ring) { return ChowElement(ring); }
  static ChowElement unit(const ChowRingPtr& ring);
  /// coeff * {lambda}; throws std::invalid_argument if lambda is not boxed.
  static ChowElement schubert(const ChowRingPtr& ring, const Partition& lambda,
                              const Rational& coeff = Rational(1));
  /// sigma_m; the zero class outside [0, n-d] and the unit for m = 0.
  static ChowElement special(const ChowRingPtr& ring, int m);

  const ChowRingPtr& ring() const { return ring_; }
  const GrassmannShape& shape() const { return ring_->shape(); }

  /// Basis index -> nonzero coefficient.
  const std::map<std::size_t, Rational>& terms() const { return terms_; }
  Rational coeff(const Partition& lambda) const;
  bool is_zero() const { return terms_.empty(); }

  /// Restriction to the Schubert classes of the given weight.
  ChowElement component(int degree) const;
  /// The common weight of all terms; nullopt for zero or mixed elements.
  std::optional<int> homogeneous_degree() const;
  /// Dense coordinates on the degree-`degree` basis.
  VectorX<Rational> coordinates(int degree) const;
  static ChowElement from_coordinates(const ChowRingPtr& ring, int degree,
                                      const VectorX<Rational>& v);
  /// Zero coefficients are dropped; indices must be valid basis indices.
  static ChowElement from_terms(const ChowRingPtr& ring, std::map<std::size_t, Rational> terms);

  ChowElement& operator+=(const ChowElement& other);
  ChowElement& operator-=(const ChowElement& other);
  ChowElement& operator*=(const Rational& q);

  friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
  friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
  friend ChowElement operator-(ChowElement a) { return a *= Rational(-1); }
  friend ChowElement operator*(const Rational& q, ChowElement a) { return a *= q; }
  friend ChowElement operator*(const ChowElement& a, const ChowElement& b);
  friend bool operator==(const ChowElement& a, const ChowElement& b);

  /// "3/2*[2] - [1,1]"; "0" for the zero class.
  std::string to_string() const;

 private:
  void add_scaled(std::size_t index, const Rational& q);

  ChowRingPtr ring_;
  std::map<std::size_t, Rational> terms_;
};

ChowElement unit(const ChowRingPtr& ring);
ChowElement add(const ChowElement& a, const ChowElement& b);
ChowElement scale(const Rational& q, const ChowElement& a);

/// a * sigma_m by Pieri's rule; the zero class when m is outside [1, n-d].
ChowElement pieri(const ChowElement& a, int m);

/// Product of special classes with an integer coefficient. Factors are
/// stored in decreasing order and never include sigma_0.
struct SigmaMonomial {
  std::vector<int> factors;
  std::int64_t coefficient = 0;
  bool operator==(const SigmaMonomial&) const = default;
};

/// Expansion of det(sigma_{lambda_i + j - i}) with sigma_k = 0 for k < 0 or
/// k > n-d. Like monomials are merged; longer monomials come first.
std::vector<SigmaMonomial> giambelli_expand(const Partition& lambda, const GrassmannShape& shape);

/// Applies the monomial to `a` one special class at a time.
ChowElement apply_monomial(const ChowElement& a, const SigmaMonomial& monomial);

ChowElement multiply(const ChowElement& a, const ChowElement& b);
/// The product with every term of weight above `max_degree` skipped.
ChowElement multiply(const ChowElement& a, const ChowElement& b, int max_degree);

/// Coefficient of {nu} in {lambda}{mu}, computed in a box large enough that
/// nothing is truncated. Zero when |nu| != |lambda| + |mu|.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Multiplication by h = sigma_1 from degree i-1 to degree i, together with
/// the reduced echelon basis of its column space used for canonical
/// residuals. Pivots are chosen from the end of the basis, so residuals are
/// supported on the earliest (longest first row) Schubert classes.
struct HMatrix {
  MatrixX<Integer> map;
  Eigen::Index rank = 0;
  RowEchelon column_space;
};

class HMatrixSet {
 public:
  explicit HMatrixSet(const ChowRingPtr& ring);

  const GrassmannShape& shape() const { return shape_; }
  /// The matrix into degree i, 1 <= i <= t.
  const HMatrix& into_degree(int i) const { return matrices_.at(i); }
  /// dim CH^i / h CH^{i-1}.
  std::size_t cokernel_dimension(int i) const;

 private:
  GrassmannShape shape_;
  std::vector<std::size_t> basis_sizes_;
  std::vector<HMatrix> matrices_;  // index 0 unused
};

HMatrixSet build_h_matrices(const ChowRingPtr& ring);

struct Reduction {
  ChowElement representative;
  bool is_zero;
};

/// Canonical representative of a homogeneous class of degree i >= 1 modulo
/// h * CH^{i-1}. Throws std::invalid_argument on inhomogeneous or degree-0
/// input; the zero class reduces to itself.
Reduction reduce_mod_h(const ChowElement& a, const HMatrixSet& hmats);
Reduction reduce_mod_h(const ChowElement& a);

}  // namespace schubert
