#pragma once

// Pfaffians of antisymmetric matrices and the complete-intersection /
// Roberts classification of the Pfaffian rings B_m(n) = S / Pf_m(Y).

#include "schubert/linalg.hpp"
#include "schubert/numeric.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace schubert {

/// Raised by validation; row and column are one-based.
class NotAntisymmetric : public std::invalid_argument {
 public:
  NotAntisymmetric(Eigen::Index row, Eigen::Index col)
      : std::invalid_argument("matrix is not antisymmetric at entry (" + std::to_string(row) + "," +
                              std::to_string(col) + ")"),
        row_(row),
        col_(col) {}
  Eigen::Index row() const { return row_; }
  Eigen::Index col() const { return col_; }

 private:
  Eigen::Index row_;
  Eigen::Index col_;
};

template <typename Scalar>
class AntisymmetricMatrix {
 public:
  /// Throws NotAntisymmetric naming the first offending entry, or
  /// std::invalid_argument if the matrix is not square.
  template <typename Derived>
  explicit AntisymmetricMatrix(const Eigen::MatrixBase<Derived>& m) : entries_(m) {
    if (entries_.rows() != entries_.cols())
      throw std::invalid_argument("antisymmetric matrix must be square");
    for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
      if (entries_(i, i) != 0) throw NotAntisymmetric(i + 1, i + 1);
      for (Eigen::Index j = i + 1; j < entries_.cols(); ++j)
        if (entries_(i, j) != -entries_(j, i)) throw NotAntisymmetric(i + 1, j + 1);
    }
  }

  Eigen::Index size() const { return entries_.rows(); }
  const MatrixX<Scalar>& matrix() const { return entries_; }
  const Scalar& operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

 private:
  MatrixX<Scalar> entries_;
};

namespace detail {

template <typename Scalar>
Scalar pfaffian_of_subset(const AntisymmetricMatrix<Scalar>& z, std::uint64_t subset,
                          std::unordered_map<std::uint64_t, Scalar>& memo) {
  if (subset == 0) return Scalar(1);
  if (const auto it = memo.find(subset); it != memo.end()) return it->second;
  const int first = __builtin_ctzll(subset);
  const std::uint64_t rest = subset & (subset - 1);
  Scalar total(0);
  int position = 0;
  for (std::uint64_t scan = rest; scan != 0; scan &= scan - 1, ++position) {
    const int partner = __builtin_ctzll(scan);
    const Scalar& entry = z(first, partner);
    if (entry == 0) continue;
    const Scalar minor = pfaffian_of_subset(z, rest & ~(std::uint64_t(1) << partner), memo);
    if (position % 2 == 0)
      total += entry * minor;
    else
      total -= entry * minor;
  }
  memo.emplace(subset, total);
  return total;
}

}  // namespace detail

/// Expansion along the first row with memoization on index subsets. Size 0
/// gives 1, odd sizes give 0. Sizes above 64 are rejected.
template <typename Scalar>
Scalar pfaffian(const AntisymmetricMatrix<Scalar>& z) {
  const Eigen::Index k = z.size();
  if (k > 64) throw std::invalid_argument("pfaffian supports at most 64 rows");
  if (k % 2 == 1) return Scalar(0);
  const std::uint64_t all = k == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << k) - 1;
  std::unordered_map<std::uint64_t, Scalar> memo;
  return detail::pfaffian_of_subset(z, all, memo);
}

struct PfaffianClassification {
  int m = 0;
  int n = 0;
  Integer generators;         // binom(n, 2m)
  Integer height;             // (n-2m+1)(n-2m+2)/2
  Integer dimension_deficit;  // dim S - dim B_m(n)
  bool is_complete_intersection = false;
  bool is_roberts = false;
};

/// Throws std::invalid_argument unless m >= 1 and n >= 2m.
PfaffianClassification classify_B(int m, int n);

/// B_2(n) is the Plucker cone A_2(n): compares the Pfaffian classification
/// with the Todd-class verdict for G_2(n).
bool cross_check_B2(int n);

}  // namespace schubert
