#pragma once

// Exact elimination on dense Eigen matrices. Scalar must be an exact
// integral domain (Integer) or field (Rational); nothing here rounds.

#include "schubert/numeric.hpp"

#include <utility>
#include <vector>

namespace schubert {

/// Bareiss fraction-free elimination in place. Every division is exact, so
/// integer input stays integer. Returns the rank; `pivot_columns` receives
/// the column of each pivot in order when non-null.
template <typename Scalar>
Eigen::Index fraction_free_eliminate(MatrixX<Scalar>& a,
                                     std::vector<Eigen::Index>* pivot_columns = nullptr,
                                     int* swap_parity = nullptr) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Scalar previous(1);
  Eigen::Index rank = 0;
  int parity = 1;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      a.row(pivot).swap(a.row(rank));
      parity = -parity;
    }
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        a(i, j) = (a(rank, c) * a(i, j) - a(i, c) * a(rank, j)) / previous;
      a(i, c) = Scalar(0);
    }
    previous = a(rank, c);
    if (pivot_columns) pivot_columns->push_back(c);
    ++rank;
  }
  if (swap_parity) *swap_parity = parity;
  return rank;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  MatrixX<typename Derived::Scalar> work = m;
  return fraction_free_eliminate(work);
}

template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(m.rows() == m.cols());
  if (m.rows() == 0) return Scalar(1);
  MatrixX<Scalar> work = m;
  int parity = 1;
  if (fraction_free_eliminate(work, nullptr, &parity) < work.rows()) return Scalar(0);
  const Eigen::Index last = work.rows() - 1;
  return parity > 0 ? Scalar(work(last, last)) : Scalar(-work(last, last));
}

/// Reduced row echelon form over Q: the nonzero rows, each with a leading 1
/// in its pivot column and zeros in every other pivot column.
struct RowEchelon {
  MatrixX<Rational> rows;
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <typename Derived>
RowEchelon reduced_row_echelon(const Eigen::MatrixBase<Derived>& m) {
  MatrixX<Rational> work = m.template cast<Rational>();
  RowEchelon result;
  const Eigen::Index rank = fraction_free_eliminate(work, &result.pivots);
  work.conservativeResize(rank, Eigen::NoChange);
  for (Eigen::Index r = rank - 1; r >= 0; --r) {
    const Eigen::Index c = result.pivots[r];
    work.row(r) /= Rational(work(r, c));
    for (Eigen::Index above = 0; above < r; ++above) {
      const Rational factor = work(above, c);
      if (factor != 0) work.row(above) -= factor * work.row(r);
    }
  }
  result.rows = std::move(work);
  return result;
}

}  // namespace schubert
