#pragma once

#include "schubert/numeric.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace schubert {

/// Integer partition stored as its positive parts in weakly decreasing order.
/// Trailing zeros are stripped on construction, so (2,1,0) and (2,1) compare
/// equal and hash to the same map key.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument on negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const;

  /// Part i (zero-based); zero past the last stored part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

  /// "[2,1]"; the empty partition prints as "[]".
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// The Grassmannian G_d(n): Schubert classes live in a d x (n-d) box.
class GrassmannShape {
 public:
  /// Throws std::invalid_argument unless 1 <= d <= n-1.
  GrassmannShape(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  int rows() const { return d_; }
  int cols() const { return n_ - d_; }
  /// t = d(n-d), the dimension of G_d(n).
  int dimension() const { return d_ * (n_ - d_); }

  bool operator==(const GrassmannShape&) const = default;

 private:
  int d_;
  int n_;
};

bool fits_box(const Partition& lambda, const GrassmannShape& shape);

/// Partitions of `degree` inside the box, lexicographically descending on
/// parts. Empty when degree is outside [0, t].
std::vector<Partition> enumerate_box(const GrassmannShape& shape, int degree);

Partition conjugate(const Partition& lambda);

/// mu_i = (n-d) - lambda_{d+1-i}; the Poincare-dual partition.
Partition box_complement(const Partition& lambda, const GrassmannShape& shape);

/// Semistandard tableaux of shape lambda with entries in {1..n}, by the
/// hook-content formula. Zero when n is smaller than the number of parts.
Integer ssyt_count(const Partition& lambda, int n);

/// Independent quadrics among the Plucker coordinates of G_d(n):
/// binom(N+1, 2) - #SSYT((2^d), n) with N = binom(n, d).
Integer plucker_relation_count(const GrassmannShape& shape);

}  // namespace schubert
