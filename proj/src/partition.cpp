#include "schubert/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

GrassmannShape::GrassmannShape(int d, int n) : d_(d), n_(n) {
  if (d < 1 || d > n - 1)
    throw std::invalid_argument("Grassmannian G_" + std::to_string(d) + "(" +
                                std::to_string(n) + ") requires 1 <= d <= n-1");
}

bool fits_box(const Partition& lambda, const GrassmannShape& shape) {
  return static_cast<int>(lambda.length()) <= shape.rows() && lambda[0] <= shape.cols();
}

namespace {

void enumerate_into(std::vector<int>& prefix, int remaining, int max_part, int rows_left,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (rows_left == 0) return;
  for (int part = std::min(max_part, remaining); part >= 1; --part) {
    // The remaining rows must be able to absorb what is left.
    if (static_cast<long>(part) * rows_left < remaining) break;
    prefix.push_back(part);
    enumerate_into(prefix, remaining - part, part, rows_left - 1, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_box(const GrassmannShape& shape, int degree) {
  std::vector<Partition> out;
  if (degree < 0 || degree > shape.dimension()) return out;
  std::vector<int> prefix;
  enumerate_into(prefix, degree, shape.cols(), shape.rows(), out);
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts(lambda.empty() ? 0 : lambda[0], 0);
  for (int row : lambda.parts())
    for (int j = 0; j < row; ++j) ++parts[j];
  return Partition(std::move(parts));
}

Partition box_complement(const Partition& lambda, const GrassmannShape& shape) {
  std::vector<int> parts(shape.rows());
  for (int i = 0; i < shape.rows(); ++i)
    parts[i] = shape.cols() - lambda[shape.rows() - 1 - i];
  return Partition(std::move(parts));
}

Integer ssyt_count(const Partition& lambda, int n) {
  if (n < static_cast<int>(lambda.length())) return Integer(0);
  const Partition transposed = conjugate(lambda);
  Integer numerator(1);
  Integer denominator(1);
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      const int content = j - static_cast<int>(i);
      const int hook = (lambda[i] - j) + (transposed[j] - static_cast<int>(i)) - 1;
      numerator *= (n + content);
      denominator *= hook;
    }
  }
  return numerator / denominator;
}

Integer plucker_relation_count(const GrassmannShape& shape) {
  const Integer coordinates = binomial(shape.n(), shape.d());
  const Integer quadrics = coordinates * (coordinates + 1) / 2;
  return quadrics - ssyt_count(Partition(std::vector<int>(shape.d(), 2)), shape.n());
}

}  // namespace schubert
