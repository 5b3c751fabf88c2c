#pragma once

// Riemann-Roch data of the affine cone A_d(n) over the Plucker embedding.
//
// The Chow group of the cone in dimension i is CH^{t+1-i} / h CH^{t-i}, and
// tau([A]) is the image of td(T G_d(n)) there. Records are keyed on the
// cohomological degree j of the Todd component; the matching homological
// index of tau is t + 1 - j.

#include "schubert/bundles.hpp"
#include "schubert/chow.hpp"

#include <optional>
#include <vector>

namespace schubert {

struct ConeChowDims {
  GrassmannShape shape;
  std::vector<std::size_t> dims;  // dims[i] = dim A_i(A)_Q, i = 0..t+1
};

struct TauRecord {
  int degree;            // j, cohomological degree of the Todd component
  int homological_index; // t + 1 - j
  ChowElement representative;
  bool is_zero;
};

struct RobertsReport {
  GrassmannShape shape;
  int cone_dimension = 0;  // t + 1
  std::vector<TauRecord> records;  // ascending degree; all of 1..t unless short-circuited
  bool verdict = false;
  std::optional<int> witness;  // smallest nonzero degree among the records
  bool complete = false;       // every degree 1..t was examined
};

enum class ReportMode {
  Full,         // every degree reduced
  VerdictOnly,  // even degrees first, stop at the first nonzero component
};

ConeChowDims cone_chow_dims(const GrassmannShape& shape);

/// Records for every degree 1..t; verdict and witness are filled from them.
RobertsReport tau_components(const GrassmannShape& shape);

RobertsReport roberts_verdict(const GrassmannShape& shape, ReportMode mode = ReportMode::Full);

/// Odd-degree tau components all vanish (A_d(n) is Gorenstein).
bool gorenstein_parity_check(const RobertsReport& report);
bool gorenstein_parity_check(const GrassmannShape& shape);

struct VerdictSummary {
  GrassmannShape shape;
  bool roberts;
  std::optional<int> witness;
};

/// All 1 <= d <= n-1, 2 <= n <= max_n, ordered by n then d. Shapes are
/// evaluated on up to `threads` workers (0: hardware concurrency). Throws
/// std::invalid_argument if max_n < 2.
std::vector<VerdictSummary> verdict_table(int max_n, unsigned threads = 0,
                                          ReportMode mode = ReportMode::VerdictOnly);

}  // namespace schubert
