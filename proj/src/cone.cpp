#include "schubert/cone.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace schubert {

namespace {

TauRecord reduce_component(const ChowElement& todd, int degree, const HMatrixSet& hmats) {
  const int t = hmats.shape().dimension();
  Reduction r = reduce_mod_h(todd.component(degree), hmats);
  return TauRecord{degree, t + 1 - degree, std::move(r.representative), r.is_zero};
}

RobertsReport finish(const GrassmannShape& shape, std::vector<TauRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const TauRecord& a, const TauRecord& b) { return a.degree < b.degree; });
  RobertsReport report{shape, shape.dimension() + 1, std::move(records), true, std::nullopt, false};
  for (const auto& record : report.records) {
    if (!record.is_zero) {
      report.verdict = false;
      if (!report.witness) report.witness = record.degree;
    }
  }
  report.complete = static_cast<int>(report.records.size()) == shape.dimension();
  return report;
}

}  // namespace

ConeChowDims cone_chow_dims(const GrassmannShape& shape) {
  const auto ring = ChowRing::create(shape);
  const HMatrixSet& hmats = ring->h_matrices();
  const int t = shape.dimension();
  ConeChowDims out{shape, std::vector<std::size_t>(t + 2, 0)};
  for (int i = 1; i <= t; ++i) out.dims[i] = hmats.cokernel_dimension(t + 1 - i);
  out.dims[t + 1] = 1;
  return out;
}

RobertsReport tau_components(const GrassmannShape& shape) {
  const auto ring = ChowRing::create(shape);
  const ChowElement todd = todd_tangent(ring);
  std::vector<TauRecord> records;
  for (int j = 1; j <= shape.dimension(); ++j)
    records.push_back(reduce_component(todd, j, ring->h_matrices()));
  return finish(shape, std::move(records));
}

RobertsReport roberts_verdict(const GrassmannShape& shape, ReportMode mode) {
  if (mode == ReportMode::Full) return tau_components(shape);

  // Even degrees first, with the Todd class truncated as low as possible so
  // that shapes failing in degree 2 or 4 never pay for the full expansion.
  const auto ring = ChowRing::create(shape);
  const HMatrixSet& hmats = ring->h_matrices();
  const int t = shape.dimension();
  std::vector<int> stages;
  for (int stage : {2, 4, t})
    if (stage <= t && (stages.empty() || stage > stages.back())) stages.push_back(stage);

  std::vector<TauRecord> records;
  int checked = 0;
  ChowElement todd = ChowElement::zero(ring);
  for (int stage : stages) {
    todd = todd_tangent(ring, stage);
    for (int j = checked + 1; j <= stage; ++j) {
      if (j % 2 != 0) continue;
      records.push_back(reduce_component(todd, j, hmats));
      if (!records.back().is_zero) return finish(shape, std::move(records));
    }
    checked = stage;
  }
  for (int j = 1; j <= t; j += 2) {
    records.push_back(reduce_component(todd, j, hmats));
    if (!records.back().is_zero) break;
  }
  return finish(shape, std::move(records));
}

bool gorenstein_parity_check(const RobertsReport& report) {
  return std::all_of(report.records.begin(), report.records.end(),
                     [](const TauRecord& r) { return r.degree % 2 == 0 || r.is_zero; });
}

bool gorenstein_parity_check(const GrassmannShape& shape) {
  return gorenstein_parity_check(tau_components(shape));
}

std::vector<VerdictSummary> verdict_table(int max_n, unsigned threads, ReportMode mode) {
  if (max_n < 2) throw std::invalid_argument("verdict_table requires max_n >= 2");
  std::vector<GrassmannShape> shapes;
  for (int n = 2; n <= max_n; ++n)
    for (int d = 1; d <= n - 1; ++d) shapes.emplace_back(d, n);

  std::vector<std::optional<VerdictSummary>> slots(shapes.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (std::size_t k = next++; k < shapes.size(); k = next++) {
        const RobertsReport report = roberts_verdict(shapes[k], mode);
        slots[k] = VerdictSummary{shapes[k], report.verdict, report.witness};
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = shapes.size();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, shapes.size())));
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (error) std::rethrow_exception(error);

  std::vector<VerdictSummary> out;
  out.reserve(slots.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace schubert
