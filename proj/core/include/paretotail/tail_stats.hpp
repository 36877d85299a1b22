#pragma once

// Order statistics and Hill estimation of the Pareto tail exponent for a
// single income sample.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace paretotail {

/// Cleaned sample for one (country, year, income kind) cell: positive
/// observations sorted in descending order.
struct TailSample {
  std::vector<double> values;  // descending, all > 0
  std::size_t n_raw = 0;       // count before cleaning
  std::size_t n_pos = 0;       // count after dropping non-positive/missing

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
};

/// Drops missing (NaN) and non-positive entries and sorts the rest
/// descending. Throws EmptySampleError if nothing positive remains.
TailSample clean_sample(std::span<const double> raw);

/// Number of tail observations k = floor(fraction * n). Throws
/// TooFewTailObsError when the result is below 2.
std::size_t tail_count(std::size_t n, double fraction = 0.05);

struct HillEstimate {
  double alpha = 0.0;          // tail exponent
  double se = 0.0;             // alpha / sqrt(k)
  std::size_t k = 0;           // tail observations used
  double threshold = 0.0;      // k-th largest order statistic
  double inverse_gamma = 0.0;  // 1 / alpha
};

/// Hill estimator on the top k order statistics:
///   1/alpha = (1/k) sum_{n=1..k} log(X_(n) / X_(k)).
/// Throws DegenerateTailError when all top-k values are equal (estimate
/// would be infinite, e.g. under heavy top-coding).
HillEstimate hill(const TailSample& sample, std::size_t k);

/// (log size, log rank) pairs for the whole sample, rank 1 = largest.
std::vector<std::pair<double, double>> log_rank_points(const TailSample& sample);

}  // namespace paretotail
