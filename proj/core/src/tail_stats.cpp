#include "paretotail/tail_stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "paretotail/errors.hpp"

namespace paretotail {

TailSample clean_sample(std::span<const double> raw) {
  TailSample out;
  out.n_raw = raw.size();
  out.values.reserve(raw.size());
  for (double x : raw) {
    if (std::isnan(x) || x <= 0.0) continue;
    out.values.push_back(x);
  }
  if (out.values.empty()) {
    throw EmptySampleError("no positive observations after cleaning (n_raw=" +
                           std::to_string(out.n_raw) + ")");
  }
  std::stable_sort(out.values.begin(), out.values.end(), std::greater<double>());
  out.n_pos = out.values.size();
  return out;
}

std::size_t tail_count(std::size_t n, double fraction) {
  if (n < 1) throw TooFewTailObsError("empty sample has no tail");
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw TooFewTailObsError("tail fraction must lie in (0,1)");
  }
  // Nudge guards against products like 0.03*100 = 2.999...96 landing below
  // the mathematically exact integer.
  const auto k = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n) + 1e-9));
  if (k < 2) {
    throw TooFewTailObsError("tail count " + std::to_string(k) + " below 2 (n=" +
                             std::to_string(n) + ", fraction=" + std::to_string(fraction) + ")");
  }
  return k;
}

HillEstimate hill(const TailSample& sample, std::size_t k) {
  if (k < 2) throw TooFewTailObsError("Hill estimator needs k >= 2");
  if (k > sample.size()) {
    throw TooFewTailObsError("k=" + std::to_string(k) + " exceeds sample size " +
                             std::to_string(sample.size()));
  }
  const double threshold = sample.values[k - 1];
  double log_sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    log_sum += std::log(sample.values[i] / threshold);
  }
  if (log_sum == 0.0) {
    throw DegenerateTailError("all top-" + std::to_string(k) +
                              " observations equal the threshold; estimate is infinite");
  }
  HillEstimate est;
  est.k = k;
  est.threshold = threshold;
  est.inverse_gamma = log_sum / static_cast<double>(k);
  est.alpha = 1.0 / est.inverse_gamma;
  est.se = est.alpha / std::sqrt(static_cast<double>(k));
  return est;
}

std::vector<std::pair<double, double>> log_rank_points(const TailSample& sample) {
  if (sample.empty()) throw EmptySampleError("log-rank plot of an empty sample");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    pts.emplace_back(std::log(sample.values[i]), std::log(static_cast<double>(i + 1)));
  }
  return pts;
}

}  // namespace paretotail
