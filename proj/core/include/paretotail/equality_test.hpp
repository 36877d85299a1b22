#pragma once

// Self-normalized test of equal Pareto exponents for two dependent samples
// observed on the same households. The statistic compares the inverse Hill
// paths of the two samples and needs no tail covariance estimate.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "paretotail/tail_stats.hpp"

namespace paretotail {

/// Inverse Hill estimates gamma(t) = (1/floor(kt)) sum log(X_(n)/X_(floor(kt)))
/// as a step function of t on [t0, 1]. gamma_values[i] is the value in force
/// on [t_grid[i], t_grid[i+1]); the last point is t = 1 exactly.
struct InverseHillPath {
  std::size_t k = 0;
  double t0 = 0.0;
  std::vector<double> t_grid;
  std::vector<double> gamma_values;

  double gamma_at_one() const { return gamma_values.back(); }
};

/// Builds the path at the breakpoints m/k covering [t0, 1]. Requires
/// floor(k * t0) >= 2 so every evaluated estimate uses at least two
/// observations; throws TailTooShortError otherwise.
InverseHillPath inverse_hill_path(const TailSample& sample, std::size_t k, double t0);

struct HogaStatistic {
  double value = 0.0;
  bool degenerate = false;  // denominator integral was exactly zero
};

/// T_N = (gamma_lab(1) - gamma_cap(1))^2 / integral_{t0}^{1} t^2 *
/// [(gamma_lab(t) - gamma_cap(t)) - (gamma_lab(1) - gamma_cap(1))]^2 dt.
/// The integrand is piecewise constant between breakpoints, so the integral
/// is computed exactly interval by interval. Both paths must share k and t0.
HogaStatistic hoga_statistic(const InverseHillPath& lab, const InverseHillPath& cap, double t0);

struct CriticalValueEntry {
  double t0 = 0.0;
  double level = 0.0;
  double value = 0.0;
  std::string provenance;  // "paper" or "simulated"
};

/// Critical values of the limiting functional keyed by (t0, level). The
/// entry (0.2, 0.05) -> 55.44 is always present. Serializes to a plain text
/// file with one `t0 level value provenance` record per line.
class CriticalValueTable {
 public:
  CriticalValueTable();

  void insert(double t0, double level, double value, std::string provenance);
  bool contains(double t0, double level) const;
  /// Throws MissingCriticalValueError when the pair is absent.
  double value(double t0, double level) const;
  std::vector<CriticalValueEntry> entries() const;

  void save(const std::filesystem::path& path) const;
  static CriticalValueTable load(const std::filesystem::path& path);

 private:
  std::vector<CriticalValueEntry> entries_;
  const CriticalValueEntry* find(double t0, double level) const;
};

/// Simulates the limiting law W(1)^2 / integral_{t0}^1 [W(t) - t W(1)]^2 dt
/// on Euler-discretized Brownian paths and returns the empirical
/// (1 - level) quantile. Deterministic given the seed regardless of the
/// number of worker threads.
double simulate_critical_value(double t0, double level, std::size_t n_paths = 100000,
                               std::size_t n_steps = 10000, std::uint64_t seed = 1);

struct EqualityTestResult {
  double statistic = 0.0;
  double t0 = 0.0;
  double level = 0.0;
  double critical_value = 0.0;
  bool reject = false;
  bool degenerate = false;
  std::size_t k_used = 0;
  double alpha_lab = 0.0;
  double alpha_cap = 0.0;
};

/// Tests H0: alpha_lab = alpha_cap with the shared tail count
/// k = floor(tail_fraction * n_pos(cap)); the labor sample is therefore
/// estimated further in the tail. Callers are responsible for pairing the
/// two samples on the same household rows.
EqualityTestResult test_equality(const TailSample& lab, const TailSample& cap,
                                 const CriticalValueTable& cv, double t0 = 0.2,
                                 double level = 0.05, double tail_fraction = 0.05);

}  // namespace paretotail
