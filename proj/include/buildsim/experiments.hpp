// Targeted experiments built on the process and strategies.
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "buildsim/config.hpp"
#include "buildsim/stats.hpp"

namespace buildsim {

// ---------------------------------------------------------------------------
// Degree-pair classification of the raw process.

struct PhiDensities {
  std::uint32_t n = 0;
  std::uint32_t min_degree = 0;  // D
  std::uint64_t steps = 0;       // tau_D
  /// phi(r, s) / n for r >= s >= 1, r + s <= D, r <= cap.
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> density;
};

/// Runs the process without Builder until the minimum degree reaches D.
/// Every reported cell is final: no later edge can raise a degree to r <= D.
/// Requires D >= 2, D < n and cap <= 10 ln n.
PhiDensities phi_experiment(std::uint32_t n, std::uint32_t min_degree,
                            std::uint32_t cap, std::uint64_t seed);

/// Fraction of vertices of each degree 0..max_degree after m steps.
std::vector<double> degree_fractions(std::uint32_t n, std::uint64_t m,
                                     std::uint32_t max_degree, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Minimum degree 1: isolated-vertex race after the first phase.

struct SuccessProbTrial {
  std::uint64_t y = 0;  // |Y_m|
  std::uint64_t z = 0;  // |Z_m|
  bool success = false;
  std::uint64_t purchases = 0;
  /// |Z_m| / (|Y_m| + |Z_m|); 1 when both are empty.
  double ratio() const noexcept {
    return y + z == 0 ? 1.0 : static_cast<double>(z) / static_cast<double>(y + z);
  }
};

struct SuccessProbResult {
  std::vector<SuccessProbTrial> trials;
  double mean_success = 0;
  double mean_ratio = 0;
  Interval success_interval{};
};

/// algo_deg_1 with phase length m = ceil(Cn): isolated-pair purchases up to
/// m, then any edge with an isolated end, until tau_1.
SuccessProbResult success_prob_experiment(std::uint32_t n, double C,
                                          std::uint64_t trials,
                                          std::uint64_t master_seed,
                                          std::uint32_t jobs = 1);

struct LastCoveredTrial {
  std::uint64_t set_size = 0;  // |Y_m u Z_m|
  std::uint64_t y_size = 0;
  std::uint64_t rank = 0;      // position of the last vertex in sorted Y_m u Z_m
  bool last_in_y = false;
  /// (rank + U) / set_size with an independent U ~ Uniform[0,1); uniform on
  /// [0,1) exactly when the last vertex is uniform over the set.
  double pit = 0;
};

struct LastCoveredResult {
  std::vector<LastCoveredTrial> trials;
  ChiSquareResult uniformity;  // of pit values over `bins` equal bins
};

/// After the first phase of algo_deg_1, draws edges of K_n with repetition
/// until every vertex of Y_m u Z_m has an incident draw, and records which
/// vertex was covered last. Trials with an empty set are skipped.
LastCoveredResult last_covered_experiment(std::uint32_t n, double C,
                                          std::uint64_t trials,
                                          std::uint64_t master_seed,
                                          std::uint32_t bins = 20,
                                          std::uint32_t jobs = 1);

// ---------------------------------------------------------------------------
// Traces of the X/Y/Z sets against the first-incident-edge graph O_1.

struct TraceSnapshot {
  std::uint64_t step = 0;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t z = 0;
  std::uint64_t purchases = 0;
  std::uint64_t e_o1 = 0;  // edges so far that were first at one of their ends
  std::uint64_t e1 = 0;    // purchased edges among those

  friend bool operator==(const TraceSnapshot&, const TraceSnapshot&) = default;
};

struct TraceResult {
  std::vector<TraceSnapshot> snapshots;
};

/// Powers of two below ceil(Cn), then ceil(Cn).
std::vector<std::uint64_t> default_checkpoints(std::uint64_t phase_one_steps);

/// Runs config.strategy on one process and records snapshots at the
/// checkpoints (config.checkpoints, or the defaults), all in [1, ceil(Cn)].
TraceResult trace_experiment(const ExperimentConfig& config, std::uint64_t seed);

}  // namespace buildsim
