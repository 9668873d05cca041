// Single trials, parallel batches, and their aggregation.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "buildsim/config.hpp"
#include "buildsim/stats.hpp"

namespace buildsim {

struct PhiCell {
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  std::uint64_t count = 0;

  friend bool operator==(const PhiCell&, const PhiCell&) = default;
};

struct TrialResult {
  std::uint64_t seed = 0;
  std::uint64_t tau_k = 0;
  std::uint64_t tau_con = 0;
  std::uint64_t purchases = 0;
  std::uint32_t min_builder_deg_at_tau = 0;
  bool success = false;
  std::uint64_t efficient = 0;
  std::uint64_t inefficient = 0;
  /// Snapshot at step ceil(Cn), or at the last step if the run ended first.
  bool phase_one_completed = false;
  std::uint64_t purchases_at_cn = 0;
  std::uint64_t y_at_cn = 0;
  std::uint64_t z_at_cn = 0;
  std::uint64_t u_at_cn = 0;
  std::uint64_t max_y = 0;
  std::uint64_t repeated_draws = 0;
  std::vector<PhiCell> phi;  // r <= phi_report, at the stopping step

  friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

/// Numeric TrialResult fields in their fixed reporting order.
const std::vector<std::string>& trial_numeric_fields();
double numeric_field(const TrialResult& t, std::size_t index);

struct FieldSummary {
  double mean = 0;
  double stddev = 0;

  friend bool operator==(const FieldSummary&, const FieldSummary&) = default;
};

struct Aggregate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double success_rate = 0;
  Interval wilson{};
  std::vector<FieldSummary> fields;  // aligned with trial_numeric_fields()
  /// Mean phi(r, s) / n per reported cell.
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> phi_density;

  bool operator==(const Aggregate& other) const;
};

/// Runs one trial from step 1 until tau_k (of the strategy's k) and the
/// connectivity hitting time are both reached; both_ends runs also reach step
/// ceil(Cn). Builder decides at step i iff i <= tau_k or i <= ceil(Cn);
/// `purchases` and `success` are taken at tau_k.
TrialResult run_trial(const ExperimentConfig& config, std::uint64_t trial_seed);

/// Folds trial results in index order.
Aggregate aggregate(const std::vector<TrialResult>& results, std::uint32_t n);

struct TrialBatch {
  std::vector<TrialResult> trials;
  Aggregate summary;
};

/// Trial i uses trial_seed(master_seed, i). Output does not depend on `jobs`.
TrialBatch run_trials(const ExperimentConfig& config, std::uint64_t master_seed,
                      std::uint64_t trials, std::uint32_t jobs);

/// Runs fn(i) for i in [0, count) on `jobs` threads; rethrows the first error.
template <typename Fn>
void parallel_for(std::uint64_t count, std::uint32_t jobs, Fn&& fn);

}  // namespace buildsim

#include "buildsim/parallel.inl"
