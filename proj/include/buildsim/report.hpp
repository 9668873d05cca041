// Machine-readable trial and summary output.
//
// Per-trial CSV columns (fixed order):
//   trial,seed,tau_k,tau_con,purchases,min_builder_deg_at_tau,success,
//   efficient,inefficient,phase_one_completed,purchases_at_cn,y_at_cn,
//   z_at_cn,u_at_cn,max_y,repeated_draws
// NDJSON uses the same keys in the same order, plus "phi" when reported.
// Summary CSV: one header row and one value row; see summary_csv_header().
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "buildsim/harness.hpp"

namespace buildsim {

std::string trial_csv_header();
std::string trial_csv_row(std::uint64_t index, const TrialResult& t);
std::string trial_ndjson(std::uint64_t index, const TrialResult& t);

std::string summary_csv_header();
std::string summary_csv_row(const Aggregate& a);

/// Writes every trial in the chosen format, header included for CSV.
void write_trials(std::ostream& out, const std::vector<TrialResult>& trials,
                  OutputFormat format);

}  // namespace buildsim
