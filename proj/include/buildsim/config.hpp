// Experiment configuration and its JSON form.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "buildsim/edge_stream.hpp"
#include "buildsim/strategy.hpp"

namespace buildsim {

enum class OutputFormat { kCsv, kNdjson };

std::string_view to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view name);

struct ExperimentConfig {
  std::uint32_t n = 1000;
  StrategyConfig strategy;
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 1;
  StreamMode mode = StreamMode::kRejectionCoupled;
  std::uint32_t jobs = 1;
  std::string out;  // per-trial records; empty = none
  OutputFormat format = OutputFormat::kNdjson;
  /// Trace checkpoints (steps); empty = powers of two plus ceil(Cn).
  std::vector<std::uint64_t> checkpoints;
  std::uint32_t phi_cap = 64;
  /// Stop degree D for phi experiments.
  std::uint32_t phi_min_degree = 15;
  /// Largest r of the phi cells reported per trial; 0 disables.
  std::uint32_t phi_report = 0;
  /// Per-step invariant recounts (slow; for tests).
  bool checked = false;

  /// Throws std::invalid_argument naming the violated invariant.
  void validate() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Serializes every field; keys are stable.
std::string to_json(const ExperimentConfig& config);
/// Parses a config; missing keys keep their defaults, unknown keys throw.
ExperimentConfig config_from_json(const std::string& text);

}  // namespace buildsim
