#include "buildsim/config.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace buildsim {

using nlohmann::ordered_json;

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::kCsv ? "csv" : "ndjson";
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "ndjson") return OutputFormat::kNdjson;
  throw std::invalid_argument("unknown output format '" + std::string(name) +
                              "' (expected csv|ndjson)");
}

void ExperimentConfig::validate() const {
  if (n < 2) throw std::invalid_argument("config: n >= 2 violated");
  if (mode == StreamMode::kFullPermutation && n > kFullPermutationMaxN) {
    throw std::invalid_argument("config: full-permutation mode requires n <= " +
                                std::to_string(kFullPermutationMaxN));
  }
  strategy.validate();
  if (strategy.k >= n) throw std::invalid_argument("config: k < n violated");
  if (trials < 1) throw std::invalid_argument("config: trials >= 1 violated");
  if (jobs < 1) throw std::invalid_argument("config: jobs >= 1 violated");
  if (phi_cap < 1) throw std::invalid_argument("config: phi_cap >= 1 violated");
}

std::string to_json(const ExperimentConfig& c) {
  ordered_json j;
  j["n"] = c.n;
  j["strategy"] = {
      {"kind", std::string(to_string(c.strategy.kind))},
      {"k", c.strategy.k},
      {"C", c.strategy.C},
      {"delta", c.strategy.delta},
      {"epsilon", c.strategy.epsilon},
  };
  j["trials"] = c.trials;
  j["master_seed"] = c.master_seed;
  j["mode"] = std::string(to_string(c.mode));
  j["jobs"] = c.jobs;
  j["out"] = c.out;
  j["format"] = std::string(to_string(c.format));
  j["checkpoints"] = c.checkpoints;
  j["phi_cap"] = c.phi_cap;
  j["phi_min_degree"] = c.phi_min_degree;
  j["phi_report"] = c.phi_report;
  j["checked"] = c.checked;
  return j.dump(2);
}

namespace {

void reject_unknown(const ordered_json& j, const std::set<std::string>& known,
                    const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key))
      throw std::invalid_argument("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read(const ordered_json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

ExperimentConfig config_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  reject_unknown(j,
                 {"n", "strategy", "trials", "master_seed", "mode", "jobs", "out",
                  "format", "checkpoints", "phi_cap", "phi_min_degree", "phi_report",
                  "checked"},
                 "config");
  ExperimentConfig c;
  try {
    read(j, "n", c.n);
    read(j, "trials", c.trials);
    read(j, "master_seed", c.master_seed);
    read(j, "jobs", c.jobs);
    read(j, "out", c.out);
    read(j, "checkpoints", c.checkpoints);
    read(j, "phi_cap", c.phi_cap);
    read(j, "phi_min_degree", c.phi_min_degree);
    read(j, "phi_report", c.phi_report);
    read(j, "checked", c.checked);
    if (j.contains("mode")) c.mode = parse_stream_mode(j.at("mode").get<std::string>());
    if (j.contains("format"))
      c.format = parse_output_format(j.at("format").get<std::string>());
    if (j.contains("strategy")) {
      const auto& s = j.at("strategy");
      reject_unknown(s, {"kind", "k", "C", "delta", "epsilon"}, "strategy");
      if (s.contains("kind"))
        c.strategy.kind = parse_strategy_kind(s.at("kind").get<std::string>());
      read(s, "k", c.strategy.k);
      read(s, "C", c.strategy.C);
      read(s, "delta", c.strategy.delta);
      read(s, "epsilon", c.strategy.epsilon);
    }
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  return c;
}

}  // namespace buildsim
