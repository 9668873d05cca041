#include "buildsim/report.hpp"

#include <fmt/format.h>
#include <json.hpp>

namespace buildsim {

std::string trial_csv_header() {
  return "trial,seed,tau_k,tau_con,purchases,min_builder_deg_at_tau,success,"
         "efficient,inefficient,phase_one_completed,purchases_at_cn,y_at_cn,"
         "z_at_cn,u_at_cn,max_y,repeated_draws";
}

std::string trial_csv_row(std::uint64_t index, const TrialResult& t) {
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}", index, t.seed,
                     t.tau_k, t.tau_con, t.purchases, t.min_builder_deg_at_tau,
                     t.success ? 1 : 0, t.efficient, t.inefficient,
                     t.phase_one_completed ? 1 : 0, t.purchases_at_cn, t.y_at_cn,
                     t.z_at_cn, t.u_at_cn, t.max_y, t.repeated_draws);
}

std::string trial_ndjson(std::uint64_t index, const TrialResult& t) {
  nlohmann::ordered_json j;
  j["trial"] = index;
  j["seed"] = t.seed;
  j["tau_k"] = t.tau_k;
  j["tau_con"] = t.tau_con;
  j["purchases"] = t.purchases;
  j["min_builder_deg_at_tau"] = t.min_builder_deg_at_tau;
  j["success"] = t.success;
  j["efficient"] = t.efficient;
  j["inefficient"] = t.inefficient;
  j["phase_one_completed"] = t.phase_one_completed;
  j["purchases_at_cn"] = t.purchases_at_cn;
  j["y_at_cn"] = t.y_at_cn;
  j["z_at_cn"] = t.z_at_cn;
  j["u_at_cn"] = t.u_at_cn;
  j["max_y"] = t.max_y;
  j["repeated_draws"] = t.repeated_draws;
  if (!t.phi.empty()) {
    auto& cells = j["phi"] = nlohmann::ordered_json::array();
    for (const PhiCell& c : t.phi) cells.push_back({c.r, c.s, c.count});
  }
  return j.dump();
}

std::string summary_csv_header() {
  std::string h = "trials,successes,success_rate,wilson_low,wilson_high";
  for (const auto& name : trial_numeric_fields()) h += fmt::format(",{0}_mean,{0}_sd", name);
  return h;
}

std::string summary_csv_row(const Aggregate& a) {
  std::string row = fmt::format("{},{},{:.6f},{:.6f},{:.6f}", a.trials, a.successes,
                                a.success_rate, a.wilson.low, a.wilson.high);
  for (const FieldSummary& f : a.fields) row += fmt::format(",{:.6f},{:.6f}", f.mean, f.stddev);
  return row;
}

void write_trials(std::ostream& out, const std::vector<TrialResult>& trials,
                  OutputFormat format) {
  if (format == OutputFormat::kCsv) out << trial_csv_header() << '\n';
  for (std::size_t i = 0; i < trials.size(); ++i) {
    out << (format == OutputFormat::kCsv ? trial_csv_row(i, trials[i])
                                         : trial_ndjson(i, trials[i]))
        << '\n';
  }
}

}  // namespace buildsim
