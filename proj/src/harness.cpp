#include "buildsim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "buildsim/analytics.hpp"
#include "buildsim/edge_stream.hpp"
#include "buildsim/process_state.hpp"
#include "buildsim/rng.hpp"
#include "buildsim/strategy.hpp"

namespace buildsim {

namespace {

std::size_t expected_prefix(std::uint32_t n, const StrategyConfig& s) {
  const double horizon = n >= 3 ? tau_estimate(n, s.k) : 1.0;
  const double phase_one = s.C * n;
  return static_cast<std::size_t>(1.25 * std::max(horizon, phase_one) + 64);
}

void check_zero_degree_coupling(const ProcessState& state, const Edge& e) {
  for (Vertex v : {e.u, e.v}) {
    const bool b0 = state.builder_degrees()[v] == 0;
    const bool g0 = state.exposed_degrees()[v] == 0;
    if (b0 != g0) {
      throw std::logic_error("algo_deg_k phase one: Builder degree 0 must "
                             "coincide with exposed degree 0 (vertex " +
                             std::to_string(v) + ")");
    }
  }
}

}  // namespace

const std::vector<std::string>& trial_numeric_fields() {
  static const std::vector<std::string> names = {
      "tau_k",          "tau_con",  "purchases", "min_builder_deg_at_tau",
      "efficient",      "inefficient", "purchases_at_cn", "y_at_cn",
      "z_at_cn",        "u_at_cn",  "max_y",     "repeated_draws",
  };
  return names;
}

double numeric_field(const TrialResult& t, std::size_t index) {
  switch (index) {
    case 0: return static_cast<double>(t.tau_k);
    case 1: return static_cast<double>(t.tau_con);
    case 2: return static_cast<double>(t.purchases);
    case 3: return t.min_builder_deg_at_tau;
    case 4: return static_cast<double>(t.efficient);
    case 5: return static_cast<double>(t.inefficient);
    case 6: return static_cast<double>(t.purchases_at_cn);
    case 7: return static_cast<double>(t.y_at_cn);
    case 8: return static_cast<double>(t.z_at_cn);
    case 9: return static_cast<double>(t.u_at_cn);
    case 10: return static_cast<double>(t.max_y);
    case 11: return static_cast<double>(t.repeated_draws);
  }
  throw std::out_of_range("numeric_field index");
}

bool Aggregate::operator==(const Aggregate& o) const {
  return trials == o.trials && successes == o.successes &&
         success_rate == o.success_rate && wilson.low == o.wilson.low &&
         wilson.high == o.wilson.high && fields == o.fields &&
         phi_density == o.phi_density;
}

TrialResult run_trial(const ExperimentConfig& config, std::uint64_t seed) {
  config.validate();
  const std::uint32_t n = config.n;
  const StrategyConfig& strategy = config.strategy;
  const std::uint32_t k = strategy.k;
  const std::uint64_t phase_one = strategy.phase_one_steps(n);

  EdgeStream stream(n, seed, config.mode, expected_prefix(n, strategy));
  ProcessState state(n, config.phi_cap, config.checked);
  StrategyState sets(n, k);

  TrialResult result;
  result.seed = seed;
  auto snapshot_phase_one = [&] {
    result.purchases_at_cn = sets.purchase_count();
    result.y_at_cn = sets.y_size();
    result.z_at_cn = sets.z_size();
    result.u_at_cn = sets.u_size();
  };

  // both_ends is judged at step ceil(Cn), so its run always reaches it.
  const bool reach_phase_one = strategy.kind == StrategyKind::kBothEnds;
  bool degree_hit = false;
  bool connected = false;
  while (!(degree_hit && connected && (!reach_phase_one || state.step() >= phase_one))) {
    const auto next = stream.next();
    if (!next) throw std::logic_error("edge stream exhausted before tau_k");
    const Edge e = *next;
    const std::uint64_t step = state.step() + 1;
    const EndpointView before = state.view(e);
    const bool deciding = !degree_hit || step <= phase_one;
    const Decision decision =
        deciding ? decide(strategy, sets, n, step, e, before) : Decision{};

    state.expose(e);
    if (decision.purchase) state.purchase(e);
    sets.update(e, decision, before);

    if (config.checked && strategy.kind == StrategyKind::kAlgoDegK &&
        step <= phase_one) {
      check_zero_degree_coupling(state, e);
    }
    if (step <= phase_one) result.max_y = std::max(result.max_y, sets.y_size());
    if (step == phase_one) {
      result.phase_one_completed = true;
      snapshot_phase_one();
    }
    if (!degree_hit && hitting_reached(state, k)) {
      degree_hit = true;
      result.tau_k = step;
      result.purchases = sets.purchase_count();
      const auto bdeg = state.builder_degrees();
      result.min_builder_deg_at_tau = *std::min_element(bdeg.begin(), bdeg.end());
      result.success = result.min_builder_deg_at_tau >= k;
    }
    if (!connected && connectivity_hitting(state)) {
      connected = true;
      result.tau_con = step;
    }
  }
  if (!result.phase_one_completed) snapshot_phase_one();
  result.efficient = sets.efficient_count();
  result.inefficient = sets.inefficient_count();
  result.repeated_draws = stream.repeated_draws();

  const std::uint32_t report = std::min(config.phi_report, config.phi_cap);
  for (std::uint32_t r = 1; r <= report; ++r)
    for (std::uint32_t s = 1; s <= r; ++s)
      result.phi.push_back({r, s, state.phi().at(r, s)});
  return result;
}

Aggregate aggregate(const std::vector<TrialResult>& results, std::uint32_t n) {
  Aggregate agg;
  agg.trials = results.size();
  const auto& names = trial_numeric_fields();
  std::vector<RunningStats> stats(names.size());
  std::map<std::pair<std::uint32_t, std::uint32_t>, RunningStats> phi;
  for (const TrialResult& t : results) {
    if (t.success) ++agg.successes;
    for (std::size_t i = 0; i < names.size(); ++i) stats[i].add(numeric_field(t, i));
    for (const PhiCell& c : t.phi)
      phi[{c.r, c.s}].add(static_cast<double>(c.count) / n);
  }
  agg.success_rate =
      agg.trials ? static_cast<double>(agg.successes) / static_cast<double>(agg.trials) : 0.0;
  agg.wilson = wilson_interval(agg.successes, agg.trials);
  for (const auto& s : stats) agg.fields.push_back({s.mean(), s.stddev()});
  for (const auto& [cell, s] : phi) agg.phi_density[cell] = s.mean();
  return agg;
}

TrialBatch run_trials(const ExperimentConfig& config, std::uint64_t master_seed,
                      std::uint64_t trials, std::uint32_t jobs) {
  if (trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");
  config.validate();
  TrialBatch batch;
  batch.trials.resize(trials);
  parallel_for(trials, jobs, [&](std::uint64_t i) {
    batch.trials[i] = run_trial(config, trial_seed(master_seed, i));
  });
  batch.summary = aggregate(batch.trials, config.n);
  return batch;
}

}  // namespace buildsim
