#include "buildsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "buildsim/analytics.hpp"
#include "buildsim/edge_stream.hpp"
#include "buildsim/harness.hpp"
#include "buildsim/process_state.hpp"
#include "buildsim/rng.hpp"
#include "buildsim/strategy.hpp"

namespace buildsim {

PhiDensities phi_experiment(std::uint32_t n, std::uint32_t min_degree,
                            std::uint32_t cap, std::uint64_t seed) {
  if (min_degree < 2) throw std::invalid_argument("phi_experiment: D >= 2 violated");
  if (min_degree >= n) throw std::invalid_argument("phi_experiment: D < n violated");
  if (cap < 1 || cap > 10 * std::log(static_cast<double>(n)))
    throw std::invalid_argument("phi_experiment: 1 <= cap <= 10 ln n violated");

  const auto expected = static_cast<std::size_t>(1.2 * tau_estimate(n, min_degree)) + 64;
  EdgeStream stream(n, seed, StreamMode::kRejectionCoupled, expected);
  ProcessState state(n, cap);
  while (state.min_exposed_degree() < min_degree) {
    const auto e = stream.next();
    if (!e) break;
    state.expose(*e);
  }
  PhiDensities out;
  out.n = n;
  out.min_degree = min_degree;
  out.steps = state.step();
  for (std::uint32_t r = 1; r <= cap; ++r)
    for (std::uint32_t s = 1; s <= r && r + s <= min_degree; ++s)
      out.density[{r, s}] = static_cast<double>(state.phi().at(r, s)) / n;
  return out;
}

std::vector<double> degree_fractions(std::uint32_t n, std::uint64_t m,
                                     std::uint32_t max_degree, std::uint64_t seed) {
  if (m > complete_edge_count(n))
    throw std::invalid_argument("degree_fractions: m exceeds N");
  EdgeStream stream(n, seed, StreamMode::kRejectionCoupled, m);
  ProcessState state(n);
  for (std::uint64_t i = 0; i < m; ++i) state.expose(*stream.next());
  std::vector<double> fractions(max_degree + 1, 0.0);
  for (std::uint32_t d : state.exposed_degrees())
    if (d <= max_degree) fractions[d] += 1.0 / n;
  return fractions;
}

SuccessProbResult success_prob_experiment(std::uint32_t n, double C,
                                          std::uint64_t trials,
                                          std::uint64_t master_seed,
                                          std::uint32_t jobs) {
  ExperimentConfig config;
  config.n = n;
  config.strategy = {StrategyKind::kAlgoDeg1, 1, C, 0.0, 0.0};
  config.validate();
  const TrialBatch batch = run_trials(config, master_seed, trials, jobs);

  SuccessProbResult out;
  RunningStats success;
  RunningStats ratio;
  std::uint64_t successes = 0;
  for (const TrialResult& t : batch.trials) {
    SuccessProbTrial p{t.y_at_cn, t.z_at_cn, t.success, t.purchases};
    out.trials.push_back(p);
    success.add(p.success ? 1.0 : 0.0);
    ratio.add(p.ratio());
    successes += p.success ? 1 : 0;
  }
  out.mean_success = success.mean();
  out.mean_ratio = ratio.mean();
  out.success_interval = wilson_interval(successes, trials);
  return out;
}

namespace {

LastCoveredTrial last_covered_trial(std::uint32_t n, double C, std::uint64_t seed) {
  const StrategyConfig strategy{StrategyKind::kAlgoDeg1, 1, C, 0.0, 0.0};
  const std::uint64_t m = strategy.phase_one_steps(n);
  EdgeStream stream(n, seed, StreamMode::kRejectionCoupled, m);
  ProcessState state(n);
  StrategyState sets(n, 1);
  for (std::uint64_t step = 1; step <= m; ++step) {
    const auto e = stream.next();
    if (!e) break;
    const EndpointView before = state.view(*e);
    const Decision d = algo_deg_1_decide(sets, m, step, *e);
    state.expose(*e);
    if (d.purchase) state.purchase(*e);
    sets.update(*e, d, before);
  }

  LastCoveredTrial out;
  std::vector<bool> uncovered(n, false);
  std::uint64_t remaining = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (sets.builder_isolated(v)) {
      uncovered[v] = true;
      ++remaining;
    }
  }
  out.set_size = remaining;
  out.y_size = sets.y_size();
  if (remaining == 0) return out;

  Rng rng(substream_seed(seed, 1));
  Vertex last = 0;
  while (remaining > 0) {
    const auto a = static_cast<Vertex>(rng.below(n));
    auto b = static_cast<Vertex>(rng.below(n - 1));
    if (b >= a) ++b;
    Vertex newly[2];
    int fresh = 0;
    for (Vertex x : {a, b}) {
      if (uncovered[x]) {
        uncovered[x] = false;
        newly[fresh++] = x;
      }
    }
    remaining -= fresh;
    if (remaining == 0) last = fresh == 2 ? newly[rng.below(2)] : newly[0];
  }
  out.last_in_y = sets.vertex_class(last) == VertexClass::kY;
  for (Vertex v = 0; v < last; ++v)
    if (sets.builder_isolated(v)) ++out.rank;
  out.pit = (static_cast<double>(out.rank) + rng.uniform()) /
            static_cast<double>(out.set_size);
  return out;
}

}  // namespace

LastCoveredResult last_covered_experiment(std::uint32_t n, double C,
                                          std::uint64_t trials,
                                          std::uint64_t master_seed,
                                          std::uint32_t bins, std::uint32_t jobs) {
  if (bins < 2) throw std::invalid_argument("last_covered_experiment: bins >= 2");
  StrategyConfig{StrategyKind::kAlgoDeg1, 1, C, 0.0, 0.0}.validate();
  std::vector<LastCoveredTrial> all(trials);
  parallel_for(trials, jobs, [&](std::uint64_t i) {
    all[i] = last_covered_trial(n, C, trial_seed(master_seed, i));
  });
  LastCoveredResult out;
  std::vector<std::uint64_t> counts(bins, 0);
  for (const auto& t : all) {
    if (t.set_size == 0) continue;
    out.trials.push_back(t);
    ++counts[std::min<std::uint64_t>(bins - 1, static_cast<std::uint64_t>(t.pit * bins))];
  }
  if (out.trials.empty()) return out;
  const std::vector<double> probabilities(bins, 1.0 / bins);
  out.uniformity = chi_square_gof(counts, probabilities);
  return out;
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t phase_one_steps) {
  std::vector<std::uint64_t> points;
  for (std::uint64_t p = 1; p < phase_one_steps; p <<= 1) points.push_back(p);
  if (phase_one_steps >= 1) points.push_back(phase_one_steps);
  return points;
}

TraceResult trace_experiment(const ExperimentConfig& config, std::uint64_t seed) {
  config.validate();
  const std::uint32_t n = config.n;
  const StrategyConfig& strategy = config.strategy;
  const std::uint64_t horizon = strategy.phase_one_steps(n);
  std::vector<std::uint64_t> points =
      config.checkpoints.empty() ? default_checkpoints(horizon) : config.checkpoints;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty() || points.front() < 1 || points.back() > horizon) {
    throw std::invalid_argument("trace_experiment: checkpoints must lie in [1, ceil(Cn)] = [1, " +
                                std::to_string(horizon) + "]");
  }
  if (points.back() > complete_edge_count(n))
    throw std::invalid_argument("trace_experiment: checkpoint beyond N");

  EdgeStream stream(n, seed, config.mode, points.back());
  ProcessState state(n, config.phi_cap, config.checked);
  StrategyState sets(n, strategy.k);
  TraceResult out;
  std::uint64_t e_o1 = 0;
  std::uint64_t e1 = 0;
  bool degree_hit = false;
  auto next_point = points.begin();
  for (std::uint64_t step = 1; next_point != points.end(); ++step) {
    const Edge e = *stream.next();
    const EndpointView before = state.view(e);
    const Decision d = degree_hit ? Decision{} : decide(strategy, sets, n, step, e, before);
    const bool first_at_an_end = before.exposed_u == 0 || before.exposed_v == 0;
    state.expose(e);
    if (d.purchase) state.purchase(e);
    sets.update(e, d, before);
    if (first_at_an_end) {
      ++e_o1;
      if (d.purchase) ++e1;
    }
    if (!degree_hit && strategy.k < n && hitting_reached(state, strategy.k)) degree_hit = true;
    if (step == *next_point) {
      out.snapshots.push_back({step, sets.x_size(), sets.y_size(), sets.z_size(),
                               sets.purchase_count(), e_o1, e1});
      ++next_point;
    }
  }
  return out;
}

}  // namespace buildsim
