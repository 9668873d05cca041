// Command-line front end.
//
// Exit codes: 0 success, 2 usage error, 3 runtime failure.
// BUILDSIM_SEED, when set, replaces the default master seed (1).
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "buildsim/analytics.hpp"
#include "buildsim/config.hpp"
#include "buildsim/experiments.hpp"
#include "buildsim/harness.hpp"
#include "buildsim/oracle.hpp"
#include "buildsim/report.hpp"

namespace {

using namespace buildsim;

constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BUILDSIM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("BUILDSIM_SEED must be an unsigned integer");
    }
  }
  return 1;
}

struct StrategyFlags {
  std::string kind = "greedy_knn";
  std::uint32_t k = 1;
  double C = 1.0;
  double delta = 0.0;
  double epsilon = 0.0;

  void attach(CLI::App* app) {
    app->add_option("--strategy", kind,
                    "greedy_knn|both_ends|algo_deg_k|algo_deg_1|buy_all|buy_none");
    app->add_option("--k", k, "Target minimum degree");
    app->add_option("--C", C, "Phase-one length coefficient (ceil(C n) steps)");
    app->add_option("--delta", delta, "Budget slack (algo_deg_k)");
    app->add_option("--epsilon", epsilon, "Epsilon tied to C; 0 derives it from C");
  }
  StrategyConfig build() const {
    return {parse_strategy_kind(kind), k, C, delta, epsilon};
  }
};

std::string decimal(double x) { return fmt::format("{}", x); }

void print_rational(const Rational& q) {
  std::cout << format_rational(q) << " = " << decimal(to_double(q)) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budget-constrained online random graph process simulator"};
  app.require_subcommand(1);

  // run ---------------------------------------------------------------------
  auto* run = app.add_subcommand("run", "Run Monte Carlo trials of a Builder strategy");
  ExperimentConfig run_config;
  StrategyFlags run_strategy;
  std::string config_path;
  std::string run_format = "ndjson";
  std::string run_mode = "rejection";
  bool print_config = false;
  std::uint64_t run_seed = 0;
  run->add_option("--config", config_path, "JSON config file (flags override)");
  run->add_option("--n", run_config.n, "Vertex count");
  run_strategy.attach(run);
  run->add_option("--trials", run_config.trials, "Number of trials");
  auto* seed_opt = run->add_option("--seed", run_seed, "Master seed");
  run->add_option("--out", run_config.out, "Per-trial output file");
  run->add_option("--format", run_format, "Per-trial format: csv|ndjson");
  run->add_option("--jobs", run_config.jobs, "Worker threads");
  run->add_option("--mode", run_mode, "Edge stream: rejection|full");
  run->add_option("--phi-report", run_config.phi_report, "Report phi cells with r <= value");
  run->add_flag("--print-config", print_config, "Print the resolved JSON config and exit");

  // analytic ----------------------------------------------------------------
  auto* analytic = app.add_subcommand("analytic", "Print closed-form constants");
  std::uint32_t ok_k = 0;
  std::uint32_t f_k = 0;
  std::vector<std::uint32_t> mu_rs_args;
  bool want_mu_d = false;
  bool want_tau = false;
  double mu_c = 1.0;
  std::uint32_t mu_deg = 0;
  double tau_n = 0;
  std::uint32_t tau_k = 1;
  auto* ok_opt = analytic->add_option("--ok", ok_k, "o_k for k >= 1");
  auto* f_opt = analytic->add_option("--f", f_k, "f(k) for k >= 0");
  auto* rs_opt = analytic->add_option("--mu-rs", mu_rs_args, "mu_{r,s}: R S")->expected(2);
  analytic->add_flag("--mu-d", want_mu_d, "mu_d(C, d) = C^d e^-C / d!");
  analytic->add_option("--C", mu_c, "C for --mu-d");
  analytic->add_option("--d", mu_deg, "d for --mu-d");
  analytic->add_flag("--tau", want_tau, "(n/2)(ln n + (k-1) ln ln n)");
  analytic->add_option("--n", tau_n, "n for --tau");
  analytic->add_option("--k", tau_k, "k for --tau");

  // oracle ------------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "Exact distribution by enumeration (n <= 5)");
  std::uint32_t oracle_n = 4;
  std::string statistic = "tau1";
  OracleQuery query;
  StrategyFlags oracle_strategy;
  oracle->add_option("--n", oracle_n, "Vertex count (2..5)");
  oracle->add_option("--statistic", statistic,
                     "tau1|tau_con|e_O1|phi_cell|purchases|success");
  oracle->add_option("--r", query.r, "r for phi_cell");
  oracle->add_option("--s", query.s, "s for phi_cell");
  oracle_strategy.attach(oracle);

  // phi ---------------------------------------------------------------------
  auto* phi = app.add_subcommand("phi", "Degree-pair edge densities of the raw process");
  std::uint32_t phi_n = 20000;
  std::uint32_t phi_d = 15;
  std::uint32_t phi_cap = 64;
  std::uint64_t phi_seed = 0;
  phi->add_option("--n", phi_n, "Vertex count");
  phi->add_option("--D", phi_d, "Stop once the minimum degree reaches D");
  phi->add_option("--cap", phi_cap, "Largest tracked degree (<= 10 ln n)");
  auto* phi_seed_opt = phi->add_option("--seed", phi_seed, "Seed");

  // lemma -------------------------------------------------------------------
  auto* lemma = app.add_subcommand("lemma", "Success probability vs |Z|/(|Y|+|Z|)");
  std::uint32_t lemma_n = 10000;
  double lemma_c = 2.0;
  std::uint64_t lemma_trials = 2000;
  std::uint64_t lemma_seed = 0;
  std::uint32_t lemma_jobs = 1;
  std::string lemma_out;
  lemma->add_option("--n", lemma_n, "Vertex count");
  lemma->add_option("--C", lemma_c, "Phase-one coefficient");
  lemma->add_option("--trials", lemma_trials, "Trials");
  auto* lemma_seed_opt = lemma->add_option("--seed", lemma_seed, "Master seed");
  lemma->add_option("--jobs", lemma_jobs, "Worker threads");
  lemma->add_option("--out", lemma_out, "Per-trial CSV (y,z,ratio,success,purchases)");

  // trace -------------------------------------------------------------------
  auto* trace = app.add_subcommand("trace", "X/Y/Z and O_1 snapshots during phase one");
  ExperimentConfig trace_config;
  StrategyFlags trace_strategy;
  trace_strategy.kind = "algo_deg_1";
  trace_strategy.C = 2.0;
  std::uint64_t trace_seed = 0;
  trace->add_option("--n", trace_config.n, "Vertex count");
  trace_strategy.attach(trace);
  trace->add_option("--checkpoints", trace_config.checkpoints, "Steps in [1, ceil(Cn)]");
  auto* trace_seed_opt = trace->add_option("--seed", trace_seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (run->parsed()) {
      ExperimentConfig config = run_config;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("cannot read config " + config_path);
        std::stringstream text;
        text << in.rdbuf();
        config = config_from_json(text.str());
        // Flags given explicitly override the file.
        auto given = [&](const char* name) { return run->count(name) > 0; };
        if (given("--n")) config.n = run_config.n;
        if (given("--trials")) config.trials = run_config.trials;
        if (given("--out")) config.out = run_config.out;
        if (given("--jobs")) config.jobs = run_config.jobs;
        if (given("--phi-report")) config.phi_report = run_config.phi_report;
        if (given("--strategy")) config.strategy.kind = parse_strategy_kind(run_strategy.kind);
        if (given("--k")) config.strategy.k = run_strategy.k;
        if (given("--C")) config.strategy.C = run_strategy.C;
        if (given("--delta")) config.strategy.delta = run_strategy.delta;
        if (given("--epsilon")) config.strategy.epsilon = run_strategy.epsilon;
        if (given("--format")) config.format = parse_output_format(run_format);
        if (given("--mode")) config.mode = parse_stream_mode(run_mode);
        if (*seed_opt) config.master_seed = run_seed;
      } else {
        config.strategy = run_strategy.build();
        config.format = parse_output_format(run_format);
        config.mode = parse_stream_mode(run_mode);
        config.master_seed = *seed_opt ? run_seed : default_seed();
      }
      config.validate();
      if (print_config) {
        std::cout << to_json(config) << '\n';
        return 0;
      }
      const TrialBatch batch = run_trials(config, config.master_seed, config.trials, config.jobs);
      if (!config.out.empty()) {
        std::ofstream out(config.out);
        if (!out) throw std::runtime_error("cannot write " + config.out);
        write_trials(out, batch.trials, config.format);
      }
      std::cout << summary_csv_header() << '\n' << summary_csv_row(batch.summary) << '\n';
      return 0;
    }

    if (analytic->parsed()) {
      int printed = 0;
      if (*ok_opt) {
        print_rational(o_k(ok_k));
        ++printed;
      }
      if (*f_opt) {
        print_rational(f(f_k));
        ++printed;
      }
      if (*rs_opt) {
        print_rational(mu_rs(mu_rs_args[0], mu_rs_args[1]));
        ++printed;
      }
      if (want_mu_d) {
        std::cout << fmt::format("{:.6g}", mu_d(mu_c, mu_deg)) << '\n';
        ++printed;
      }
      if (want_tau) {
        std::cout << fmt::format("{:.6f}", tau_estimate(tau_n, tau_k)) << '\n';
        ++printed;
      }
      if (printed == 0) throw std::invalid_argument("analytic: nothing requested");
      return 0;
    }

    if (oracle->parsed()) {
      query.statistic = parse_statistic(statistic);
      query.strategy = oracle_strategy.build();
      const Distribution pmf = enumerate_exact(oracle_n, query);
      std::cout << "value,probability\n";
      for (const auto& [value, p] : pmf) std::cout << value << ',' << format_rational(p) << '\n';
      return 0;
    }

    if (phi->parsed()) {
      const PhiDensities d =
          phi_experiment(phi_n, phi_d, phi_cap, *phi_seed_opt ? phi_seed : default_seed());
      std::cout << "r,s,density,mu_rs\n";
      for (const auto& [cell, value] : d.density) {
        std::cout << fmt::format("{},{},{:.6f},{:.6f}\n", cell.first, cell.second, value,
                                 to_double(mu_rs(cell.first, cell.second)));
      }
      return 0;
    }

    if (lemma->parsed()) {
      const SuccessProbResult r = success_prob_experiment(
          lemma_n, lemma_c, lemma_trials, *lemma_seed_opt ? lemma_seed : default_seed(),
          lemma_jobs);
      if (!lemma_out.empty()) {
        std::ofstream out(lemma_out);
        if (!out) throw std::runtime_error("cannot write " + lemma_out);
        out << "trial,y,z,ratio,success,purchases\n";
        for (std::size_t i = 0; i < r.trials.size(); ++i) {
          const auto& t = r.trials[i];
          out << fmt::format("{},{},{},{:.6f},{},{}\n", i, t.y, t.z, t.ratio(),
                             t.success ? 1 : 0, t.purchases);
        }
      }
      std::cout << "trials,mean_success,mean_ratio,gap,wilson_low,wilson_high\n"
                << fmt::format("{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n", r.trials.size(),
                               r.mean_success, r.mean_ratio,
                               std::abs(r.mean_success - r.mean_ratio),
                               r.success_interval.low, r.success_interval.high);
      return 0;
    }

    if (trace->parsed()) {
      trace_config.strategy = trace_strategy.build();
      const TraceResult r =
          trace_experiment(trace_config, *trace_seed_opt ? trace_seed : default_seed());
      std::cout << "step,x,y,z,purchases,e_o1,e1\n";
      for (const auto& s : r.snapshots) {
        std::cout << fmt::format("{},{},{},{},{},{},{}\n", s.step, s.x, s.y, s.z,
                                 s.purchases, s.e_o1, s.e1);
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "runtime failure: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
