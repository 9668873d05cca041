#include "buildsim/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "buildsim/harness.hpp"
#include "buildsim/process_state.hpp"

namespace buildsim {

namespace {

constexpr std::pair<Statistic, std::string_view> kStatisticNames[] = {
    {Statistic::kTau1, "tau1"},           {Statistic::kTauCon, "tau_con"},
    {Statistic::kEO1, "e_O1"},            {Statistic::kPhiCell, "phi_cell"},
    {Statistic::kPurchases, "purchases"}, {Statistic::kSuccess, "success"},
};

// Direct evaluation on one ordering, written without ProcessState so that it
// stays an independent check of the simulator.
std::int64_t evaluate_ordering(std::uint32_t n, const std::vector<Edge>& order,
                               const OracleQuery& q) {
  std::array<std::uint32_t, kMaxEnumerationN> deg{};
  std::array<std::uint32_t, kMaxEnumerationN> label{};
  std::iota(label.begin(), label.end(), 0u);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [u, v] = order[i];
    const bool first_at_an_end = deg[u] == 0 || deg[v] == 0;
    ++deg[u];
    ++deg[v];
    const auto step = static_cast<std::int64_t>(i + 1);
    switch (q.statistic) {
      case Statistic::kTau1:
        if (std::all_of(deg.begin(), deg.begin() + n, [](auto d) { return d >= 1; }))
          return step;
        break;
      case Statistic::kTauCon: {
        const std::uint32_t from = label[v];
        const std::uint32_t to = label[u];
        for (std::uint32_t x = 0; x < n; ++x)
          if (label[x] == from) label[x] = to;
        if (std::all_of(label.begin(), label.begin() + n,
                        [&](auto l) { return l == label[0]; }))
          return step;
        break;
      }
      case Statistic::kEO1:
        count += first_at_an_end ? 1 : 0;
        break;
      case Statistic::kPhiCell:
        if (std::max(deg[u], deg[v]) == q.r && std::min(deg[u], deg[v]) == q.s) ++count;
        break;
      default:
        throw std::logic_error("evaluate_ordering: strategy statistic");
    }
  }
  return count;
}

std::int64_t evaluate_strategy(std::uint32_t n, const std::vector<Edge>& order,
                               const OracleQuery& q) {
  const std::uint32_t k = q.strategy.k;
  std::array<std::uint32_t, kMaxEnumerationN> gdeg{};
  std::array<std::uint32_t, kMaxEnumerationN> bdeg{};
  StrategyState sets(n, k);
  std::int64_t purchases = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Edge e = order[i];
    const EndpointView before{gdeg[e.u], gdeg[e.v], bdeg[e.u], bdeg[e.v]};
    const Decision d = decide(q.strategy, sets, n, i + 1, e, before);
    sets.update(e, d, before);
    ++gdeg[e.u];
    ++gdeg[e.v];
    if (d.purchase) {
      ++bdeg[e.u];
      ++bdeg[e.v];
      ++purchases;
    }
    if (std::all_of(gdeg.begin(), gdeg.begin() + n, [&](auto x) { return x >= k; })) {
      const bool ok =
          std::all_of(bdeg.begin(), bdeg.begin() + n, [&](auto x) { return x >= k; });
      return q.statistic == Statistic::kPurchases ? purchases : (ok ? 1 : 0);
    }
  }
  throw std::logic_error("evaluate_strategy: minimum degree k never reached");
}

}  // namespace

std::string_view to_string(Statistic statistic) {
  for (const auto& [s, name] : kStatisticNames)
    if (s == statistic) return name;
  return "?";
}

Statistic parse_statistic(std::string_view name) {
  for (const auto& [s, n] : kStatisticNames)
    if (n == name) return s;
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

Distribution enumerate_exact(std::uint32_t n, const OracleQuery& query) {
  if (n < 2 || n > kMaxEnumerationN)
    throw std::invalid_argument("enumerate_exact requires 2 <= n <= 5");
  const bool strategic =
      query.statistic == Statistic::kPurchases || query.statistic == Statistic::kSuccess;
  if (strategic) {
    query.strategy.validate();
    if (query.strategy.k >= n) throw std::invalid_argument("enumerate_exact: k < n");
  }
  if (query.statistic == Statistic::kPhiCell && (query.s < 1 || query.r < query.s))
    throw std::invalid_argument("enumerate_exact: phi cell needs r >= s >= 1");

  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  std::vector<std::size_t> perm(edges.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  std::map<std::int64_t, std::uint64_t> counts;
  std::uint64_t total = 0;
  std::vector<Edge> order(edges.size());
  do {
    for (std::size_t i = 0; i < perm.size(); ++i) order[i] = edges[perm[i]];
    ++counts[strategic ? evaluate_strategy(n, order, query)
                       : evaluate_ordering(n, order, query)];
    ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));

  Distribution pmf;
  for (const auto& [value, c] : counts) pmf[value] = Rational(c, total);
  return pmf;
}

std::int64_t simulate_statistic(std::uint32_t n, const OracleQuery& q,
                                std::uint64_t seed, StreamMode mode) {
  if (q.statistic == Statistic::kPurchases || q.statistic == Statistic::kSuccess) {
    ExperimentConfig config;
    config.n = n;
    config.strategy = q.strategy;
    config.mode = mode;
    const TrialResult t = run_trial(config, seed);
    return q.statistic == Statistic::kPurchases ? static_cast<std::int64_t>(t.purchases)
                                                : (t.success ? 1 : 0);
  }
  EdgeStream stream(n, seed, mode);
  ProcessState state(n);
  std::int64_t e_o1 = 0;
  while (auto e = stream.next()) {
    const EndpointView before = state.view(*e);
    if (before.exposed_u == 0 || before.exposed_v == 0) ++e_o1;
    state.expose(*e);
    if (q.statistic == Statistic::kTau1 && hitting_reached(state, 1))
      return static_cast<std::int64_t>(state.step());
    if (q.statistic == Statistic::kTauCon && connectivity_hitting(state))
      return static_cast<std::int64_t>(state.step());
  }
  if (q.statistic == Statistic::kEO1) return e_o1;
  if (q.statistic == Statistic::kPhiCell)
    return static_cast<std::int64_t>(state.phi().at(q.r, q.s));
  throw std::logic_error("simulate_statistic: process ended without hitting");
}

}  // namespace buildsim
