// Exact distributions by enumerating every edge ordering of K_n
// (n <= 5), and the matching single-run statistics from the simulator.
#pragma once

#include <cstdint>
#include <map>
#include <string_view>

#include "buildsim/analytics.hpp"
#include "buildsim/edge_stream.hpp"
#include "buildsim/strategy.hpp"

namespace buildsim {

enum class Statistic {
  kTau1,       // hitting time of minimum degree 1
  kTauCon,     // hitting time of connectivity
  kEO1,        // e(O_1): edges that are the first edge at one of their ends
  kPhiCell,    // phi(r, s) over the whole process
  kPurchases,  // Builder purchases up to tau_k under `strategy`
  kSuccess,    // 1 if Builder's graph has minimum degree >= k at tau_k
};

std::string_view to_string(Statistic statistic);
Statistic parse_statistic(std::string_view name);

struct OracleQuery {
  Statistic statistic = Statistic::kTau1;
  std::uint32_t r = 1;  // kPhiCell only
  std::uint32_t s = 1;
  StrategyConfig strategy{StrategyKind::kGreedyKnn, 1, 1.0, 0.0, 0.0};
};

/// Exact probability mass function of the statistic's value.
using Distribution = std::map<std::int64_t, Rational>;

inline constexpr std::uint32_t kMaxEnumerationN = 5;

/// Iterates all N! orderings of E(K_n). Requires 2 <= n <= 5.
Distribution enumerate_exact(std::uint32_t n, const OracleQuery& query);

/// The same statistic measured on one simulated process with the given seed.
std::int64_t simulate_statistic(std::uint32_t n, const OracleQuery& query,
                                std::uint64_t seed, StreamMode mode);

}  // namespace buildsim
