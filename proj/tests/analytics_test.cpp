#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "buildsim/analytics.hpp"
#include "buildsim/rng.hpp"

using namespace buildsim;

namespace {

Rational q(long p, long d) { return Rational(p) / d; }

// Average phi(r, s) over every ordering of E(G), counted directly.
double brute_force_phi(const SimpleGraph& g, std::uint32_t r, std::uint32_t s) {
  std::vector<std::size_t> order(g.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t hits = 0, perms = 0;
  do {
    std::vector<std::uint32_t> deg(g.n, 0);
    for (auto idx : order) {
      const Edge& e = g.edges[idx];
      const auto a = ++deg[e.u];
      const auto b = ++deg[e.v];
      if (std::max(a, b) == r && std::min(a, b) == s) ++hits;
    }
    ++perms;
  } while (std::next_permutation(order.begin(), order.end()));
  return static_cast<double>(hits) / static_cast<double>(perms);
}

SimpleGraph graph(std::uint32_t n, std::vector<Edge> edges) { return {n, std::move(edges)}; }

}  // namespace

TEST(Analytics, OneNearestNeighbourConstant) { EXPECT_EQ(o_k(1), q(3, 4)); }

TEST(Analytics, SmallConstants) {
  EXPECT_EQ(o_k(2), q(11, 8));
  EXPECT_EQ(f(0), Rational(1));
  EXPECT_EQ(f(1), q(5, 2));
  EXPECT_EQ(f(2), q(33, 8));
}

TEST(Analytics, RoutesAgreeExactly) {
  for (std::uint32_t k = 0; k <= 30; ++k) EXPECT_EQ(f_recurrence(k), f_double_sum(k)) << k;
  for (std::uint32_t k = 1; k <= 30; ++k) EXPECT_EQ(o_k_closed(k), o_k_via_f(k)) << k;
}

TEST(Analytics, OkBetweenHalfKAndK) {
  for (std::uint32_t k = 2; k <= 10; ++k) {
    EXPECT_GT(o_k(k), Rational(k) / 2);
    EXPECT_LT(o_k(k), Rational(k));
    EXPECT_GT(o_k(k), o_k(k - 1));
  }
  EXPECT_THROW(o_k(0), std::invalid_argument);
}

TEST(Analytics, Binomials) {
  EXPECT_EQ(binomial(10, 3), BigInt(120));
  EXPECT_EQ(binomial(3, 5), BigInt(0));
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

TEST(Analytics, PoissonMass) {
  EXPECT_NEAR(mu_d(1.0, 1), 0.367879, 1e-6);
  EXPECT_NEAR(mu_d(2.0, 1), 0.270671, 1e-6);
  EXPECT_NEAR(mu_d(2.0, 0), std::exp(-2.0), 1e-15);
  double sum = 0;
  for (std::uint32_t d = 0; d < 60; ++d) sum += mu_d(3.0, d);
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_GT(mu_d(2.0, 200), -1e-300);
}

TEST(Analytics, DegreePairDensities) {
  EXPECT_EQ(mu_rs(1, 1), q(1, 4));
  EXPECT_EQ(mu_rs(2, 1), q(1, 4));
  EXPECT_EQ(mu_rs(3, 1), q(1, 8));
  EXPECT_EQ(mu_rs(2, 2), q(3, 16));
  for (std::uint32_t r = 1; r <= 12; ++r) {
    if (r > 1) EXPECT_EQ(mu_rs(r, 1), Rational(1) / (BigInt(1) << r));
  }
  EXPECT_THROW(mu_rs(1, 2), std::invalid_argument);
  EXPECT_THROW(mu_rs(3, 0), std::invalid_argument);
}

TEST(Analytics, ExpectedPhiMatchesBruteForceOnSmallGraphs) {
  const std::vector<SimpleGraph> graphs = {
      graph(3, {{0, 1}, {0, 2}, {1, 2}}),
      graph(4, {{0, 1}, {1, 2}, {2, 3}}),
      graph(4, {{0, 1}, {0, 2}, {0, 3}}),
      graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
      graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}),
  };
  for (const auto& g : graphs) {
    double total = 0;
    for (std::uint32_t r = 1; r <= 5; ++r) {
      for (std::uint32_t s = 1; s <= r; ++s) {
        const double exact = expected_phi_given_graph(g, r, s);
        EXPECT_NEAR(exact, brute_force_phi(g, r, s), 1e-12) << "(" << r << "," << s << ")";
        total += exact;
      }
    }
    EXPECT_NEAR(total, static_cast<double>(g.edges.size()), 1e-12);
  }
}

TEST(Analytics, ExpectedPhiSumsToEdgeCount) {
  Rng rng(11);
  SimpleGraph g{40, {}};
  std::set<Edge> chosen;
  while (chosen.size() < 150) {
    const auto a = static_cast<Vertex>(rng.below(40));
    const auto b = static_cast<Vertex>(rng.below(40));
    if (a != b) chosen.insert(make_edge(a, b));
  }
  g.edges.assign(chosen.begin(), chosen.end());
  double total = 0;
  for (std::uint32_t r = 1; r <= 40; ++r)
    for (std::uint32_t s = 1; s <= r; ++s) total += expected_phi_given_graph(g, r, s);
  EXPECT_NEAR(total, 150.0, 1e-9);
}

TEST(Analytics, TauEstimate) {
  EXPECT_NEAR(tau_estimate(1e5, 1), 575646.27, 0.01);
  EXPECT_NEAR(tau_estimate(1e5, 2), 575646.27 + 5e4 * std::log(std::log(1e5)), 0.01);
  EXPECT_THROW(tau_estimate(2, 1), std::invalid_argument);
  EXPECT_THROW(tau_estimate(100, 0), std::invalid_argument);
}

TEST(Analytics, FormatRational) {
  EXPECT_EQ(format_rational(q(3, 4)), "3/4");
  EXPECT_EQ(format_rational(Rational(2)), "2");
  EXPECT_DOUBLE_EQ(to_double(q(11, 8)), 1.375);
}

TEST(Analytics, TableMatchesIndividualValues) {
  const auto t = build_table(5, 4);
  ASSERT_EQ(t.o.size(), 5u);
  ASSERT_EQ(t.f.size(), 6u);
  EXPECT_EQ(t.o[0], q(3, 4));
  EXPECT_EQ(t.f[2], q(33, 8));
  EXPECT_EQ(t.mu_rs[2][0], q(1, 8));
}
