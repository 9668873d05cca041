#include <gtest/gtest.h>

#include <cmath>

#include "buildsim/experiments.hpp"

using namespace buildsim;

TEST(PhiExperiment, CellsStayBelowStopDegree) {
  const auto res = phi_experiment(2000, 6, 20, 3);
  EXPECT_GE(res.steps, 3 * 2000u);
  for (const auto& [cell, density] : res.density) {
    EXPECT_GE(cell.first, cell.second);
    EXPECT_LE(cell.first + cell.second, 6u);
    EXPECT_GE(density, 0.0);
  }
  EXPECT_TRUE(res.density.count({1, 1}));
  EXPECT_THROW(phi_experiment(2000, 1, 20, 3), std::invalid_argument);
  EXPECT_THROW(phi_experiment(100, 6, 200, 3), std::invalid_argument);
}

TEST(DegreeFractions, SumToOneWithoutTail) {
  const auto fr = degree_fractions(5000, 5000, 30, 1);
  double sum = 0;
  for (double x : fr) sum += x;
  EXPECT_NEAR(sum, 1.0, 1e-9);
  // m = n steps: average degree 2
  double mean = 0;
  for (std::size_t d = 0; d < fr.size(); ++d) mean += static_cast<double>(d) * fr[d];
  EXPECT_NEAR(mean, 2.0, 1e-9);
}

TEST(SuccessProb, EmptyYMeansSuccess) {
  const auto res = success_prob_experiment(300, 2.0, 200, 4);
  ASSERT_EQ(res.trials.size(), 200u);
  for (const auto& t : res.trials) {
    if (t.y == 0) {
      EXPECT_TRUE(t.success);
      EXPECT_DOUBLE_EQ(t.ratio(), 1.0);
    }
    EXPECT_LE(t.purchases, 300u);
  }
  EXPECT_GE(res.mean_success, res.success_interval.low);
  EXPECT_LE(res.mean_success, res.success_interval.high);
}

TEST(LastCovered, UniformOverRemainingVertices) {
  const auto res = last_covered_experiment(500, 2.0, 10000, 8, 20);
  EXPECT_GE(res.trials.size(), 9900u);
  EXPECT_GT(res.uniformity.p_value, 1e-3);
  double y_share = 0, hit_y = 0;
  for (const auto& t : res.trials) {
    EXPECT_LT(t.rank, t.set_size);
    EXPECT_GE(t.pit, 0.0);
    EXPECT_LT(t.pit, 1.0);
    y_share += static_cast<double>(t.y_size) / static_cast<double>(t.set_size);
    hit_y += t.last_in_y ? 1.0 : 0.0;
  }
  const double m = static_cast<double>(res.trials.size());
  EXPECT_NEAR(hit_y / m, y_share / m, 4 * std::sqrt(0.25 / m));
}

TEST(Trace, SnapshotsAreConsistent) {
  ExperimentConfig c;
  c.n = 2000;
  c.strategy = {StrategyKind::kAlgoDeg1, 1, 2.0};
  const auto res = trace_experiment(c, 12);
  const auto expected = default_checkpoints(4000);
  ASSERT_EQ(res.snapshots.size(), expected.size());
  EXPECT_EQ(res.snapshots.back().step, 4000u);
  TraceSnapshot prev;
  for (const auto& s : res.snapshots) {
    EXPECT_EQ(s.x + s.y + s.z, 2000u);
    EXPECT_LE(s.e1, s.e_o1);
    EXPECT_LE(s.e1, s.purchases);
    EXPECT_EQ(s.x, 2 * s.purchases);  // first-phase purchases form a matching
    EXPECT_GE(s.purchases, prev.purchases);
    EXPECT_LE(s.z, prev.step == 0 ? 2000u : prev.z);
    prev = s;
  }
}

TEST(Trace, CheckpointsMustLieInFirstPhase) {
  ExperimentConfig c;
  c.n = 100;
  c.strategy = {StrategyKind::kAlgoDeg1, 1, 2.0};
  c.checkpoints = {0};
  EXPECT_THROW(trace_experiment(c, 1), std::invalid_argument);
  c.checkpoints = {201};
  EXPECT_THROW(trace_experiment(c, 1), std::invalid_argument);
  c.checkpoints = {3, 200};
  EXPECT_EQ(trace_experiment(c, 1).snapshots.size(), 2u);
}

TEST(Trace, DefaultCheckpoints) {
  EXPECT_EQ(default_checkpoints(10), (std::vector<std::uint64_t>{1, 2, 4, 8, 10}));
  EXPECT_EQ(default_checkpoints(8), (std::vector<std::uint64_t>{1, 2, 4, 8}));
}
