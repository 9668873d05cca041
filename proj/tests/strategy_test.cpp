#include <gtest/gtest.h>

#include <cmath>

#include "buildsim/config.hpp"
#include "buildsim/harness.hpp"
#include "buildsim/rng.hpp"
#include "buildsim/strategy.hpp"

using namespace buildsim;

namespace {

EndpointView view(std::uint32_t gu, std::uint32_t gv, std::uint32_t bu, std::uint32_t bv) {
  return {gu, gv, bu, bv};
}

ExperimentConfig config_for(StrategyConfig s, std::uint32_t n, bool checked = true) {
  ExperimentConfig c;
  c.n = n;
  c.strategy = s;
  c.checked = checked;
  return c;
}

}  // namespace

TEST(Decide, GreedyBuysWhenEitherEndIsLow) {
  const StrategyConfig s{StrategyKind::kGreedyKnn, 1};
  StrategyState st(4, 1);
  EXPECT_TRUE(decide(s, st, 4, 1, {0, 1}, view(0, 0, 0, 0)).purchase);
  EXPECT_TRUE(decide(s, st, 4, 1, {0, 1}, view(2, 0, 1, 0)).purchase);
  EXPECT_FALSE(decide(s, st, 4, 1, {0, 1}, view(2, 3, 1, 1)).purchase);
}

TEST(Decide, BothEndsNeedsBothLow) {
  const StrategyConfig s{StrategyKind::kBothEnds, 2};
  StrategyState st(4, 2);
  EXPECT_TRUE(decide(s, st, 4, 1, {0, 1}, view(1, 0, 1, 0)).purchase);
  EXPECT_FALSE(decide(s, st, 4, 1, {0, 1}, view(2, 0, 2, 0)).purchase);
}

TEST(Decide, BuyAllAndBuyNone) {
  StrategyState st(4, 1);
  EXPECT_TRUE(decide({StrategyKind::kBuyAll}, st, 4, 1, {0, 1}, view(5, 5, 5, 5)).purchase);
  EXPECT_FALSE(decide({StrategyKind::kBuyNone}, st, 4, 1, {0, 1}, view(0, 0, 0, 0)).purchase);
}

TEST(AlgoDegK, PhaseOneTagsEfficientAndInefficient) {
  EXPECT_EQ(algo_deg_k_decide(2, 10, 3, view(1, 1, 1, 1)),
            (Decision{true, PurchaseTag::kEfficient}));
  EXPECT_EQ(algo_deg_k_decide(2, 10, 3, view(4, 0, 2, 0)),
            (Decision{true, PurchaseTag::kInefficient}));
  EXPECT_EQ(algo_deg_k_decide(2, 10, 3, view(3, 2, 2, 1)), (Decision{}));
  EXPECT_EQ(algo_deg_k_decide(2, 10, 10, view(3, 2, 2, 1)), (Decision{}));
}

TEST(AlgoDegK, PhaseTwoBuysAnyLowEnd) {
  EXPECT_EQ(algo_deg_k_decide(2, 10, 11, view(3, 2, 2, 1)),
            (Decision{true, PurchaseTag::kPhaseTwo}));
  EXPECT_EQ(algo_deg_k_decide(2, 10, 11, view(3, 2, 2, 2)), (Decision{}));
}

TEST(AlgoDeg1, PhaseOneMatchesIsolatedPairsOnly) {
  StrategyState st(4, 1);
  const Decision d = algo_deg_1_decide(st, 2, 1, {0, 1});
  EXPECT_EQ(d, (Decision{true, PurchaseTag::kEfficient}));
  update_sets(st, {0, 1}, d, view(0, 0, 0, 0));
  EXPECT_EQ(algo_deg_1_decide(st, 2, 2, {1, 2}), (Decision{}));
  update_sets(st, {1, 2}, {}, view(1, 0, 1, 0));
  // phase two: an isolated end is enough
  EXPECT_EQ(algo_deg_1_decide(st, 2, 3, {2, 3}), (Decision{true, PurchaseTag::kPhaseTwo}));
  EXPECT_EQ(algo_deg_1_decide(st, 2, 3, {0, 1}), (Decision{}));
}

TEST(StrategyState, ClassesFollowDegrees) {
  StrategyState st(5, 1);
  EXPECT_EQ(st.z_size(), 5u);
  EXPECT_EQ(st.u_size(), 5u);
  update_sets(st, {0, 1}, {true, PurchaseTag::kEfficient}, view(0, 0, 0, 0));
  EXPECT_EQ(st.x_size(), 2u);
  EXPECT_EQ(st.z_size(), 3u);
  EXPECT_EQ(st.u_size(), 3u);
  EXPECT_EQ(st.efficient_count(), 1u);
  update_sets(st, {1, 2}, {}, view(1, 0, 1, 0));
  EXPECT_EQ(st.vertex_class(2), VertexClass::kY);
  EXPECT_EQ(st.y_size(), 1u);
  EXPECT_EQ(st.z_size(), 2u);
  update_sets(st, {2, 3}, {true, PurchaseTag::kPhaseTwo}, view(1, 0, 0, 0));
  EXPECT_EQ(st.vertex_class(2), VertexClass::kX);
  EXPECT_EQ(st.vertex_class(3), VertexClass::kX);
  EXPECT_EQ(st.x_size() + st.y_size() + st.z_size(), 5u);
  EXPECT_EQ(st.purchase_count(), 2u);
  EXPECT_EQ(st.u_size(), 1u);
}

TEST(StrategyState, UCountsBuilderDegreeBelowK) {
  StrategyState st(4, 2);
  update_sets(st, {0, 1}, {true, PurchaseTag::kEfficient}, view(0, 0, 0, 0));
  EXPECT_EQ(st.u_size(), 4u);
  update_sets(st, {0, 2}, {true, PurchaseTag::kEfficient}, view(1, 0, 1, 0));
  EXPECT_EQ(st.u_size(), 3u);
}

TEST(StrategyState, InconsistentDegreesThrow) {
  StrategyState st(4, 1);
  // vertex 0 is in Z but the view says it was already exposed
  EXPECT_THROW(update_sets(st, {0, 1}, {}, view(1, 0, 0, 0)), std::logic_error);
  StrategyState st2(4, 1);
  update_sets(st2, {0, 1}, {true, PurchaseTag::kEfficient}, view(0, 0, 0, 0));
  EXPECT_THROW(update_sets(st2, {0, 2}, {}, view(1, 0, 0, 0)), std::logic_error);
}

TEST(StrategyConfig, ValidateRejectsBadParameters) {
  EXPECT_THROW((StrategyConfig{StrategyKind::kGreedyKnn, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((StrategyConfig{StrategyKind::kGreedyKnn, 1, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((StrategyConfig{StrategyKind::kGreedyKnn, 1, NAN}.validate()), std::invalid_argument);
  EXPECT_THROW((StrategyConfig{StrategyKind::kAlgoDegK, 1, 4.0, 0.1}.validate()),
               std::invalid_argument);
  EXPECT_THROW((StrategyConfig{StrategyKind::kAlgoDegK, 2, 4.0, 0.0}.validate()),
               std::invalid_argument);
  EXPECT_THROW((StrategyConfig{StrategyKind::kAlgoDegK, 2, 4.0, 0.1, 0.5}.validate()),
               std::invalid_argument);
  EXPECT_NO_THROW((StrategyConfig{StrategyKind::kAlgoDegK, 2, 8.0, 0.1, 0.5}.validate()));
  EXPECT_THROW((StrategyConfig{StrategyKind::kAlgoDeg1, 2, 2.0}.validate()), std::invalid_argument);
  // epsilon = C^{-1/2} must stay below 3/4
  EXPECT_THROW((StrategyConfig{StrategyKind::kAlgoDeg1, 1, 1.5}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((StrategyConfig{StrategyKind::kAlgoDeg1, 1, 2.0}.validate()));
  EXPECT_THROW((StrategyConfig{StrategyKind::kAlgoDeg1, 1, 2.0, 0, 0.5}.validate()),
               std::invalid_argument);
  EXPECT_NO_THROW((StrategyConfig{StrategyKind::kBothEnds, 2, 32.0, 0, 0.25}.validate()));
  EXPECT_THROW((StrategyConfig{StrategyKind::kBothEnds, 2, 30.0, 0, 0.25}.validate()),
               std::invalid_argument);
}

TEST(StrategyConfig, PhaseOneStepsRoundsUp) {
  EXPECT_EQ((StrategyConfig{StrategyKind::kAlgoDeg1, 1, 2.0}.phase_one_steps(1001)), 2002u);
  EXPECT_EQ((StrategyConfig{StrategyKind::kAlgoDegK, 2, 0.6, 0.1}.phase_one_steps(1001)), 601u);
}

TEST(StrategyNames, RoundTrip) {
  for (auto kind : {StrategyKind::kGreedyKnn, StrategyKind::kBothEnds, StrategyKind::kAlgoDegK,
                    StrategyKind::kAlgoDeg1, StrategyKind::kBuyAll, StrategyKind::kBuyNone}) {
    EXPECT_EQ(parse_strategy_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_strategy_kind("nope"), std::invalid_argument);
}

// Every first-phase purchase of algo_deg_1 joins two Builder-isolated vertices.
TEST(StrategyProperty, AlgoDeg1PhaseOneIsAMatching) {
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto r = run_trial(config_for({StrategyKind::kAlgoDeg1, 1, 2.0}, 400), trial_seed(3, t));
    ASSERT_TRUE(r.phase_one_completed);
    EXPECT_EQ(2 * r.purchases_at_cn, 400 - r.y_at_cn - r.z_at_cn);
    EXPECT_EQ(r.efficient, r.purchases_at_cn);
  }
}

TEST(StrategyProperty, AlgoDegKBudgetSplits) {
  for (std::uint64_t t = 0; t < 10; ++t) {
    const auto r = run_trial(config_for({StrategyKind::kAlgoDegK, 2, 0.6, 0.1}, 600),
                             trial_seed(4, t));
    EXPECT_LE(r.efficient + r.inefficient, r.purchases);
    EXPECT_LE(r.efficient, 600u);  // at most kn/2 edges with both ends below k
    EXPECT_EQ(r.purchases_at_cn, r.efficient + r.inefficient);
    if (r.success) {
      EXPECT_GE(r.min_builder_deg_at_tau, 2u);
    }
  }
}

TEST(StrategyProperty, GreedyAlwaysSucceedsWithinBudget) {
  for (std::uint32_t k : {1u, 2u, 3u}) {
    for (std::uint64_t t = 0; t < 10; ++t) {
      const std::uint32_t n = 200 + static_cast<std::uint32_t>(t) * 17;
      const auto r = run_trial(config_for({StrategyKind::kGreedyKnn, k}, n), trial_seed(k, t));
      EXPECT_TRUE(r.success);
      EXPECT_GE(r.min_builder_deg_at_tau, k);
      EXPECT_LE(r.purchases, static_cast<std::uint64_t>(k) * n);
      EXPECT_GE(r.purchases, (static_cast<std::uint64_t>(k) * n + 1) / 2);
    }
  }
}

TEST(StrategyProperty, CheckedRunsAgreeWithUnchecked) {
  for (auto s : {StrategyConfig{StrategyKind::kAlgoDegK, 3, 1.0, 0.1},
                 StrategyConfig{StrategyKind::kAlgoDeg1, 1, 2.0},
                 StrategyConfig{StrategyKind::kBothEnds, 2, 4.0}}) {
    for (std::uint64_t t = 0; t < 5; ++t) {
      const auto checked = run_trial(config_for(s, 300, true), trial_seed(8, t));
      const auto plain = run_trial(config_for(s, 300, false), trial_seed(8, t));
      EXPECT_EQ(checked, plain) << to_string(s.kind);
    }
  }
}
