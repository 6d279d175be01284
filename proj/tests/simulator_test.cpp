#include <gtest/gtest.h>

#include <numeric>

#include "test_support.hpp"

namespace vho {
namespace {

using testing::make_matrix;

WeightVector reference_weights() { return ahp_weights(default_attribute_judgments(TrafficClass::conversational)); }

ScenarioSpec fixed_only_scenario() {
  ScenarioSpec s = reference_scenario(50, 9);
  for (NetworkSpec& n : s.networks)
    for (AttributeSpec& a : n.attributes) a.model = ValueModel::fixed(a.model.lo + 0.5 * (a.model.hi - a.model.lo));
  return s;
}

TEST(SampleDecisionMatrix, ReferenceRowsRespectTheirRanges) {
  const ScenarioSpec s = reference_scenario();
  const DecisionMatrix m = sample_decision_matrix(s, 3);
  ASSERT_EQ(m.alternatives.front(), "UMTS1");
  EXPECT_EQ(m.values(0, 0), 60.0);
  EXPECT_EQ(m.values(0, 1), 70.0);
  EXPECT_GE(m.values(0, 2), 0.1);
  EXPECT_LE(m.values(0, 2), 2.0);
  EXPECT_GE(m.values(0, 3), 25.0);
  EXPECT_LE(m.values(0, 3), 50.0);
  EXPECT_GE(m.values(0, 4), 5.0);
  EXPECT_LE(m.values(0, 4), 10.0);
  EXPECT_GE(m.values(0, 5), 20.0);
  EXPECT_LE(m.values(0, 5), 80.0);
}

TEST(SampleDecisionMatrix, DegenerateRangeIsConstant) {
  ScenarioSpec s = reference_scenario(10, 3);
  s.networks[0].attributes[2].model = ValueModel::uniform(4.25, 4.25);
  for (std::size_t t = 0; t < 10; ++t) EXPECT_EQ(sample_decision_matrix(s, t).values(0, 2), 4.25);
}

TEST(SampleDecisionMatrix, DeterministicPerSeedAndEpoch) {
  const ScenarioSpec s = reference_scenario(100, 42);
  EXPECT_EQ(sample_decision_matrix(s, 17), sample_decision_matrix(s, 17));
  EXPECT_NE(sample_decision_matrix(s, 17), sample_decision_matrix(s, 18));
  ScenarioSpec other = s;
  other.seed = 43;
  EXPECT_NE(sample_decision_matrix(s, 17), sample_decision_matrix(other, 17));
}

TEST(SampleDecisionMatrix, MoreEpochsNeverPerturbEarlierDraws) {
  const ScenarioSpec short_run = reference_scenario(5, 8);
  const ScenarioSpec long_run = reference_scenario(5000, 8);
  for (std::size_t t = 0; t < 5; ++t) EXPECT_EQ(sample_decision_matrix(short_run, t), sample_decision_matrix(long_run, t));
}

TEST(SampleDecisionMatrix, DrawsStayInsideDeclaredRanges) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ScenarioSpec s = reference_scenario(20, seed);
    for (std::size_t t = 0; t < 20; ++t) {
      const DecisionMatrix m = sample_decision_matrix(s, t);
      for (std::size_t i = 0; i < s.networks.size(); ++i)
        for (std::size_t j = 0; j < m.num_attributes(); ++j) {
          const ValueModel& vm = s.networks[i].attributes[j].model;
          ASSERT_GE(m.values(i, j), vm.lo);
          ASSERT_LE(m.values(i, j), vm.hi);
        }
    }
  }
}

TEST(ScenarioSpec, ValidationErrors) {
  ScenarioSpec s = reference_scenario(1);
  EXPECT_THROW(s.validate(), Error);
  s = reference_scenario();
  s.networks[1].attributes.pop_back();
  EXPECT_THROW(s.validate(), Error);
  s = reference_scenario();
  s.networks[2].attributes[0].attribute.direction = Direction::benefit;
  EXPECT_THROW(s.validate(), Error);
  s = reference_scenario();
  s.networks[0].attributes[3].model = ValueModel::uniform(9, 3);
  EXPECT_THROW(s.validate(), Error);
}

TEST(DetectAbnormality, TwoAlternativesNeverAbnormal) {
  const DecisionMatrix m = make_matrix({{1, 5}, {4, 2}}, {Direction::benefit, Direction::cost});
  for (Method method : kAllMethods) EXPECT_FALSE(detect_abnormality(m, WeightVector({0.5, 0.5}), method));
}

TEST(DetectAbnormality, InteriorWorstRowLeavesNormalizationUnchanged) {
  // Row 3 is ranked last by GRA and DIA but holds no column min or max.
  const DecisionMatrix m = make_matrix({{10, 2}, {2, 10}, {6, 6}, {3, 3}}, {Direction::benefit, Direction::benefit});
  const WeightVector w({0.5, 0.5});
  for (Method method : {Method::gra, Method::dia}) {
    ASSERT_EQ(rank(method, m, w).order.back(), 3u) << to_string(method);
    EXPECT_FALSE(detect_abnormality(m, w, method)) << to_string(method);
    EXPECT_FALSE(detect_abnormality(m, w, method, AbnormalityMode::top)) << to_string(method);
  }
}

// Instance found by tests/oracles/abnormality_oracle.py via randomized
// search with an exhaustive re-rank check.
TEST(DetectAbnormality, FrozenGraRankReversal) {
  const Json g = testing::load_golden("abnormality.json")["gra_reversal"];
  std::vector<Direction> dirs;
  for (bool b : g["benefit"]) dirs.push_back(b ? Direction::benefit : Direction::cost);
  const DecisionMatrix m = make_matrix(g["values"].get<std::vector<std::vector<double>>>(), dirs);
  const WeightVector w(g["weights"].get<std::vector<double>>());
  EXPECT_TRUE(detect_abnormality(m, w, Method::gra));
  // The reversal swaps the top two survivors, so the top-only mode fires too.
  EXPECT_TRUE(detect_abnormality(m, w, Method::gra, AbnormalityMode::top));
}

TEST(RunEpisode, FixedAttributesNeverHandOff) {
  const ScenarioSpec s = fixed_only_scenario();
  for (Method method : kAllMethods) {
    const EpisodeMetrics e = run_episode(s, method, reference_weights());
    EXPECT_EQ(e.handoff_pct, 0.0);
    EXPECT_TRUE(e.abnormality_pct == 0.0 || e.abnormality_pct == 100.0);
  }
}

TEST(RunEpisode, TwoEpochsWithDifferentChoicesIsFullHandoff) {
  bool found = false;
  for (std::uint64_t seed = 0; seed < 200 && !found; ++seed) {
    const EpisodeMetrics e = run_episode(reference_scenario(2, seed), Method::topsis, reference_weights());
    if (e.selections[0] != e.selections[1]) {
      EXPECT_EQ(e.handoff_pct, 100.0);
      found = true;
    } else {
      EXPECT_EQ(e.handoff_pct, 0.0);
    }
  }
  EXPECT_TRUE(found);
}

TEST(RunEpisode, HandoffRateMatchesSelections) {
  for (Method method : kAllMethods) {
    const EpisodeMetrics e = run_episode(reference_scenario(300, 5), method, reference_weights());
    ASSERT_EQ(e.selections.size(), 300u);
    std::size_t switches = 0;
    for (std::size_t t = 1; t < e.selections.size(); ++t) switches += e.selections[t] != e.selections[t - 1];
    EXPECT_DOUBLE_EQ(e.handoff_pct, 100.0 * static_cast<double>(switches) / 299.0);
    for (std::size_t sel : e.selections) EXPECT_LT(sel, 6u);
  }
}

TEST(RunEpisode, ReferenceScenarioSanity) {
  for (Method method : kAllMethods) {
    const EpisodeMetrics e = run_episode(reference_scenario(1000, 77), method, reference_weights());
    EXPECT_GE(e.abnormality_pct, 0.0);
    EXPECT_LE(e.abnormality_pct, 100.0);
    EXPECT_GT(e.handoff_pct, 0.0);
    EXPECT_LE(e.handoff_pct, 100.0);
  }
}

TEST(RunEpisode, Deterministic) {
  const ScenarioSpec s = reference_scenario(400, 1234);
  for (Method method : kAllMethods) EXPECT_EQ(run_episode(s, method, reference_weights()), run_episode(s, method, reference_weights()));
}

TEST(RunEpisode, TwoNetworksNeverAbnormal) {
  ScenarioSpec s = reference_scenario(200, 3);
  s.networks.resize(2);
  for (Method method : kAllMethods) EXPECT_EQ(run_episode(s, method, reference_weights()).abnormality_pct, 0.0);
}

TEST(RunEpisode, RankerErrorsCarryEpoch) {
  ScenarioSpec s = reference_scenario(10, 3);
  for (NetworkSpec& n : s.networks) n.attributes[0].model = ValueModel::fixed(0.0);
  try {
    run_episode(s, Method::topsis, reference_weights());
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_column);
    EXPECT_NE(std::string(e.what()).find("epoch 0"), std::string::npos);
  }
}

TEST(RunEpisode, WeightCountMustMatch) {
  EXPECT_THROW(run_episode(reference_scenario(), Method::gra, WeightVector({0.5, 0.5})), Error);
}

TEST(SummarizeMetrics, SingleRunIsItself) {
  const EpisodeMetrics e{Method::gra, 1, 12.5, 40.0, {}};
  const auto s = summarize_metrics(std::vector<EpisodeMetrics>{e});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].abnormality_pct, 12.5);
  EXPECT_EQ(s[0].handoff_pct, 40.0);
}

TEST(SummarizeMetrics, ArithmeticMean) {
  const std::vector<EpisodeMetrics> runs{{Method::dia, 1, 20.0, 10.0, {}}, {Method::dia, 2, 40.0, 30.0, {}}};
  const auto s = summarize_metrics(runs);
  EXPECT_EQ(s[0].abnormality_pct, 30.0);
  EXPECT_EQ(s[0].handoff_pct, 20.0);
  EXPECT_EQ(s[0].runs, 2u);
}

TEST(SummarizeMetrics, EmptyIsAnError) { EXPECT_THROW(summarize_metrics({}), Error); }

TEST(SummarizeMetrics, MatchesRecomputationFromStoredRuns) {
  std::vector<EpisodeMetrics> runs;
  for (std::uint64_t r = 0; r < 10; ++r)
    for (Method method : kAllMethods)
      runs.push_back(run_episode(reference_scenario(200, derive_seed(99, r)), method, reference_weights()));
  const auto summary = summarize_metrics(runs);
  ASSERT_EQ(summary.size(), 3u);
  for (const MethodSummary& s : summary) {
    double ab = 0.0, ho = 0.0;
    int count = 0;
    for (const EpisodeMetrics& e : runs)
      if (e.method == s.method) ab += e.abnormality_pct, ho += e.handoff_pct, ++count;
    EXPECT_EQ(count, 10);
    EXPECT_NEAR(s.abnormality_pct, ab / count, 1e-12);
    EXPECT_NEAR(s.handoff_pct, ho / count, 1e-12);
  }
}

TEST(CounterRng, UnitIntervalAndIndependentCoordinates) {
  const CounterRng rng(5);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const double u = rng.unit({i, 0, 0});
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  EXPECT_GE(lo, 0.0);
  EXPECT_LT(hi, 1.0);
  EXPECT_NEAR(sum / 100000.0, 0.5, 0.01);
  EXPECT_NE(rng.unit({1, 2, 3}), rng.unit({1, 3, 2}));
}

}  // namespace
}  // namespace vho
