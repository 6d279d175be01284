#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "test_support.hpp"

namespace vho {
namespace {

PairwiseComparisonMatrix two_by_two(double x) {
  return PairwiseComparisonMatrix{{"a", "b"}, Grid::from_rows({{1.0, x}, {1.0 / x, 1.0}})};
}

TEST(AhpWeights, ReferenceTwoByTwoJudgments) {
  const WeightVector equal = ahp_weights(two_by_two(1.0));
  EXPECT_DOUBLE_EQ(equal[0], 0.5);
  EXPECT_DOUBLE_EQ(equal[1], 0.5);

  const struct {
    double handoffs_over_abnormality;
    double w0, w1;
  } cases[] = {{3, 0.250, 0.750}, {5, 0.167, 0.833}, {7, 0.125, 0.875}};
  for (const auto& c : cases) {
    const WeightVector w = ahp_weights(two_by_two(1.0 / c.handoffs_over_abnormality));
    EXPECT_NEAR(w[0], c.w0, 1e-3);
    EXPECT_NEAR(w[1], c.w1, 1e-3);
  }
}

TEST(AhpWeights, TwoByTwoClosedForm) {
  for (int step = 0; step <= 160; ++step) {
    const double x = std::exp(std::log(1.0 / 9.0) + step * (std::log(81.0) / 160.0));
    const double clamped = std::clamp(x, 1.0 / 9.0, 9.0);
    const WeightVector w = ahp_weights(two_by_two(clamped));
    EXPECT_NEAR(w[0], clamped / (1.0 + clamped), 1e-12);
    EXPECT_NEAR(w[1], 1.0 / (1.0 + clamped), 1e-12);
  }
}

TEST(AhpWeights, ConsistentMatricesRecoverPriorities) {
  testing::InstanceGenerator gen(5);
  for (int t = 0; t < 500; ++t) {
    const std::size_t k = gen.index(2, 8);
    std::vector<double> p(k);
    for (double& x : p) x = gen.real(1.0, 9.0);  // ratios stay within [1/9, 9]
    std::vector<std::string> labels(k);
    for (std::size_t i = 0; i < k; ++i) labels[i] = "c" + std::to_string(i);
    const WeightVector w = ahp_weights(consistent_matrix(labels, p));
    const double sum = std::accumulate(p.begin(), p.end(), 0.0);
    for (std::size_t i = 0; i < k; ++i) EXPECT_NEAR(w[i], p[i] / sum, 1e-9);
  }
}

TEST(AhpWeights, PositiveAndSumToOne) {
  testing::InstanceGenerator gen(6);
  for (int t = 0; t < 500; ++t) {
    const std::size_t k = gen.index(2, 7);
    PairwiseComparisonMatrix p{std::vector<std::string>(k, "x"), Grid(k, k, 1.0)};
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        const double a = std::exp(gen.real(std::log(1.0 / 9.0), std::log(9.0)));
        p.judgments(i, j) = a;
        p.judgments(j, i) = 1.0 / a;
      }
    const WeightVector w = ahp_weights(p);
    double sum = 0.0;
    for (double x : w.values()) {
      EXPECT_GT(x, 0.0);
      sum += x;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(AhpWeights, RelabelingPermutesWeights) {
  const PairwiseComparisonMatrix p{{"a", "b", "c"}, Grid::from_rows({{1, 3, 5}, {1.0 / 3, 1, 4}, {1.0 / 5, 1.0 / 4, 1}})};
  const std::vector<std::size_t> perm = {2, 0, 1};
  PairwiseComparisonMatrix q{{"c", "a", "b"}, Grid(3, 3)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) q.judgments(i, j) = p.judgments(perm[i], perm[j]);
  const WeightVector wp = ahp_weights(p), wq = ahp_weights(q);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(wq[i], wp[perm[i]], 1e-15);
}

TEST(AhpWeights, RejectsInvalidMatrices) {
  auto code_of = [](const PairwiseComparisonMatrix& p) {
    try {
      ahp_weights(p);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io;  // sentinel: no error raised
  };
  EXPECT_EQ(code_of({{"a", "b"}, Grid::from_rows({{1, -2}, {-0.5, 1}})}), Errc::out_of_range);
  EXPECT_EQ(code_of({{"a", "b"}, Grid::from_rows({{1, 3}, {0.5, 1}})}), Errc::not_reciprocal);
  EXPECT_EQ(code_of({{"a", "b"}, Grid::from_rows({{2, 3}, {1.0 / 3, 1}})}), Errc::not_reciprocal);
  EXPECT_EQ(code_of({{"a", "b"}, Grid::from_rows({{1, 12}, {1.0 / 12, 1}})}), Errc::out_of_range);
  EXPECT_EQ(code_of({{"a", "b", "c"}, Grid::from_rows({{1, 3}, {1.0 / 3, 1}})}), Errc::dimension_mismatch);
}

TEST(ConsistencyRatio, TwoByTwoIsAlwaysZero) {
  for (double x : {1.0 / 9, 1.0 / 3, 1.0, 2.0, 7.0, 9.0}) EXPECT_EQ(consistency_ratio(two_by_two(x)), 0.0);
}

TEST(ConsistencyRatio, ConsistentThreeByThreeIsZero) {
  const PairwiseComparisonMatrix p{{"a", "b", "c"}, Grid::from_rows({{1, 2, 4}, {0.5, 1, 2}, {0.25, 0.5, 1}})};
  EXPECT_NEAR(consistency_ratio(p), 0.0, 1e-6);
}

// Principal eigenvalue by power iteration; independent of the geometric
// mean route used by consistency_ratio.
double power_iteration_cr(const PairwiseComparisonMatrix& p) {
  const std::size_t k = p.size();
  std::vector<double> x(k, 1.0), y(k);
  double lambda = 0.0;
  for (int it = 0; it < 5000; ++it) {
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      y[i] = 0.0;
      for (std::size_t j = 0; j < k; ++j) y[i] += p.judgments(i, j) * x[j];
      sx += x[i];
      sy += y[i];
    }
    lambda = sy / sx;
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / sy;
  }
  return ((lambda - static_cast<double>(k)) / static_cast<double>(k - 1)) / random_index(k);
}

TEST(ConsistencyRatio, PerturbedThreeByThreeMatchesEigenOracle) {
  const Json golden = testing::load_golden("abnormality.json")["perturbed_3x3"];
  const auto rows = golden["matrix"].get<std::vector<std::vector<double>>>();
  const PairwiseComparisonMatrix p{{"a", "b", "c"}, Grid::from_rows(rows)};
  const double frozen = golden["consistency_ratio"];
  EXPECT_NEAR(consistency_ratio(p), frozen, 1e-6);
  EXPECT_NEAR(consistency_ratio(p), power_iteration_cr(p), 1e-6);
  EXPECT_GT(consistency_ratio(p), 0.0);
}

TEST(ConsistencyRatio, RandomThreeByThreeMatchEigenOracle) {
  testing::InstanceGenerator gen(31);
  for (int t = 0; t < 200; ++t) {
    PairwiseComparisonMatrix p{{"a", "b", "c"}, Grid(3, 3, 1.0)};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        const double a = std::exp(gen.real(std::log(1.0 / 9.0), std::log(9.0)));
        p.judgments(i, j) = a;
        p.judgments(j, i) = 1.0 / a;
      }
    EXPECT_NEAR(consistency_ratio(p), power_iteration_cr(p), 1e-6);
  }
}

TEST(TrafficDefaults, AttributeJudgmentsAreValidAndConsistent) {
  for (TrafficClass t : kAllTrafficClasses) {
    const PairwiseComparisonMatrix p = default_attribute_judgments(t);
    EXPECT_NO_THROW(p.validate()) << to_string(t);
    EXPECT_LT(consistency_ratio(p), kConsistencyWarningThreshold) << to_string(t);
  }
}

}  // namespace
}  // namespace vho
