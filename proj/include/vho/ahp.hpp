#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "vho/decision_matrix.hpp"

namespace vho {

// Square reciprocal matrix of pairwise importance judgments on Saaty's
// 1/9..9 scale. judgments(i, j) is how much more important label i is than j.
struct PairwiseComparisonMatrix {
  static constexpr double kReciprocityTolerance = 1e-9;

  std::vector<std::string> labels;
  Grid judgments;

  std::size_t size() const { return labels.size(); }

  void validate() const {
    const std::size_t k = labels.size();
    if (k == 0) throw Error(Errc::empty_input, "comparison matrix has no criteria");
    if (judgments.rows() != k || judgments.cols() != k)
      throw Error(Errc::dimension_mismatch, "comparison matrix must be " + std::to_string(k) + "x" +
                                                std::to_string(k) + " to match its labels");
    constexpr double lo = 1.0 / 9.0 - 1e-12, hi = 9.0 + 1e-12;
    for (std::size_t i = 0; i < k; ++i) {
      if (judgments(i, i) != 1.0)
        throw Error(Errc::not_reciprocal, "diagonal entry " + labels[i] + " must be exactly 1");
      for (std::size_t j = 0; j < k; ++j) {
        const double a = judgments(i, j);
        const std::string cell = "(" + labels[i] + ", " + labels[j] + ")";
        if (!std::isfinite(a)) throw Error(Errc::non_finite, "judgment " + cell + " is not finite");
        if (a <= 0.0) throw Error(Errc::out_of_range, "judgment " + cell + " must be positive");
        if (a < lo || a > hi) throw Error(Errc::out_of_range, "judgment " + cell + " outside [1/9, 9]");
        if (std::abs(a * judgments(j, i) - 1.0) > kReciprocityTolerance)
          throw Error(Errc::not_reciprocal, "judgment " + cell + " is not the reciprocal of its mirror");
      }
    }
  }

  friend bool operator==(const PairwiseComparisonMatrix&, const PairwiseComparisonMatrix&) = default;
};

// Row geometric means, normalized. Coincides with the principal eigenvector
// for k <= 3 and for perfectly consistent matrices.
inline WeightVector ahp_weights(const PairwiseComparisonMatrix& p) {
  p.validate();
  const std::size_t k = p.size();
  std::vector<double> gm(k);
  for (std::size_t i = 0; i < k; ++i) {
    double log_sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) log_sum += std::log(p.judgments(i, j));
    gm[i] = std::exp(log_sum / static_cast<double>(k));
  }
  return WeightVector::normalized(std::move(gm));
}

// Saaty's random consistency index for k = 1..10.
inline double random_index(std::size_t k) {
  static constexpr std::array<double, 11> ri = {0.0, 0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49};
  if (k == 0 || k >= ri.size())
    throw Error(Errc::out_of_range, "no random index tabulated for " + std::to_string(k) + " criteria");
  return ri[k];
}

inline double principal_eigenvalue_estimate(const PairwiseComparisonMatrix& p, const WeightVector& w) {
  const std::size_t k = p.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    double aw = 0.0;
    for (std::size_t j = 0; j < k; ++j) aw += p.judgments(i, j) * w[j];
    sum += aw / w[i];
  }
  return sum / static_cast<double>(k);
}

// CR = ((lambda_max - k) / (k - 1)) / RI(k); zero for k <= 2.
inline double consistency_ratio(const PairwiseComparisonMatrix& p) {
  const WeightVector w = ahp_weights(p);
  const std::size_t k = p.size();
  if (k <= 2) return 0.0;
  const double lambda = principal_eigenvalue_estimate(p, w);
  const double ci = (lambda - static_cast<double>(k)) / static_cast<double>(k - 1);
  return ci / random_index(k);
}

inline constexpr double kConsistencyWarningThreshold = 0.1;

// Reciprocal matrix a_ij = w_i / w_j from generating priorities.
inline PairwiseComparisonMatrix consistent_matrix(std::vector<std::string> labels,
                                                  const std::vector<double>& priorities) {
  if (labels.size() != priorities.size())
    throw Error(Errc::dimension_mismatch, "one priority per label required");
  const std::size_t k = labels.size();
  PairwiseComparisonMatrix p{std::move(labels), Grid(k, k)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) p.judgments(i, j) = i == j ? 1.0 : priorities[i] / priorities[j];
  return p;
}

}  // namespace vho
