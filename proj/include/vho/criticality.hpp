#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "vho/ahp.hpp"
#include "vho/decision_matrix.hpp"

namespace vho {

// Measured performance of each handover algorithm (rows) on each
// evaluation parameter (columns).
struct EvaluationMatrix {
  std::vector<std::string> algorithms;
  std::vector<Attribute> parameters;
  Grid values;

  void validate() const {
    if (algorithms.empty()) throw Error(Errc::empty_input, "evaluation matrix has no algorithms");
    if (parameters.empty()) throw Error(Errc::empty_input, "evaluation matrix has no parameters");
    if (values.rows() != algorithms.size() || values.cols() != parameters.size())
      throw Error(Errc::dimension_mismatch, "evaluation grid is " + std::to_string(values.rows()) + "x" +
                                                std::to_string(values.cols()) + ", expected " +
                                                std::to_string(algorithms.size()) + "x" +
                                                std::to_string(parameters.size()));
    for (std::size_t i = 0; i < values.rows(); ++i)
      for (std::size_t j = 0; j < values.cols(); ++j) {
        const std::string cell = algorithms[i] + "/" + parameters[j].name;
        if (!std::isfinite(values(i, j))) throw Error(Errc::non_finite, "non-finite measurement " + cell);
        if (values(i, j) < 0.0) throw Error(Errc::negative_value, "negative measurement " + cell);
      }
  }

  friend bool operator==(const EvaluationMatrix&, const EvaluationMatrix&) = default;
};

// The two evaluation parameters; both are costs (a higher rate is worse).
inline std::vector<Attribute> default_evaluation_parameters() {
  return {{"Ranking abnormality", "%", Direction::cost}, {"Number of handoffs", "%", Direction::cost}};
}

enum class NormalizationMode {
  max_ratio,     // d = v / column max for every column
  min_ratio,     // cost columns use d = column min / v instead
};

using LevelGrid = std::vector<std::vector<int>>;

inline constexpr int kCriticalityLevels[] = {1, 3, 5, 7, 9};

inline Grid normalize_evaluation(const EvaluationMatrix& em, NormalizationMode mode = NormalizationMode::max_ratio) {
  em.validate();
  const Grid& v = em.values;
  Grid d(v.rows(), v.cols());
  for (std::size_t j = 0; j < v.cols(); ++j) {
    double lo = v(0, j), hi = v(0, j);
    for (std::size_t i = 1; i < v.rows(); ++i) {
      lo = std::min(lo, v(i, j));
      hi = std::max(hi, v(i, j));
    }
    if (hi <= 0.0) throw Error(Errc::zero_column, "column " + em.parameters[j].name + " has a zero maximum");
    const bool inverse = mode == NormalizationMode::min_ratio && em.parameters[j].direction == Direction::cost;
    for (std::size_t i = 0; i < v.rows(); ++i) {
      if (inverse) {
        if (v(i, j) == 0.0)
          throw Error(Errc::zero_column, "strict cost normalization needs nonzero values; " + em.algorithms[i] +
                                             "/" + em.parameters[j].name + " is 0");
        d(i, j) = lo / v(i, j);
      } else {
        d(i, j) = v(i, j) / hi;
      }
    }
  }
  return d;
}

// Valuation scale: the fraction of the column maximum falls into one of five
// bands with strict lower bounds at 0.8, 0.6, 0.4 and 0.2. For cost
// parameters the top band is level 1 and the bottom band level 9; benefit
// parameters use the reversed sequence. d = 0 belongs to the bottom band.
inline int criticality_level(double d, Direction direction) {
  if (!(d >= 0.0 && d <= 1.0))
    throw Error(Errc::out_of_range, "normalized value " + std::to_string(d) + " outside [0, 1]");
  int band;  // 0 = top band
  if (d > 0.8) band = 0;
  else if (d > 0.6) band = 1;
  else if (d > 0.4) band = 2;
  else if (d > 0.2) band = 3;
  else band = 4;
  return direction == Direction::cost ? kCriticalityLevels[band] : kCriticalityLevels[4 - band];
}

inline LevelGrid criticality_matrix(const EvaluationMatrix& em, NormalizationMode mode = NormalizationMode::max_ratio) {
  const Grid d = normalize_evaluation(em, mode);
  LevelGrid c(d.rows(), std::vector<int>(d.cols()));
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) c[i][j] = criticality_level(d(i, j), em.parameters[j].direction);
  return c;
}

struct CriticalityIndices {
  std::vector<double> indices;
  int scale_divisor = 0;  // highest level present in the grid
};

// CI_i = 100 * sum_j(w_j * c_ij) / n with n the largest level in the grid.
inline CriticalityIndices criticality_index(const LevelGrid& c, const WeightVector& w) {
  if (c.empty()) throw Error(Errc::empty_input, "empty criticality matrix");
  CriticalityIndices out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].size() != w.size())
      throw Error(Errc::dimension_mismatch, "criticality row " + std::to_string(i) + " has " +
                                                std::to_string(c[i].size()) + " levels for " +
                                                std::to_string(w.size()) + " weights");
    for (int level : c[i]) {
      if (std::find(std::begin(kCriticalityLevels), std::end(kCriticalityLevels), level) ==
          std::end(kCriticalityLevels))
        throw Error(Errc::out_of_range, "criticality level " + std::to_string(level) + " not in {1,3,5,7,9}");
      out.scale_divisor = std::max(out.scale_divisor, level);
    }
  }
  for (const auto& row : c) {
    double weighted = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) weighted += w[j] * row[j];
    out.indices.push_back(100.0 * weighted / out.scale_divisor);
  }
  return out;
}

struct CriticalityReport {
  EvaluationMatrix evaluation;
  NormalizationMode mode = NormalizationMode::max_ratio;
  Grid normalized;
  LevelGrid criticality;
  WeightVector weights;
  double consistency_ratio = 0.0;
  int scale_divisor = 0;
  std::vector<double> indices;
  std::vector<std::string> recommended;  // every algorithm tied at the top
};

inline constexpr double kRecommendationTolerance = 1e-9;

inline std::vector<std::string> argmax_set(const std::vector<std::string>& names, const std::vector<double>& scores) {
  const double top = *std::max_element(scores.begin(), scores.end());
  std::vector<std::string> out;
  for (std::size_t i = 0; i < scores.size(); ++i)
    if (top - scores[i] <= kRecommendationTolerance * std::max(1.0, std::abs(top))) out.push_back(names[i]);
  return out;
}

inline CriticalityReport evaluate(const EvaluationMatrix& em, const PairwiseComparisonMatrix& p,
                                  NormalizationMode mode = NormalizationMode::max_ratio) {
  em.validate();
  if (p.labels.size() != em.parameters.size())
    throw Error(Errc::label_mismatch, "comparison matrix covers " + std::to_string(p.labels.size()) +
                                          " parameters, evaluation matrix has " +
                                          std::to_string(em.parameters.size()));
  for (std::size_t j = 0; j < p.labels.size(); ++j)
    if (p.labels[j] != em.parameters[j].name)
      throw Error(Errc::label_mismatch,
                  "judgment label '" + p.labels[j] + "' does not match parameter '" + em.parameters[j].name + "'");

  CriticalityReport r;
  r.evaluation = em;
  r.mode = mode;
  r.weights = ahp_weights(p);
  r.consistency_ratio = consistency_ratio(p);
  r.normalized = normalize_evaluation(em, mode);
  r.criticality = criticality_matrix(em, mode);
  CriticalityIndices ci = criticality_index(r.criticality, r.weights);
  r.scale_divisor = ci.scale_divisor;
  r.indices = std::move(ci.indices);
  r.recommended = argmax_set(em.algorithms, r.indices);
  return r;
}

}  // namespace vho
