#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vho/error.hpp"

namespace vho {

enum class Direction { benefit, cost };

inline const char* to_string(Direction d) { return d == Direction::benefit ? "benefit" : "cost"; }

// Name, units and optimisation direction of one decision criterion.
struct Attribute {
  std::string name;
  std::string units;
  Direction direction = Direction::benefit;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

// Either a fixed scalar (lo == hi) or a closed uniform sampling range.
struct ValueModel {
  double lo = 0.0;
  double hi = 0.0;

  static ValueModel fixed(double v) { return {v, v}; }
  static ValueModel uniform(double lo, double hi) { return {lo, hi}; }

  bool is_fixed() const { return lo == hi; }

  void validate(const std::string& where) const {
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw Error(Errc::non_finite, where + ": non-finite value model bound");
    if (lo < 0.0) throw Error(Errc::negative_value, where + ": value model must be nonnegative");
    if (lo > hi) throw Error(Errc::out_of_range, where + ": range lower bound exceeds upper bound");
  }

  friend bool operator==(const ValueModel&, const ValueModel&) = default;
};

struct AttributeSpec {
  Attribute attribute;
  ValueModel model;

  friend bool operator==(const AttributeSpec&, const AttributeSpec&) = default;
};

// Dense row-major grid: rows are alternatives, columns are attributes.
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Grid from_rows(const std::vector<std::vector<double>>& rows) {
    Grid g;
    g.rows_ = rows.size();
    g.cols_ = rows.empty() ? 0 : rows.front().size();
    g.data_.reserve(g.rows_ * g.cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != g.cols_)
        throw Error(Errc::dimension_mismatch,
                    "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                        " columns, expected " + std::to_string(g.cols_));
      g.data_.insert(g.data_.end(), rows[i].begin(), rows[i].end());
    }
    return g;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<std::vector<double>> to_rows() const {
    std::vector<std::vector<double>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
    return out;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct DecisionMatrix {
  std::vector<std::string> alternatives;
  std::vector<Attribute> attributes;
  Grid values;

  std::size_t num_alternatives() const { return alternatives.size(); }
  std::size_t num_attributes() const { return attributes.size(); }

  // Copy without row `skip`.
  DecisionMatrix without(std::size_t skip) const {
    DecisionMatrix out;
    out.attributes = attributes;
    out.values = Grid(values.rows() - 1, values.cols());
    for (std::size_t i = 0, r = 0; i < values.rows(); ++i) {
      if (i == skip) continue;
      out.alternatives.push_back(alternatives[i]);
      for (std::size_t j = 0; j < values.cols(); ++j) out.values(r, j) = values(i, j);
      ++r;
    }
    return out;
  }

  friend bool operator==(const DecisionMatrix&, const DecisionMatrix&) = default;
};

// Returns the matrix unchanged when all shape and finiteness invariants hold.
inline const DecisionMatrix& validate_matrix(const DecisionMatrix& m) {
  if (m.alternatives.empty()) throw Error(Errc::empty_input, "empty alternatives");
  if (m.attributes.empty()) throw Error(Errc::empty_input, "empty attributes");
  if (m.values.rows() != m.alternatives.size() || m.values.cols() != m.attributes.size())
    throw Error(Errc::dimension_mismatch,
                "dimension mismatch: grid is " + std::to_string(m.values.rows()) + "x" +
                    std::to_string(m.values.cols()) + ", expected " +
                    std::to_string(m.alternatives.size()) + "x" + std::to_string(m.attributes.size()));
  for (std::size_t i = 0; i < m.values.rows(); ++i)
    for (std::size_t j = 0; j < m.values.cols(); ++j)
      if (!std::isfinite(m.values(i, j)))
        throw Error(Errc::non_finite, "non-finite value at row " + std::to_string(i) + " (" +
                                          m.alternatives[i] + "), column " + std::to_string(j) +
                                          " (" + m.attributes[j].name + ")");
  return m;
}

// Nonnegative weights summing to one.
class WeightVector {
 public:
  static constexpr double kSumTolerance = 1e-9;

  WeightVector() = default;

  explicit WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw Error(Errc::empty_input, "empty weight vector");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (!std::isfinite(weights_[i]))
        throw Error(Errc::non_finite, "weight " + std::to_string(i) + " is not finite");
      if (weights_[i] < 0.0)
        throw Error(Errc::invalid_weights, "weight " + std::to_string(i) + " is negative");
    }
    const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (std::abs(sum - 1.0) > kSumTolerance)
      throw Error(Errc::invalid_weights, "weights sum to " + std::to_string(sum) + ", expected 1");
  }

  // Scales arbitrary nonnegative scores so they sum to one.
  static WeightVector normalized(std::vector<double> raw) {
    const double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
    if (!(sum > 0.0)) throw Error(Errc::invalid_weights, "weights must have a positive sum");
    for (double& w : raw) w /= sum;
    return WeightVector(std::move(raw));
  }

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> values() const { return weights_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> weights_;
};

}  // namespace vho
