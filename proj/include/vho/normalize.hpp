#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "vho/decision_matrix.hpp"

namespace vho {

// Linear min-max scaling into [0,1] with 1 the ideal end of each column.
// Constant columns map to all-1: every alternative is equally ideal there.
inline Grid normalize_minmax(const DecisionMatrix& m) {
  validate_matrix(m);
  const Grid& v = m.values;
  Grid out(v.rows(), v.cols());
  for (std::size_t j = 0; j < v.cols(); ++j) {
    double lo = v(0, j), hi = v(0, j);
    for (std::size_t i = 1; i < v.rows(); ++i) {
      lo = std::min(lo, v(i, j));
      hi = std::max(hi, v(i, j));
    }
    const double span = hi - lo;
    const bool benefit = m.attributes[j].direction == Direction::benefit;
    for (std::size_t i = 0; i < v.rows(); ++i) {
      double r = 1.0;
      if (span != 0.0) r = benefit ? (v(i, j) - lo) / span : (hi - v(i, j)) / span;
      if (!std::isfinite(r))
        throw Error(Errc::non_finite, "min-max normalization overflowed in column " + m.attributes[j].name);
      out(i, j) = r;
    }
  }
  return out;
}

// Divides each column by its Euclidean norm. Direction is left to the caller.
inline Grid normalize_vector(const DecisionMatrix& m) {
  validate_matrix(m);
  const Grid& v = m.values;
  Grid out(v.rows(), v.cols());
  for (std::size_t j = 0; j < v.cols(); ++j) {
    double sq = 0.0;
    for (std::size_t i = 0; i < v.rows(); ++i) sq += v(i, j) * v(i, j);
    const double norm = std::sqrt(sq);
    if (norm == 0.0) throw Error(Errc::zero_column, "all-zero column " + m.attributes[j].name);
    if (!std::isfinite(norm))
      throw Error(Errc::non_finite, "column norm overflowed for " + m.attributes[j].name);
    for (std::size_t i = 0; i < v.rows(); ++i) out(i, j) = v(i, j) / norm;
  }
  return out;
}

}  // namespace vho
