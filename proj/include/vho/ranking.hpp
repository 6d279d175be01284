#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vho/decision_matrix.hpp"
#include "vho/normalize.hpp"

namespace vho {

enum class Method { topsis, gra, dia };

inline constexpr Method kAllMethods[] = {Method::topsis, Method::gra, Method::dia};

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::topsis: return "TOPSIS";
    case Method::gra: return "GRA";
    case Method::dia: return "DIA";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view s) {
  for (Method m : kAllMethods)
    if (to_string(m) == s) return m;
  return std::nullopt;
}

// TOPSIS closeness and GRA grade rank high-to-low; DIA distance low-to-high.
inline bool higher_is_better(Method m) { return m != Method::dia; }

struct Ranking {
  Method method = Method::topsis;
  std::vector<double> scores;
  std::vector<std::size_t> order;  // best first
  std::size_t best = 0;
};

struct RankerOptions {
  double gra_xi = 0.5;  // distinguishing coefficient, (0, 1]
};

namespace detail {

// Stable sort of indices by score; equal scores keep ascending index order.
inline std::vector<std::size_t> order_by(const std::vector<double>& scores, bool descending) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return descending ? scores[a] > scores[b] : scores[a] < scores[b];
  });
  return order;
}

inline Ranking make_ranking(Method method, std::vector<double> scores) {
  for (std::size_t i = 0; i < scores.size(); ++i)
    if (!std::isfinite(scores[i]))
      throw Error(Errc::non_finite, std::string(to_string(method)) + " produced a non-finite score for alternative " +
                                        std::to_string(i));
  Ranking r;
  r.method = method;
  r.order = order_by(scores, higher_is_better(method));
  r.best = r.order.front();
  r.scores = std::move(scores);
  return r;
}

inline void check_weights(const DecisionMatrix& m, const WeightVector& w) {
  validate_matrix(m);
  if (w.size() != m.num_attributes())
    throw Error(Errc::dimension_mismatch, "weight vector has " + std::to_string(w.size()) + " entries for " +
                                              std::to_string(m.num_attributes()) + " attributes");
}

}  // namespace detail

// Closeness to the positive ideal relative to both ideals, on the weighted
// vector-normalized grid.
inline Ranking rank_topsis(const DecisionMatrix& m, const WeightVector& w) {
  detail::check_weights(m, w);
  Grid v = normalize_vector(m);
  const std::size_t n = v.rows(), k = v.cols();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) v(i, j) *= w[j];

  std::vector<double> best(k), worst(k);
  for (std::size_t j = 0; j < k; ++j) {
    double lo = v(0, j), hi = v(0, j);
    for (std::size_t i = 1; i < n; ++i) {
      lo = std::min(lo, v(i, j));
      hi = std::max(hi, v(i, j));
    }
    const bool benefit = m.attributes[j].direction == Direction::benefit;
    best[j] = benefit ? hi : lo;
    worst[j] = benefit ? lo : hi;
  }

  std::vector<double> scores(n);
  for (std::size_t i = 0; i < n; ++i) {
    double dp = 0.0, dn = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      dp += (v(i, j) - best[j]) * (v(i, j) - best[j]);
      dn += (v(i, j) - worst[j]) * (v(i, j) - worst[j]);
    }
    dp = std::sqrt(dp);
    dn = std::sqrt(dn);
    // Both distances vanish only when the ideals coincide, i.e. every
    // alternative is identical in weighted space: a full tie at 1.
    scores[i] = (dp + dn == 0.0) ? 1.0 : dn / (dp + dn);
  }
  return detail::make_ranking(Method::topsis, std::move(scores));
}

// Grey relational grade against the all-1 reference series of the min-max
// normalized grid.
inline Ranking rank_gra(const DecisionMatrix& m, const WeightVector& w, const RankerOptions& opts = {}) {
  detail::check_weights(m, w);
  if (!(opts.gra_xi > 0.0 && opts.gra_xi <= 1.0))
    throw Error(Errc::out_of_range, "GRA distinguishing coefficient must lie in (0, 1]");
  const Grid r = normalize_minmax(m);
  const std::size_t n = r.rows(), k = r.cols();

  double dmin = 1.0, dmax = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const double d = std::abs(1.0 - r(i, j));
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
    }

  std::vector<double> grades(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      // dmax == 0 means every cell equals the reference.
      const double gamma =
          dmax == 0.0 ? 1.0 : (dmin + opts.gra_xi * dmax) / (std::abs(1.0 - r(i, j)) + opts.gra_xi * dmax);
      grades[i] += w[j] * gamma;
    }
  }
  return detail::make_ranking(Method::gra, std::move(grades));
}

// Euclidean distance to the positive ideal alternative on the weighted
// min-max normalized grid.
inline Ranking rank_dia(const DecisionMatrix& m, const WeightVector& w) {
  detail::check_weights(m, w);
  Grid t = normalize_minmax(m);
  const std::size_t n = t.rows(), k = t.cols();
  std::vector<double> pia(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) t(i, j) *= w[j];
    pia[j] = t(0, j);
    for (std::size_t i = 1; i < n; ++i) pia[j] = std::max(pia[j], t(i, j));
  }
  std::vector<double> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sq = 0.0;
    for (std::size_t j = 0; j < k; ++j) sq += (t(i, j) - pia[j]) * (t(i, j) - pia[j]);
    dist[i] = std::sqrt(sq);
  }
  return detail::make_ranking(Method::dia, std::move(dist));
}

inline Ranking rank(Method method, const DecisionMatrix& m, const WeightVector& w, const RankerOptions& opts = {}) {
  switch (method) {
    case Method::topsis: return rank_topsis(m, w);
    case Method::gra: return rank_gra(m, w, opts);
    case Method::dia: return rank_dia(m, w);
  }
  throw Error(Errc::out_of_range, "unknown ranking method");
}

}  // namespace vho
