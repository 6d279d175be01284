#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "vho/vho.hpp"

#ifndef VHO_TEST_GOLDEN_DIR
#define VHO_TEST_GOLDEN_DIR "tests/golden"
#endif
#ifndef VHO_TEST_FIXTURE_DIR
#define VHO_TEST_FIXTURE_DIR "data/fixtures"
#endif
#ifndef VHO_TEST_DATA_DIR
#define VHO_TEST_DATA_DIR "data"
#endif

namespace vho {

inline void PrintTo(Method m, std::ostream* os) { *os << to_string(m); }

}  // namespace vho

namespace vho::testing {

inline Json load_golden(const std::string& name) {
  const std::string path = std::string(VHO_TEST_GOLDEN_DIR) + "/" + name;
  return parse_json(read_file(path), path);
}

inline std::string fixture_path(const std::string& name) {
  return std::string(VHO_TEST_FIXTURE_DIR) + "/" + name + ".json";
}

inline DecisionMatrix make_matrix(const std::vector<std::vector<double>>& rows, const std::vector<Direction>& dirs) {
  DecisionMatrix m;
  for (std::size_t i = 0; i < rows.size(); ++i) m.alternatives.push_back("A" + std::to_string(i));
  for (std::size_t j = 0; j < dirs.size(); ++j) m.attributes.push_back({"c" + std::to_string(j), "", dirs[j]});
  m.values = Grid::from_rows(rows);
  return m;
}

// Random decision problems: 3..6 alternatives, 2..6 attributes, values in
// [0.1, 100], mixed directions, strictly positive weights.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::mt19937_64& engine() { return rng_; }

  DecisionMatrix matrix(std::size_t alternatives, std::size_t attributes) {
    std::vector<std::vector<double>> rows(alternatives, std::vector<double>(attributes));
    for (auto& row : rows)
      for (double& v : row) v = real(0.1, 100.0);
    std::vector<Direction> dirs(attributes);
    for (auto& d : dirs) d = index(0, 1) ? Direction::benefit : Direction::cost;
    return make_matrix(rows, dirs);
  }

  DecisionMatrix matrix() { return matrix(index(3, 6), index(2, 6)); }

  WeightVector weights(std::size_t k) {
    std::vector<double> raw(k);
    for (double& w : raw) w = real(0.05, 1.0);
    return WeightVector::normalized(std::move(raw));
  }

 private:
  std::mt19937_64 rng_;
};

inline std::size_t position(const Ranking& r, std::size_t alternative) {
  return static_cast<std::size_t>(std::find(r.order.begin(), r.order.end(), alternative) - r.order.begin());
}

}  // namespace vho::testing
