// Ranks one random snapshot of the six-network scenario with every method,
// using the default streaming-traffic attribute weights.

#include <cstdio>

#include "vho/vho.hpp"

int main() {
  const vho::ScenarioSpec scenario = vho::reference_scenario(/*epochs=*/2, /*seed=*/2024);
  const vho::DecisionMatrix m = vho::sample_decision_matrix(scenario, 0);
  const vho::WeightVector w = vho::ahp_weights(vho::default_attribute_judgments(vho::TrafficClass::streaming));

  std::printf("%-8s", "");
  for (const auto& a : m.attributes) std::printf("%10s", a.name.c_str());
  std::printf("\n");
  for (std::size_t i = 0; i < m.num_alternatives(); ++i) {
    std::printf("%-8s", m.alternatives[i].c_str());
    for (std::size_t j = 0; j < m.num_attributes(); ++j) std::printf("%10.2f", m.values(i, j));
    std::printf("\n");
  }
  std::printf("\n");

  for (vho::Method method : vho::kAllMethods) {
    const vho::Ranking r = vho::rank(method, m, w);
    std::printf("%-7s best=%-7s order:", std::string(vho::to_string(method)).c_str(), m.alternatives[r.best].c_str());
    for (std::size_t idx : r.order) std::printf(" %s(%.4f)", m.alternatives[idx].c_str(), r.scores[idx]);
    std::printf("  abnormal=%s\n", vho::detect_abnormality(m, w, method) ? "yes" : "no");
  }
}
