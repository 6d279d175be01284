#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vho/ahp.hpp"
#include "vho/criticality.hpp"

namespace vho {

enum class TrafficClass { background, conversational, interactive, streaming };

inline constexpr TrafficClass kAllTrafficClasses[] = {TrafficClass::background, TrafficClass::conversational,
                                                      TrafficClass::interactive, TrafficClass::streaming};

inline std::string_view to_string(TrafficClass t) {
  switch (t) {
    case TrafficClass::background: return "background";
    case TrafficClass::conversational: return "conversational";
    case TrafficClass::interactive: return "interactive";
    case TrafficClass::streaming: return "streaming";
  }
  return "?";
}

inline std::optional<TrafficClass> parse_traffic_class(std::string_view s) {
  for (TrafficClass t : kAllTrafficClasses)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

// Judgments between ranking abnormality and number of handoffs: handoffs
// weigh 1, 3, 5 and 7 times as much for background, conversational,
// interactive and streaming traffic respectively.
inline PairwiseComparisonMatrix default_parameter_judgments(TrafficClass t) {
  double handoff_over_abnormality = 1.0;
  switch (t) {
    case TrafficClass::background: handoff_over_abnormality = 1.0; break;
    case TrafficClass::conversational: handoff_over_abnormality = 3.0; break;
    case TrafficClass::interactive: handoff_over_abnormality = 5.0; break;
    case TrafficClass::streaming: handoff_over_abnormality = 7.0; break;
  }
  std::vector<std::string> labels;
  for (const Attribute& a : default_evaluation_parameters()) labels.push_back(a.name);
  return PairwiseComparisonMatrix{
      std::move(labels), Grid::from_rows({{1.0, 1.0 / handoff_over_abnormality}, {handoff_over_abnormality, 1.0}})};
}

// Default judgments over the six network attributes (CB, S, AB, D, J, L).
// These are project defaults, not measured preferences: each matrix is the
// perfectly consistent one generated by the priority scores below.
//   conversational: delay and jitter dominate
//   streaming:      jitter and bandwidth dominate
//   interactive:    loss dominates, then delay and security
//   background:     bandwidth and loss dominate, delay and jitter barely matter
inline std::vector<double> default_attribute_priorities(TrafficClass t) {
  switch (t) {
    case TrafficClass::conversational: return {2, 1, 2, 9, 7, 3};
    case TrafficClass::streaming: return {2, 1, 7, 3, 9, 5};
    case TrafficClass::interactive: return {3, 5, 3, 5, 1, 9};
    case TrafficClass::background: return {5, 3, 9, 1, 1, 7};
  }
  return {1, 1, 1, 1, 1, 1};
}

inline PairwiseComparisonMatrix default_attribute_judgments(TrafficClass t,
                                                            std::vector<std::string> labels = {"CB", "S", "AB", "D",
                                                                                               "J", "L"}) {
  return consistent_matrix(std::move(labels), default_attribute_priorities(t));
}

}  // namespace vho
