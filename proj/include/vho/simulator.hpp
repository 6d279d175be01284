#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vho/decision_matrix.hpp"
#include "vho/ranking.hpp"
#include "vho/rng.hpp"

namespace vho {

struct NetworkSpec {
  std::string name;
  std::vector<AttributeSpec> attributes;

  friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

struct ScenarioSpec {
  std::vector<NetworkSpec> networks;
  std::size_t epochs = 1000;
  std::uint64_t seed = 1;

  // Attribute descriptors shared by every network.
  std::vector<Attribute> attributes() const {
    std::vector<Attribute> out;
    if (networks.empty()) return out;
    for (const AttributeSpec& a : networks.front().attributes) out.push_back(a.attribute);
    return out;
  }

  void validate() const {
    if (networks.empty()) throw Error(Errc::empty_input, "scenario has no networks");
    if (epochs < 2) throw Error(Errc::out_of_range, "scenario needs at least 2 epochs");
    const auto& reference = networks.front().attributes;
    if (reference.empty()) throw Error(Errc::empty_input, "scenario networks have no attributes");
    for (const NetworkSpec& net : networks) {
      if (net.attributes.size() != reference.size())
        throw Error(Errc::dimension_mismatch, "network " + net.name + " defines " +
                                                  std::to_string(net.attributes.size()) + " attributes, expected " +
                                                  std::to_string(reference.size()));
      for (std::size_t j = 0; j < reference.size(); ++j) {
        if (net.attributes[j].attribute != reference[j].attribute)
          throw Error(Errc::label_mismatch, "network " + net.name + " attribute " + std::to_string(j) +
                                                " differs from " + reference[j].attribute.name);
        net.attributes[j].model.validate(net.name + "." + reference[j].attribute.name);
      }
    }
  }

  friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

// Six-network heterogeneous scenario: two UMTS cells, two WLANs and two
// WiMAX cells. Cost per byte and security are fixed percentages; bandwidth,
// delay, jitter and loss vary uniformly inside their ranges.
inline ScenarioSpec reference_scenario(std::size_t epochs = 1000, std::uint64_t seed = 1) {
  const Attribute cb{"CB", "%", Direction::cost};
  const Attribute s{"S", "%", Direction::benefit};
  const Attribute ab{"AB", "Mbps", Direction::benefit};
  const Attribute d{"D", "ms", Direction::cost};
  const Attribute j{"J", "ms", Direction::cost};
  const Attribute l{"L", "per 10^6", Direction::cost};
  auto net = [&](std::string name, double cost, double security, ValueModel bw, ValueModel delay,
                 ValueModel jitter) {
    return NetworkSpec{std::move(name),
                       {{cb, ValueModel::fixed(cost)},
                        {s, ValueModel::fixed(security)},
                        {ab, bw},
                        {d, delay},
                        {j, jitter},
                        {l, ValueModel::uniform(20, 80)}}};
  };
  using V = ValueModel;
  ScenarioSpec spec;
  spec.epochs = epochs;
  spec.seed = seed;
  spec.networks = {
      net("UMTS1", 60, 70, V::uniform(0.1, 2), V::uniform(25, 50), V::uniform(5, 10)),
      net("UMTS2", 80, 90, V::uniform(0.1, 2), V::uniform(25, 50), V::uniform(5, 10)),
      net("WLAN1", 10, 50, V::uniform(1, 11), V::uniform(100, 150), V::uniform(10, 20)),
      net("WLAN2", 5, 50, V::uniform(1, 11), V::uniform(100, 150), V::uniform(10, 20)),
      net("WIMAX1", 50, 60, V::uniform(1, 60), V::uniform(60, 100), V::uniform(3, 10)),
      net("WIMAX2", 40, 60, V::uniform(1, 60), V::uniform(60, 100), V::uniform(3, 10)),
  };
  return spec;
}

// One draw per (epoch, network, attribute) coordinate; fixed models are
// copied without consuming randomness.
inline DecisionMatrix sample_decision_matrix(const ScenarioSpec& s, std::size_t epoch) {
  s.validate();
  const CounterRng rng(s.seed);
  DecisionMatrix m;
  m.attributes = s.attributes();
  m.values = Grid(s.networks.size(), m.attributes.size());
  for (std::size_t i = 0; i < s.networks.size(); ++i) {
    m.alternatives.push_back(s.networks[i].name);
    for (std::size_t j = 0; j < m.attributes.size(); ++j) {
      const ValueModel& vm = s.networks[i].attributes[j].model;
      m.values(i, j) = rng.uniform(vm.lo, vm.hi, {epoch, i, j});
    }
  }
  return m;
}

enum class AbnormalityMode {
  order,  // any change in the survivors' relative order
  top,    // only a change of the selected survivor
};

inline const char* to_string(AbnormalityMode m) { return m == AbnormalityMode::order ? "order" : "top"; }

// Rank, drop the worst alternative, re-rank the survivors from scratch and
// report whether their induced order changed.
inline bool detect_abnormality(const DecisionMatrix& m, const WeightVector& w, Method method,
                               AbnormalityMode mode = AbnormalityMode::order, const RankerOptions& opts = {}) {
  if (m.num_alternatives() < 3) return false;
  const Ranking full = rank(method, m, w, opts);
  const std::size_t worst = full.order.back();
  const Ranking reduced = rank(method, m.without(worst), w, opts);

  // Survivor indices in the reduced matrix skip over `worst`.
  auto original_index = [worst](std::size_t r) { return r < worst ? r : r + 1; };
  std::vector<std::size_t> expected;
  for (std::size_t idx : full.order)
    if (idx != worst) expected.push_back(idx);

  if (mode == AbnormalityMode::top) return original_index(reduced.best) != expected.front();
  for (std::size_t k = 0; k < expected.size(); ++k)
    if (original_index(reduced.order[k]) != expected[k]) return true;
  return false;
}

struct EpisodeMetrics {
  Method method = Method::topsis;
  std::uint64_t seed = 0;
  double abnormality_pct = 0.0;
  double handoff_pct = 0.0;
  std::vector<std::size_t> selections;

  friend bool operator==(const EpisodeMetrics&, const EpisodeMetrics&) = default;
};

struct EpisodeOptions {
  AbnormalityMode abnormality = AbnormalityMode::order;
  RankerOptions ranker;
};

inline EpisodeMetrics run_episode(const ScenarioSpec& s, Method method, const WeightVector& w,
                                  const EpisodeOptions& opts = {}) {
  s.validate();
  if (w.size() != s.attributes().size())
    throw Error(Errc::dimension_mismatch, "weight vector does not match the scenario attributes");
  EpisodeMetrics out;
  out.method = method;
  out.seed = s.seed;
  out.selections.reserve(s.epochs);
  std::size_t abnormal = 0, handoffs = 0;
  for (std::size_t t = 0; t < s.epochs; ++t) {
    try {
      const DecisionMatrix m = sample_decision_matrix(s, t);
      const Ranking r = rank(method, m, w, opts.ranker);
      out.selections.push_back(r.best);
      if (t > 0 && out.selections[t] != out.selections[t - 1]) ++handoffs;
      if (detect_abnormality(m, w, method, opts.abnormality, opts.ranker)) ++abnormal;
    } catch (const Error& e) {
      throw Error(e.code(), "epoch " + std::to_string(t) + ": " + e.what());
    }
  }
  out.abnormality_pct = 100.0 * static_cast<double>(abnormal) / static_cast<double>(s.epochs);
  out.handoff_pct = 100.0 * static_cast<double>(handoffs) / static_cast<double>(s.epochs - 1);
  return out;
}

struct MethodSummary {
  Method method = Method::topsis;
  std::size_t runs = 0;
  double abnormality_pct = 0.0;
  double handoff_pct = 0.0;

  friend bool operator==(const MethodSummary&, const MethodSummary&) = default;
};

// Per-method arithmetic means, in order of first appearance.
inline std::vector<MethodSummary> summarize_metrics(std::span<const EpisodeMetrics> runs) {
  if (runs.empty()) throw Error(Errc::empty_input, "no episode metrics to summarize");
  std::vector<MethodSummary> out;
  for (const EpisodeMetrics& e : runs) {
    auto it = std::find_if(out.begin(), out.end(), [&](const MethodSummary& s) { return s.method == e.method; });
    if (it == out.end()) it = out.insert(out.end(), MethodSummary{e.method});
    ++it->runs;
    it->abnormality_pct += e.abnormality_pct;
    it->handoff_pct += e.handoff_pct;
  }
  for (MethodSummary& s : out) {
    s.abnormality_pct /= static_cast<double>(s.runs);
    s.handoff_pct /= static_cast<double>(s.runs);
  }
  return out;
}

}  // namespace vho
