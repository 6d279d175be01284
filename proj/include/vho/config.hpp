#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vho/json_io.hpp"
#include "vho/ranking.hpp"
#include "vho/simulator.hpp"
#include "vho/traffic.hpp"
#include "vho/version.hpp"

namespace vho {

enum class OutputFormat { table, csv, json };

inline const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::table: return "table";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
  }
  return "?";
}

inline std::optional<OutputFormat> parse_format(std::string_view s) {
  for (OutputFormat f : {OutputFormat::table, OutputFormat::csv, OutputFormat::json})
    if (s == to_string(f)) return f;
  return std::nullopt;
}

struct RunConfig {
  ScenarioSpec scenario = reference_scenario();
  TrafficClass traffic_class = TrafficClass::background;
  std::vector<Method> methods = {Method::topsis, Method::gra, Method::dia};
  PairwiseComparisonMatrix attribute_judgments = default_attribute_judgments(TrafficClass::background);
  PairwiseComparisonMatrix parameter_judgments = default_parameter_judgments(TrafficClass::background);
  std::size_t runs = 10;
  AbnormalityMode abnormality = AbnormalityMode::order;
  double gra_xi = 0.5;
  OutputFormat format = OutputFormat::table;
  std::string output_path = "-";  // "-" is stdout

  void validate() const {
    scenario.validate();
    if (methods.empty()) throw Error(Errc::schema, "methods must be non-empty");
    if (runs == 0) throw Error(Errc::schema, "runs must be positive");
    if (!(gra_xi > 0.0 && gra_xi <= 1.0)) throw Error(Errc::schema, "gra_xi must lie in (0, 1]");
    attribute_judgments.validate();
    parameter_judgments.validate();
    const auto attrs = scenario.attributes();
    if (attribute_judgments.labels.size() != attrs.size())
      throw Error(Errc::label_mismatch, "attribute_judgments must cover every scenario attribute");
    for (std::size_t j = 0; j < attrs.size(); ++j)
      if (attribute_judgments.labels[j] != attrs[j].name)
        throw Error(Errc::label_mismatch, "attribute_judgments label '" + attribute_judgments.labels[j] +
                                              "' does not match scenario attribute '" + attrs[j].name + "'");
    const auto params = default_evaluation_parameters();
    if (parameter_judgments.labels.size() != params.size())
      throw Error(Errc::label_mismatch, "parameter_judgments must cover the evaluation parameters");
    for (std::size_t j = 0; j < params.size(); ++j)
      if (parameter_judgments.labels[j] != params[j].name)
        throw Error(Errc::label_mismatch, "parameter_judgments label '" + parameter_judgments.labels[j] +
                                              "' must be '" + params[j].name + "'");
  }

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Defaults for a traffic class: reference scenario plus that class's judgments.
inline RunConfig default_config(TrafficClass t) {
  RunConfig c;
  c.traffic_class = t;
  c.attribute_judgments = default_attribute_judgments(t);
  c.parameter_judgments = default_parameter_judgments(t);
  return c;
}

inline Json value_model_to_json(const ValueModel& m) {
  if (m.is_fixed()) return m.lo;
  return Json::array({m.lo, m.hi});
}

inline Json to_json(const ScenarioSpec& s) {
  Json attrs = Json::array();
  for (const Attribute& a : s.attributes())
    attrs.push_back(Json{{"name", a.name}, {"units", a.units}, {"direction", to_string(a.direction)}});
  Json nets = Json::array();
  for (const NetworkSpec& n : s.networks) {
    Json values = Json::object();
    for (const AttributeSpec& a : n.attributes) values[a.attribute.name] = value_model_to_json(a.model);
    nets.push_back(Json{{"name", n.name}, {"values", std::move(values)}});
  }
  return Json{{"epochs", s.epochs}, {"seed", s.seed}, {"attributes", std::move(attrs)}, {"networks", std::move(nets)}};
}

inline Json to_json(const RunConfig& c) {
  Json methods = Json::array();
  for (Method m : c.methods) methods.push_back(to_string(m));
  return Json{{"schema_version", kSchemaVersion},
              {"traffic_class", to_string(c.traffic_class)},
              {"methods", std::move(methods)},
              {"runs", c.runs},
              {"abnormality", to_string(c.abnormality)},
              {"gra_xi", c.gra_xi},
              {"scenario", to_json(c.scenario)},
              {"attribute_judgments", to_json(c.attribute_judgments)},
              {"parameter_judgments", to_json(c.parameter_judgments)},
              {"output", Json{{"format", to_string(c.format)}, {"path", c.output_path}}}};
}

inline ScenarioSpec scenario_from_json(const JsonNode& node) {
  node.expect_object({"epochs", "seed", "attributes", "networks"});
  ScenarioSpec s = reference_scenario();
  if (node.has("epochs")) s.epochs = node["epochs"].u64();
  if (node.has("seed")) s.seed = node["seed"].u64();
  if (node.has("attributes") != node.has("networks"))
    node.fail("'attributes' and 'networks' must be given together");
  if (!node.has("attributes")) return s;

  std::vector<Attribute> attrs;
  const JsonNode an = node["attributes"];
  for (std::size_t j = 0; j < an.array_size(); ++j) {
    const JsonNode a = an[j];
    a.expect_object({"name", "units", "direction"});
    Attribute attr;
    attr.name = a["name"].string();
    attr.units = a.has("units") ? a["units"].string() : "";
    const std::string dir = a["direction"].string();
    if (dir == "benefit") attr.direction = Direction::benefit;
    else if (dir == "cost") attr.direction = Direction::cost;
    else a["direction"].fail("direction must be 'benefit' or 'cost'");
    attrs.push_back(std::move(attr));
  }

  s.networks.clear();
  const JsonNode nn = node["networks"];
  for (std::size_t i = 0; i < nn.array_size(); ++i) {
    const JsonNode n = nn[i];
    n.expect_object({"name", "values"});
    NetworkSpec net;
    net.name = n["name"].string();
    const JsonNode values = n["values"];
    if (!values.json().is_object()) values.fail("expected an object keyed by attribute name");
    for (const auto& item : values.json().items()) {
      bool known = false;
      for (const Attribute& a : attrs) known = known || a.name == item.key();
      if (!known) values.fail("unknown attribute '" + item.key() + "'");
    }
    for (const Attribute& a : attrs) {
      const JsonNode v = values[a.name];
      ValueModel vm;
      if (v.json().is_array()) {
        if (v.array_size() != 2) v.fail("a range must be [lo, hi]");
        vm = ValueModel::uniform(v[0].number(), v[1].number());
      } else {
        vm = ValueModel::fixed(v.number());
      }
      try {
        vm.validate(net.name + "." + a.name);
      } catch (const Error& e) {
        v.fail(e.what());
      }
      net.attributes.push_back({a, vm});
    }
    s.networks.push_back(std::move(net));
  }
  return s;
}

inline RunConfig config_from_json(const Json& j, const std::string& origin) {
  const JsonNode root(j, "", origin);
  root.expect_object({"schema_version", "traffic_class", "methods", "runs", "abnormality", "gra_xi", "scenario",
                      "attribute_judgments", "parameter_judgments", "output"});
  if (root["schema_version"].u64() != static_cast<std::uint64_t>(kSchemaVersion))
    root["schema_version"].fail("unsupported schema version");

  TrafficClass tc = TrafficClass::background;
  if (root.has("traffic_class")) {
    const auto parsed = parse_traffic_class(root["traffic_class"].string());
    if (!parsed) root["traffic_class"].fail("unknown traffic class");
    tc = *parsed;
  }
  RunConfig c = default_config(tc);

  c.methods.clear();
  if (root.has("methods")) {
    const JsonNode m = root["methods"];
    for (std::size_t i = 0; i < m.array_size(); ++i) {
      const auto method = parse_method(m[i].string());
      if (!method) m[i].fail("unknown method; expected TOPSIS, GRA or DIA");
      if (std::find(c.methods.begin(), c.methods.end(), *method) != c.methods.end()) m[i].fail("duplicate method");
      c.methods.push_back(*method);
    }
  }
  if (c.methods.empty()) throw Error(Errc::schema, origin + ": /methods: methods must be non-empty");

  if (root.has("runs")) c.runs = root["runs"].u64();
  if (root.has("abnormality")) {
    const std::string a = root["abnormality"].string();
    if (a == "order") c.abnormality = AbnormalityMode::order;
    else if (a == "top") c.abnormality = AbnormalityMode::top;
    else root["abnormality"].fail("abnormality must be 'order' or 'top'");
  }
  if (root.has("gra_xi")) c.gra_xi = root["gra_xi"].number();
  if (root.has("scenario")) c.scenario = scenario_from_json(root["scenario"]);
  if (root.has("attribute_judgments")) c.attribute_judgments = comparison_from_json(root["attribute_judgments"]);
  if (root.has("parameter_judgments")) c.parameter_judgments = comparison_from_json(root["parameter_judgments"]);
  if (root.has("output")) {
    const JsonNode o = root["output"];
    o.expect_object({"format", "path"});
    if (o.has("format")) {
      const auto f = parse_format(o["format"].string());
      if (!f) o["format"].fail("format must be table, csv or json");
      c.format = *f;
    }
    if (o.has("path")) c.output_path = o["path"].string();
  }

  try {
    c.validate();
  } catch (const Error& e) {
    throw Error(e.code(), origin + ": " + e.what());
  }
  return c;
}

inline RunConfig load_config(const std::string& path) {
  return config_from_json(parse_json(read_file(path), path), path);
}

// Only fields that change the numbers; output format and destination are left out.
inline std::string config_hash(const RunConfig& c) {
  Json j = to_json(c);
  j.erase("output");
  return fnv1a_hex(j.dump());
}

}  // namespace vho
