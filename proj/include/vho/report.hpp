#pragma once

#include <algorithm>
#include <cstdio>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vho/config.hpp"
#include "vho/criticality.hpp"
#include "vho/json_io.hpp"
#include "vho/simulator.hpp"

namespace vho {

inline std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// Shortest text that reads back as the same double.
inline std::string format_full(double v) {
  char buf[64];
  for (int p = 1; p <= 17; ++p) {
    std::snprintf(buf, sizeof buf, "%.*g", p, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class Row>
std::string csv_line(const Row& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_field(cells[i]);
  }
  return out + "\n";
}

// Left-aligned text table with a rule under the header.
inline std::string text_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out += cells[c];
      if (c + 1 < cells.size()) out += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    return out + "\n";
  };
  std::string out = line(header);
  std::size_t total = 0;
  for (std::size_t w : width) total += w + 2;
  out += std::string(total - 2, '-') + "\n";
  for (const auto& r : rows) out += line(r);
  return out;
}

// ---------------------------------------------------------------------------
// Simulation metrics

struct RunRecord {
  Method method = Method::topsis;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double abnormality_pct = 0.0;
  double handoff_pct = 0.0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct MetricsArtifact {
  std::string tool_version = kVersion;
  std::string config_hash;
  std::uint64_t seed = 0;
  TrafficClass traffic_class = TrafficClass::background;
  std::size_t epochs = 0;
  std::size_t runs = 0;
  AbnormalityMode abnormality = AbnormalityMode::order;
  std::vector<MethodSummary> summary;
  std::vector<RunRecord> detail;

  friend bool operator==(const MetricsArtifact&, const MetricsArtifact&) = default;
};

// Runs every method over `runs` replications. Replication r uses the seed
// derive_seed(base, r) for all methods, so methods face identical draws.
inline MetricsArtifact simulate(const RunConfig& c) {
  c.validate();
  const WeightVector w = ahp_weights(c.attribute_judgments);
  EpisodeOptions opts;
  opts.abnormality = c.abnormality;
  opts.ranker.gra_xi = c.gra_xi;

  std::vector<std::future<std::vector<EpisodeMetrics>>> work;
  for (Method m : c.methods) {
    work.push_back(std::async(std::launch::async, [&c, &w, &opts, m] {
      std::vector<EpisodeMetrics> out;
      for (std::size_t r = 0; r < c.runs; ++r) {
        ScenarioSpec s = c.scenario;
        s.seed = derive_seed(c.scenario.seed, r);
        out.push_back(run_episode(s, m, w, opts));
      }
      return out;
    }));
  }

  MetricsArtifact a;
  a.config_hash = config_hash(c);
  a.seed = c.scenario.seed;
  a.traffic_class = c.traffic_class;
  a.epochs = c.scenario.epochs;
  a.runs = c.runs;
  a.abnormality = c.abnormality;
  std::vector<EpisodeMetrics> all;
  for (auto& f : work) {
    auto episodes = f.get();
    for (std::size_t r = 0; r < episodes.size(); ++r) {
      const EpisodeMetrics& e = episodes[r];
      a.detail.push_back({e.method, r, e.seed, e.abnormality_pct, e.handoff_pct});
      all.push_back(e);
    }
  }
  a.summary = summarize_metrics(all);
  return a;
}

inline Json to_json(const MetricsArtifact& a) {
  Json summary = Json::array();
  for (const MethodSummary& s : a.summary)
    summary.push_back(Json{{"method", to_string(s.method)},
                           {"runs", s.runs},
                           {"abnormality_pct", s.abnormality_pct},
                           {"handoff_pct", s.handoff_pct}});
  Json detail = Json::array();
  for (const RunRecord& r : a.detail)
    detail.push_back(Json{{"method", to_string(r.method)},
                          {"run", r.run},
                          {"seed", r.seed},
                          {"abnormality_pct", r.abnormality_pct},
                          {"handoff_pct", r.handoff_pct}});
  return Json{{"schema_version", kSchemaVersion},
              {"artifact", "metrics"},
              {"tool_version", a.tool_version},
              {"config_hash", a.config_hash},
              {"seed", a.seed},
              {"traffic_class", to_string(a.traffic_class)},
              {"epochs", a.epochs},
              {"runs", a.runs},
              {"abnormality", to_string(a.abnormality)},
              {"summary", std::move(summary)},
              {"runs_detail", std::move(detail)}};
}

inline const std::vector<std::string> kMetricsCsvHeader = {
    "kind", "method", "run", "seed", "abnormality_pct", "handoff_pct", "traffic_class", "epochs", "abnormality",
    "config_hash", "tool_version"};

inline std::string to_csv(const MetricsArtifact& a) {
  std::string out = csv_line(kMetricsCsvHeader);
  auto tail = [&](std::vector<std::string> row) {
    row.insert(row.end(), {std::string(to_string(a.traffic_class)), std::to_string(a.epochs),
                           to_string(a.abnormality), a.config_hash, a.tool_version});
    return csv_line(row);
  };
  for (const MethodSummary& s : a.summary)
    out += tail({"mean", std::string(to_string(s.method)), std::to_string(s.runs), std::to_string(a.seed),
                 format_full(s.abnormality_pct), format_full(s.handoff_pct)});
  for (const RunRecord& r : a.detail)
    out += tail({"run", std::string(to_string(r.method)), std::to_string(r.run), std::to_string(r.seed),
                 format_full(r.abnormality_pct), format_full(r.handoff_pct)});
  return out;
}

inline std::string to_table(const MetricsArtifact& a) {
  std::ostringstream os;
  os << "Handover simulation (" << to_string(a.traffic_class) << " traffic, " << a.runs << " runs x " << a.epochs
     << " epochs, seed " << a.seed << ", abnormality=" << to_string(a.abnormality) << ")\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const MethodSummary& s : a.summary)
    rows.push_back({std::string(to_string(s.method)), format_fixed(s.abnormality_pct, 2), format_fixed(s.handoff_pct, 2)});
  os << text_table({"Method", "Ranking abnormality (%)", "Number of handoffs (%)"}, rows) << "\n";
  rows.clear();
  for (const RunRecord& r : a.detail)
    rows.push_back({std::string(to_string(r.method)), std::to_string(r.run), std::to_string(r.seed),
                    format_fixed(r.abnormality_pct, 2), format_fixed(r.handoff_pct, 2)});
  os << text_table({"Method", "Run", "Seed", "Abnormality (%)", "Handoffs (%)"}, rows);
  os << "\nconfig " << a.config_hash << ", vho " << a.tool_version << "\n";
  return os.str();
}

inline std::string render(const MetricsArtifact& a, OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return to_json(a).dump(2) + "\n";
    case OutputFormat::csv: return to_csv(a);
    case OutputFormat::table: return to_table(a);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Evaluation inputs

// What cmd_evaluate consumes: measured metrics, optionally with the
// judgments and expectations that ship with a fixture.
struct EvaluationInput {
  std::string name;
  std::optional<TrafficClass> traffic_class;
  std::optional<std::uint64_t> seed;
  EvaluationMatrix matrix;
  std::optional<PairwiseComparisonMatrix> judgments;
};

struct FixtureExpectation {
  std::vector<double> weights;
  LevelGrid criticality;
  std::vector<double> indices;
  std::vector<std::string> recommended;
  double weight_tolerance = 1e-3;
  double index_tolerance = 0.05;
};

struct Fixture {
  EvaluationInput input;
  std::string provenance;
  std::optional<FixtureExpectation> expected;
};

inline EvaluationMatrix evaluation_matrix_from(const std::vector<MethodSummary>& summary) {
  EvaluationMatrix em;
  em.parameters = default_evaluation_parameters();
  em.values = Grid(summary.size(), 2);
  for (std::size_t i = 0; i < summary.size(); ++i) {
    em.algorithms.emplace_back(to_string(summary[i].method));
    em.values(i, 0) = summary[i].abnormality_pct;
    em.values(i, 1) = summary[i].handoff_pct;
  }
  return em;
}

inline Fixture fixture_from_json(const Json& j, const std::string& origin) {
  const JsonNode root(j, "", origin);
  root.expect_object({"schema_version", "artifact", "name", "traffic_class", "provenance", "algorithms",
                      "parameters", "values", "judgments", "expected"});
  if (root["artifact"].string() != "fixture") root["artifact"].fail("expected a fixture");
  if (root["schema_version"].u64() != static_cast<std::uint64_t>(kSchemaVersion))
    root["schema_version"].fail("unsupported schema version");
  Fixture f;
  f.input.name = root.has("name") ? root["name"].string() : origin;
  f.provenance = root.has("provenance") ? root["provenance"].string() : "";
  if (root.has("traffic_class")) {
    const auto t = parse_traffic_class(root["traffic_class"].string());
    if (!t) root["traffic_class"].fail("unknown traffic class");
    f.input.traffic_class = t;
  }
  EvaluationMatrix& em = f.input.matrix;
  const JsonNode algs = root["algorithms"];
  for (std::size_t i = 0; i < algs.array_size(); ++i) em.algorithms.push_back(algs[i].string());
  if (root.has("parameters")) {
    const JsonNode ps = root["parameters"];
    for (std::size_t j = 0; j < ps.array_size(); ++j) {
      const JsonNode p = ps[j];
      p.expect_object({"name", "direction"});
      const std::string dir = p["direction"].string();
      if (dir != "cost" && dir != "benefit") p["direction"].fail("direction must be 'benefit' or 'cost'");
      em.parameters.push_back({p["name"].string(), "%", dir == "cost" ? Direction::cost : Direction::benefit});
    }
  } else {
    em.parameters = default_evaluation_parameters();
  }
  const JsonNode values = root["values"];
  if (values.array_size() != em.algorithms.size()) values.fail("expected one row per algorithm");
  em.values = Grid(em.algorithms.size(), em.parameters.size());
  for (std::size_t i = 0; i < em.algorithms.size(); ++i) {
    const JsonNode row = values[i];
    if (row.array_size() != em.parameters.size()) row.fail("expected one value per parameter");
    for (std::size_t k = 0; k < em.parameters.size(); ++k) em.values(i, k) = row[k].number();
  }
  try {
    em.validate();
  } catch (const Error& e) {
    values.fail(e.what());
  }
  if (root.has("judgments")) f.input.judgments = comparison_from_json(root["judgments"]);

  if (root.has("expected")) {
    const JsonNode e = root["expected"];
    e.expect_object({"weights", "criticality", "indices", "recommended", "weight_tolerance", "index_tolerance"});
    FixtureExpectation x;
    const JsonNode w = e["weights"];
    for (std::size_t k = 0; k < w.array_size(); ++k) x.weights.push_back(w[k].number());
    const JsonNode c = e["criticality"];
    for (std::size_t i = 0; i < c.array_size(); ++i) {
      std::vector<int> row;
      for (std::size_t k = 0; k < c[i].array_size(); ++k) row.push_back(static_cast<int>(c[i][k].u64()));
      x.criticality.push_back(std::move(row));
    }
    const JsonNode ci = e["indices"];
    for (std::size_t i = 0; i < ci.array_size(); ++i) x.indices.push_back(ci[i].number());
    if (e.has("recommended")) {
      const JsonNode r = e["recommended"];
      for (std::size_t i = 0; i < r.array_size(); ++i) x.recommended.push_back(r[i].string());
    }
    if (e.has("weight_tolerance")) x.weight_tolerance = e["weight_tolerance"].number();
    if (e.has("index_tolerance")) x.index_tolerance = e["index_tolerance"].number();
    if (x.criticality.size() != em.algorithms.size() || x.indices.size() != em.algorithms.size() ||
        x.weights.size() != em.parameters.size())
      e.fail("expected tables must match the algorithm and parameter counts");
    f.expected = std::move(x);
  }
  return f;
}

inline MetricsArtifact metrics_from_json(const Json& j, const std::string& origin) {
  const JsonNode root(j, "", origin);
  root.expect_object({"schema_version", "artifact", "tool_version", "config_hash", "seed", "traffic_class", "epochs",
                      "runs", "abnormality", "summary", "runs_detail"});
  if (root["artifact"].string() != "metrics") root["artifact"].fail("expected a metrics artifact");
  MetricsArtifact a;
  a.tool_version = root["tool_version"].string();
  a.config_hash = root["config_hash"].string();
  a.seed = root["seed"].u64();
  const auto t = parse_traffic_class(root["traffic_class"].string());
  if (!t) root["traffic_class"].fail("unknown traffic class");
  a.traffic_class = *t;
  a.epochs = root["epochs"].u64();
  a.runs = root["runs"].u64();
  a.abnormality = root["abnormality"].string() == "top" ? AbnormalityMode::top : AbnormalityMode::order;
  auto method_of = [](const JsonNode& n) {
    const auto m = parse_method(n.string());
    if (!m) n.fail("unknown method");
    return *m;
  };
  const JsonNode s = root["summary"];
  for (std::size_t i = 0; i < s.array_size(); ++i) {
    const JsonNode row = s[i];
    row.expect_object({"method", "runs", "abnormality_pct", "handoff_pct"});
    a.summary.push_back({method_of(row["method"]), row["runs"].u64(), row["abnormality_pct"].number(),
                         row["handoff_pct"].number()});
  }
  if (root.has("runs_detail")) {
    const JsonNode d = root["runs_detail"];
    for (std::size_t i = 0; i < d.array_size(); ++i) {
      const JsonNode row = d[i];
      row.expect_object({"method", "run", "seed", "abnormality_pct", "handoff_pct"});
      a.detail.push_back({method_of(row["method"]), row["run"].u64(), row["seed"].u64(),
                          row["abnormality_pct"].number(), row["handoff_pct"].number()});
    }
  }
  if (a.summary.empty()) s.fail("summary must list at least one method");
  return a;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') out.back() += '"', ++i;
      else if (c == '"') quoted = false;
      else out.back() += c;
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else if (c != '\r') {
      out.back() += c;
    }
  }
  return out;
}

// Reads the "mean" rows of a metrics CSV.
inline MetricsArtifact metrics_from_csv(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line) != kMetricsCsvHeader)
    throw Error(Errc::parse, origin + ": line 1: not a metrics CSV header");
  MetricsArtifact a;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    auto fail = [&](const std::string& msg) {
      throw Error(Errc::parse, origin + ": line " + std::to_string(lineno) + ": " + msg);
    };
    if (cells.size() != kMetricsCsvHeader.size()) fail("wrong number of fields");
    const auto m = parse_method(cells[1]);
    if (!m) fail("unknown method '" + cells[1] + "'");
    try {
      if (cells[0] == "mean") {
        a.summary.push_back({*m, std::stoull(cells[2]), std::stod(cells[4]), std::stod(cells[5])});
        a.seed = std::stoull(cells[3]);
      } else if (cells[0] == "run") {
        a.detail.push_back({*m, std::stoull(cells[2]), std::stoull(cells[3]), std::stod(cells[4]), std::stod(cells[5])});
      } else {
        fail("unknown row kind '" + cells[0] + "'");
      }
      const auto t = parse_traffic_class(cells[6]);
      if (!t) fail("unknown traffic class");
      a.traffic_class = *t;
      a.epochs = std::stoull(cells[7]);
      a.abnormality = cells[8] == "top" ? AbnormalityMode::top : AbnormalityMode::order;
      a.config_hash = cells[9];
      a.tool_version = cells[10];
    } catch (const std::logic_error&) {
      fail("malformed number");
    }
  }
  if (a.summary.empty()) throw Error(Errc::parse, origin + ": no mean rows");
  a.runs = a.summary.front().runs;
  return a;
}

inline EvaluationInput evaluation_input_from_metrics(const MetricsArtifact& a, std::string name) {
  EvaluationInput in;
  in.name = std::move(name);
  in.traffic_class = a.traffic_class;
  in.seed = a.seed;
  in.matrix = evaluation_matrix_from(a.summary);
  return in;
}

// Accepts a fixture JSON, a metrics JSON, or a metrics CSV.
inline Fixture load_evaluation_input(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const Json j = parse_json(text, path);
    if (j.is_object() && j.contains("artifact") && j["artifact"] == "metrics")
      return Fixture{evaluation_input_from_metrics(metrics_from_json(j, path), path), "", std::nullopt};
    return fixture_from_json(j, path);
  }
  return Fixture{evaluation_input_from_metrics(metrics_from_csv(text, path), path), "", std::nullopt};
}

inline Fixture load_fixture(const std::string& path) { return fixture_from_json(parse_json(read_file(path), path), path); }

// ---------------------------------------------------------------------------
// Criticality reports

struct ReportArtifact {
  std::string name;
  std::optional<TrafficClass> traffic_class;
  std::optional<std::uint64_t> seed;
  std::string config_hash;
  std::string tool_version = kVersion;
  CriticalityReport report;
};

inline std::string input_hash(const EvaluationInput& in, const PairwiseComparisonMatrix& p, NormalizationMode mode) {
  Json j{{"algorithms", in.matrix.algorithms},
         {"values", in.matrix.values.to_rows()},
         {"judgments", to_json(p)},
         {"normalization", mode == NormalizationMode::max_ratio ? "max_ratio" : "min_ratio"}};
  return fnv1a_hex(j.dump());
}

inline ReportArtifact evaluate_input(const EvaluationInput& in, const PairwiseComparisonMatrix& p,
                                     NormalizationMode mode = NormalizationMode::max_ratio) {
  ReportArtifact a;
  a.name = in.name;
  a.traffic_class = in.traffic_class;
  a.seed = in.seed;
  a.config_hash = input_hash(in, p, mode);
  a.report = evaluate(in.matrix, p, mode);
  return a;
}

inline const char* to_string(NormalizationMode m) {
  return m == NormalizationMode::max_ratio ? "max_ratio" : "min_ratio";
}

inline Json to_json(const ReportArtifact& a) {
  const CriticalityReport& r = a.report;
  Json params = Json::array();
  for (const Attribute& p : r.evaluation.parameters)
    params.push_back(Json{{"name", p.name}, {"direction", to_string(p.direction)}});
  return Json{{"schema_version", kSchemaVersion},
              {"artifact", "criticality_report"},
              {"tool_version", a.tool_version},
              {"config_hash", a.config_hash},
              {"seed", a.seed ? Json(*a.seed) : Json(nullptr)},
              {"name", a.name},
              {"traffic_class", a.traffic_class ? Json(to_string(*a.traffic_class)) : Json(nullptr)},
              {"normalization", to_string(r.mode)},
              {"algorithms", r.evaluation.algorithms},
              {"parameters", std::move(params)},
              {"evaluation", r.evaluation.values.to_rows()},
              {"normalized", r.normalized.to_rows()},
              {"criticality", r.criticality},
              {"weights", std::vector<double>(r.weights.values().begin(), r.weights.values().end())},
              {"consistency_ratio", r.consistency_ratio},
              {"scale_divisor", r.scale_divisor},
              {"indices", r.indices},
              {"recommended", r.recommended}};
}

inline std::vector<std::string> report_csv_header(const CriticalityReport& r) {
  std::vector<std::string> h{"name", "algorithm"};
  for (const char* prefix : {"value", "normalized", "criticality", "weight"})
    for (const Attribute& p : r.evaluation.parameters) h.push_back(std::string(prefix) + "[" + p.name + "]");
  h.insert(h.end(), {"scale_divisor", "criticality_index", "recommended", "traffic_class", "seed", "config_hash",
                     "tool_version"});
  return h;
}

inline std::vector<std::vector<std::string>> report_csv_rows(const ReportArtifact& a) {
  const CriticalityReport& r = a.report;
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < r.evaluation.algorithms.size(); ++i) {
    const std::string& alg = r.evaluation.algorithms[i];
    std::vector<std::string> row{a.name, alg};
    const std::size_t k = r.evaluation.parameters.size();
    for (std::size_t j = 0; j < k; ++j) row.push_back(format_full(r.evaluation.values(i, j)));
    for (std::size_t j = 0; j < k; ++j) row.push_back(format_full(r.normalized(i, j)));
    for (std::size_t j = 0; j < k; ++j) row.push_back(std::to_string(r.criticality[i][j]));
    for (std::size_t j = 0; j < k; ++j) row.push_back(format_full(r.weights[j]));
    const bool rec = std::find(r.recommended.begin(), r.recommended.end(), alg) != r.recommended.end();
    row.insert(row.end(), {std::to_string(r.scale_divisor), format_full(r.indices[i]), rec ? "true" : "false",
                           a.traffic_class ? std::string(to_string(*a.traffic_class)) : "",
                           a.seed ? std::to_string(*a.seed) : "", a.config_hash, a.tool_version});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string to_csv(const ReportArtifact& a) {
  std::string out = csv_line(report_csv_header(a.report));
  for (const auto& row : report_csv_rows(a)) out += csv_line(row);
  return out;
}

inline std::string to_table(const ReportArtifact& a) {
  const CriticalityReport& r = a.report;
  const auto& params = r.evaluation.parameters;
  std::ostringstream os;
  os << "Criticality evaluation: " << a.name;
  if (a.traffic_class) os << " (" << to_string(*a.traffic_class) << " traffic)";
  os << "\n\n";

  std::vector<std::string> header{"Algorithm"};
  for (const Attribute& p : params) header.push_back(p.name + " (" + to_string(p.direction) + ")");
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < r.evaluation.algorithms.size(); ++i) {
    std::vector<std::string> row{r.evaluation.algorithms[i]};
    for (std::size_t j = 0; j < params.size(); ++j)
      row.push_back(format_fixed(r.evaluation.values(i, j), 2) + "  d=" + format_fixed(r.normalized(i, j), 3));
    rows.push_back(std::move(row));
  }
  os << "Measured values\n" << text_table(header, rows) << "\n";

  os << "Weights:";
  for (std::size_t j = 0; j < params.size(); ++j) os << (j ? ", " : " ") << params[j].name << " " << format_fixed(r.weights[j], 3);
  os << " (CR " << format_fixed(r.consistency_ratio, 3) << ")\n\n";

  header = {"Algorithm"};
  for (const Attribute& p : params) header.push_back(p.name);
  header.push_back("Criticality index");
  rows.clear();
  for (std::size_t i = 0; i < r.evaluation.algorithms.size(); ++i) {
    std::vector<std::string> row{r.evaluation.algorithms[i]};
    for (int level : r.criticality[i]) row.push_back(std::to_string(level));
    row.push_back(format_fixed(r.indices[i], 2));
    rows.push_back(std::move(row));
  }
  os << text_table(header, rows) << "\n";
  os << "n = " << r.scale_divisor << "; recommended: ";
  for (std::size_t i = 0; i < r.recommended.size(); ++i) os << (i ? ", " : "") << r.recommended[i];
  os << "\nconfig " << a.config_hash;
  if (a.seed) os << ", seed " << *a.seed;
  os << ", vho " << a.tool_version << "\n";
  return os.str();
}

inline std::string render(const ReportArtifact& a, OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return to_json(a).dump(2) + "\n";
    case OutputFormat::csv: return to_csv(a);
    case OutputFormat::table: return to_table(a);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Fixture reproduction

struct ReproductionResult {
  ReportArtifact artifact;
  std::vector<std::string> mismatches;

  bool passed() const { return mismatches.empty(); }
};

inline ReproductionResult check_fixture(const Fixture& f, NormalizationMode mode = NormalizationMode::max_ratio) {
  if (!f.input.judgments) throw Error(Errc::schema, f.input.name + ": fixture carries no judgments");
  if (!f.expected) throw Error(Errc::schema, f.input.name + ": fixture carries no expected tables");
  ReproductionResult res;
  res.artifact = evaluate_input(f.input, *f.input.judgments, mode);
  const CriticalityReport& r = res.artifact.report;
  const FixtureExpectation& x = *f.expected;
  const auto& algs = r.evaluation.algorithms;
  const auto& params = r.evaluation.parameters;
  auto miss = [&](const std::string& table, const std::string& cell, const std::string& want, const std::string& got) {
    res.mismatches.push_back(f.input.name + ": " + table + " " + cell + ": expected " + want + ", got " + got);
  };
  for (std::size_t j = 0; j < params.size(); ++j)
    if (std::abs(r.weights[j] - x.weights[j]) > x.weight_tolerance)
      miss("weights", "[" + params[j].name + "]", format_full(x.weights[j]), format_full(r.weights[j]));
  for (std::size_t i = 0; i < algs.size(); ++i) {
    for (std::size_t j = 0; j < params.size(); ++j)
      if (r.criticality[i][j] != x.criticality[i][j])
        miss("criticality matrix", "[" + algs[i] + ", " + params[j].name + "]", std::to_string(x.criticality[i][j]),
             std::to_string(r.criticality[i][j]));
    if (std::abs(r.indices[i] - x.indices[i]) > x.index_tolerance)
      miss("criticality index", "[" + algs[i] + "]", format_fixed(x.indices[i], 2), format_fixed(r.indices[i], 2));
  }
  if (!x.recommended.empty() && x.recommended != r.recommended) {
    auto join = [](const std::vector<std::string>& v) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
      return s + "}";
    };
    miss("recommendation", "", join(x.recommended), join(r.recommended));
  }
  return res;
}

inline std::string render(const std::vector<ReproductionResult>& results, OutputFormat f) {
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  if (f == OutputFormat::json) {
    Json reports = Json::array();
    for (const ReproductionResult& r : results)
      reports.push_back(Json{{"name", r.artifact.name}, {"passed", r.passed()}, {"mismatches", r.mismatches},
                             {"report", to_json(r.artifact)}});
    return Json{{"schema_version", kSchemaVersion}, {"artifact", "reproduction"}, {"tool_version", kVersion},
                {"passed", all}, {"reports", std::move(reports)}}
               .dump(2) +
           "\n";
  }
  if (f == OutputFormat::csv) {
    std::string out;
    for (std::size_t k = 0; k < results.size(); ++k) {
      auto header = report_csv_header(results[k].artifact.report);
      header.push_back("passed");
      if (k == 0) out += csv_line(header);
      for (auto row : report_csv_rows(results[k].artifact)) {
        row.push_back(results[k].passed() ? "true" : "false");
        out += csv_line(row);
      }
    }
    return out;
  }
  std::string out;
  for (const ReproductionResult& r : results) {
    out += to_table(r.artifact);
    out += r.passed() ? "PASS\n" : "FAIL\n";
    for (const std::string& m : r.mismatches) out += "  " + m + "\n";
    out += "\n";
  }
  out += all ? "All reproductions passed.\n" : "Reproduction FAILED.\n";
  return out;
}

}  // namespace vho
