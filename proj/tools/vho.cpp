// vho: command-line front end for network ranking, handover simulation and
// criticality evaluation of handover algorithms.
//
//   vho simulate      --config PATH [--seed N] [--format F] [--out PATH] [--abnormality order|top]
//   vho evaluate      --input PATH [--config PATH] [--traffic-class NAME] [--cost-min-ratio]
//   vho reproduce     [--fixtures DIR] [--cost-min-ratio] [--format F]
//   vho emit-defaults [--traffic-class NAME] [--seed N] [--out PATH]

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vho/vho.hpp"

#ifndef VHO_FIXTURE_DIR
#define VHO_FIXTURE_DIR "data/fixtures"
#endif

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw vho::Error(vho::Errc::io, "cannot write " + path);
  out << text;
  if (!out) throw vho::Error(vho::Errc::io, "write failed for " + path);
}

vho::TrafficClass traffic_class_or_throw(const std::string& s) {
  const auto t = vho::parse_traffic_class(s);
  if (!t) throw vho::Error(vho::Errc::schema, "unknown traffic class '" + s + "'");
  return *t;
}

vho::OutputFormat format_or_throw(const std::string& s) {
  const auto f = vho::parse_format(s);
  if (!f) throw vho::Error(vho::Errc::schema, "unknown format '" + s + "'");
  return *f;
}

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string format;
  std::string out;
  std::string traffic_class;
  std::string abnormality;
  bool min_ratio = false;
  std::string input;
  std::string fixtures = VHO_FIXTURE_DIR;
};

vho::RunConfig resolve_config(const Options& o) {
  vho::RunConfig c;
  if (!o.config.empty()) {
    c = vho::load_config(o.config);
    if (!o.traffic_class.empty() && traffic_class_or_throw(o.traffic_class) != c.traffic_class)
      throw vho::Error(vho::Errc::schema, "--traffic-class disagrees with the traffic class in " + o.config);
  } else {
    c = vho::default_config(o.traffic_class.empty() ? vho::TrafficClass::background
                                                    : traffic_class_or_throw(o.traffic_class));
  }
  if (o.seed) c.scenario.seed = *o.seed;
  if (!o.format.empty()) c.format = format_or_throw(o.format);
  if (!o.out.empty()) c.output_path = o.out;
  if (o.abnormality == "order") c.abnormality = vho::AbnormalityMode::order;
  else if (o.abnormality == "top") c.abnormality = vho::AbnormalityMode::top;
  c.validate();
  return c;
}

int cmd_simulate(const Options& o) {
  const vho::RunConfig c = resolve_config(o);
  if (const double cr = vho::consistency_ratio(c.attribute_judgments); cr > vho::kConsistencyWarningThreshold)
    std::cerr << "warning: attribute judgments have consistency ratio " << cr << "\n";
  write_output(c.output_path, vho::render(vho::simulate(c), c.format));
  return 0;
}

int cmd_evaluate(const Options& o) {
  if (o.input.empty()) throw vho::Error(vho::Errc::schema, "evaluate needs --input");
  const vho::Fixture f = vho::load_evaluation_input(o.input);

  // Judgment precedence: config file, then the input's own, then the
  // traffic-class default.
  std::optional<vho::PairwiseComparisonMatrix> judgments;
  if (!o.config.empty()) judgments = vho::load_config(o.config).parameter_judgments;
  else if (o.traffic_class.empty() && f.input.judgments) judgments = f.input.judgments;
  if (!judgments) {
    vho::TrafficClass t = vho::TrafficClass::background;
    if (!o.traffic_class.empty()) t = traffic_class_or_throw(o.traffic_class);
    else if (f.input.traffic_class) t = *f.input.traffic_class;
    judgments = vho::default_parameter_judgments(t);
  }
  if (const double cr = vho::consistency_ratio(*judgments); cr > vho::kConsistencyWarningThreshold)
    std::cerr << "warning: parameter judgments have consistency ratio " << cr << "\n";

  const auto mode = o.min_ratio ? vho::NormalizationMode::min_ratio : vho::NormalizationMode::max_ratio;
  const vho::OutputFormat format = o.format.empty() ? vho::OutputFormat::table : format_or_throw(o.format);
  write_output(o.out, vho::render(vho::evaluate_input(f.input, *judgments, mode), format));
  return 0;
}

int cmd_reproduce(const Options& o) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& name : vho::kAllTrafficClasses) {
    const fs::path p = fs::path(o.fixtures) / (std::string(vho::to_string(name)) + ".json");
    if (!fs::exists(p)) throw vho::Error(vho::Errc::io, "missing fixture " + p.string());
    files.push_back(p);
  }
  const auto mode = o.min_ratio ? vho::NormalizationMode::min_ratio : vho::NormalizationMode::max_ratio;
  std::vector<vho::ReproductionResult> results;
  for (const fs::path& p : files) results.push_back(vho::check_fixture(vho::load_fixture(p.string()), mode));
  const vho::OutputFormat format = o.format.empty() ? vho::OutputFormat::table : format_or_throw(o.format);
  write_output(o.out, vho::render(results, format));
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  if (!ok)
    for (const auto& r : results)
      for (const auto& m : r.mismatches) std::cerr << "mismatch: " << m << "\n";
  return ok ? 0 : kExitMismatch;
}

int cmd_emit_defaults(const Options& o) {
  vho::RunConfig c = vho::default_config(o.traffic_class.empty() ? vho::TrafficClass::background
                                                                 : traffic_class_or_throw(o.traffic_class));
  if (o.seed) c.scenario.seed = *o.seed;
  write_output(o.out, vho::to_json(c).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertical handover decision engine and handover-algorithm evaluator"};
  app.set_version_flag("--version", std::string(vho::kVersion));
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> formats{"table", "csv", "json"};
  const std::vector<std::string> classes{"background", "conversational", "interactive", "streaming"};

  auto* sim = app.add_subcommand("simulate", "Run handover episodes and measure abnormality and handoff rates");
  sim->add_option("--config", o.config, "Run configuration (JSON)")->check(CLI::ExistingFile);
  sim->add_option("--seed", o.seed, "Override the scenario seed");
  sim->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  sim->add_option("--out", o.out, "Output file ('-' for stdout)");
  sim->add_option("--traffic-class", o.traffic_class, "Traffic class defaults")->check(CLI::IsMember(classes));
  sim->add_option("--abnormality", o.abnormality, "Abnormality event definition")
      ->check(CLI::IsMember({"order", "top"}));

  auto* eval = app.add_subcommand("evaluate", "Score handover algorithms by criticality index");
  eval->add_option("--input", o.input, "Metrics artifact (JSON/CSV) or fixture (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--config", o.config, "Take parameter judgments from this configuration")->check(CLI::ExistingFile);
  eval->add_option("--traffic-class", o.traffic_class, "Use this class's default judgments")
      ->check(CLI::IsMember(classes));
  eval->add_flag("--cost-min-ratio", o.min_ratio, "Normalize cost parameters as column min / value");
  eval->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  eval->add_option("--out", o.out, "Output file ('-' for stdout)");

  auto* repro = app.add_subcommand("reproduce", "Check the bundled reference fixtures");
  repro->add_option("--fixtures", o.fixtures, "Fixture directory")->check(CLI::ExistingDirectory);
  repro->add_flag("--cost-min-ratio", o.min_ratio, "Normalize cost parameters as column min / value");
  repro->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  repro->add_option("--out", o.out, "Output file ('-' for stdout)");

  auto* emit = app.add_subcommand("emit-defaults", "Write the default configuration for a traffic class");
  emit->add_option("--traffic-class", o.traffic_class, "Traffic class")->check(CLI::IsMember(classes));
  emit->add_option("--seed", o.seed, "Scenario seed");
  emit->add_option("--out", o.out, "Output file ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) return cmd_simulate(o);
    if (*eval) return cmd_evaluate(o);
    if (*repro) return cmd_reproduce(o);
    if (*emit) return cmd_emit_defaults(o);
  } catch (const vho::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
