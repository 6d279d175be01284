// Simulates the three rankers on the reference scenario and scores them with
// the criticality model for conversational traffic.

#include <iostream>

#include "vho/vho.hpp"

int main() {
  vho::RunConfig config = vho::default_config(vho::TrafficClass::conversational);
  config.runs = 5;
  config.scenario.epochs = 200;

  const vho::MetricsArtifact metrics = vho::simulate(config);
  std::cout << vho::render(metrics, vho::OutputFormat::table) << "\n";

  const vho::EvaluationInput input = vho::evaluation_input_from_metrics(metrics, "simulated conversational");
  const vho::ReportArtifact report = vho::evaluate_input(input, config.parameter_judgments);
  std::cout << vho::render(report, vho::OutputFormat::table);
}
