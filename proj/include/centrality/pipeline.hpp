#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "centrality/dataset.hpp"
#include "centrality/exact.hpp"
#include "centrality/graph.hpp"
#include "centrality/mlp.hpp"
#include "centrality/ranks.hpp"

namespace centrality {

struct PredictResult {
  std::vector<double> scores;  // de-normalized rank-scale predictions
  std::vector<double> ranks;   // tie-averaged re-ranking of the scores
  std::vector<std::uint64_t> vertex_labels;
  bool reduced_to_lcc = false;
};

// Degree + eigenvector ranks -> model -> re-ranked predictions. Row i always
// corresponds to vertex i of the scored graph (label-mapped). Disconnected
// inputs are reduced to their LCC with reduced_to_lcc set.
PredictResult predict(const Graph& g, const MlpModel& model, int workers);

struct CompareConfig {
  std::string network = "graph";
  std::vector<double> fractions{0.025, 0.05};
  int trials = 5;
  std::uint64_t seed = 0;
  int workers = 1;
  std::optional<MlpModel> betweenness_model;
  std::optional<MlpModel> closeness_model;
  bool with_times = true;  // zeroed when false, for byte-stable output
};

// Exact betweenness+closeness once; sampling at each fraction x trials
// seeds; one model row per provided model. tau-b/R2/MSE are computed between
// rank vectors against the exact ranks.
std::vector<EvalReport> compare(const Graph& g, const CompareConfig& cfg);

struct ReportRow {
  std::string method;
  std::string metric;
  std::size_t runs = 0;
  double mean_tau_b = 0.0;
  double ci99_tau_b = 0.0;
  double mean_r2 = 0.0;
  double mean_mse = 0.0;
  double mean_seconds = 0.0;
};

// Groups by (method, metric) keeping first-appearance order.
std::vector<ReportRow> aggregate_reports(const std::vector<EvalReport>& rows);

// with_times controls whether the mean_seconds column is emitted; reports
// without times are byte-identical across reruns.
std::string report_csv(const std::vector<ReportRow>& rows, bool with_times);
std::string report_json(const std::vector<ReportRow>& rows, bool with_times);

}  // namespace centrality
