#include "centrality/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <utility>

#include "centrality/rng.hpp"
#include "centrality/sampling.hpp"
#include "centrality/util.hpp"
#include <nlohmann/json.hpp>

namespace centrality {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

EvalReport score_ranks(const std::vector<double>& pred_ranks,
                       const std::vector<double>& exact_ranks,
                       std::string network, std::string method,
                       std::string metric, double seconds) {
  EvalReport r;
  r.network = std::move(network);
  r.method = std::move(method);
  r.metric = std::move(metric);
  r.tau_b = kendall_tau_b(pred_ranks, exact_ranks);
  r.r_squared = r_squared(pred_ranks, exact_ranks);
  r.mse = mean_squared_error(pred_ranks, exact_ranks);
  r.seconds = seconds;
  return r;
}

}  // namespace

PredictResult predict(const Graph& g, const MlpModel& model, int workers) {
  PredictResult out;
  Graph lcc;
  const Graph* scored = &g;
  if (!is_connected(g)) {
    lcc = largest_connected_component(g);
    scored = &lcc;
    out.reduced_to_lcc = true;
  }
  const std::size_t n = scored->num_vertices();
  out.vertex_labels.resize(n);
  for (VertexId v = 0; v < n; ++v) out.vertex_labels[v] = scored->label(v);
  if (n == 0) return out;

  const auto deg = rank_scale(rank_transform(degree_centrality(*scored).values), n);
  const auto eig = rank_scale(
      rank_transform(eigenvector_centrality(*scored).scores.values), n);

  Eigen::MatrixXd X(2, n);
  for (std::size_t i = 0; i < n; ++i) {
    X(0, i) = apply_stats(deg[i], model.input_stats[0]);
    X(1, i) = apply_stats(eig[i], model.input_stats[1]);
  }
  (void)workers;
  const Eigen::VectorXd y = forward_batch(model, X);

  out.scores.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.scores[i] = invert_stats(y[static_cast<Eigen::Index>(i)], model.output_stats);

  // Scaled ranks grow with rank number, so the most central vertex has the
  // smallest score; negate before re-ranking to keep rank 1 = most central.
  std::vector<double> neg(n);
  for (std::size_t i = 0; i < n; ++i) neg[i] = -out.scores[i];
  out.ranks = rank_transform(neg);
  return out;
}

std::vector<EvalReport> compare(const Graph& g, const CompareConfig& cfg) {
  Graph lcc;
  const Graph* scored = &g;
  if (!is_connected(g)) {
    lcc = largest_connected_component(g);
    scored = &lcc;
  }

  std::vector<EvalReport> rows;
  auto t0 = std::chrono::steady_clock::now();
  const BetweennessCloseness exact = betweenness_closeness(*scored, cfg.workers);
  const double exact_seconds = cfg.with_times ? seconds_since(t0) : 0.0;
  const auto exact_bet_ranks = rank_transform(exact.betweenness.values);
  const auto exact_clo_ranks = rank_transform(exact.closeness.values);

  rows.push_back(score_ranks(exact_bet_ranks, exact_bet_ranks, cfg.network,
                             "exact", "betweenness", exact_seconds));
  rows.push_back(score_ranks(exact_clo_ranks, exact_clo_ranks, cfg.network,
                             "exact", "closeness", exact_seconds));

  for (std::size_t fi = 0; fi < cfg.fractions.size(); ++fi) {
    const double fraction = cfg.fractions[fi];
    const std::string method = "sample(" + format_double(fraction) + ")";
    for (int trial = 0; trial < cfg.trials; ++trial) {
      SampleConfig sc;
      sc.fraction = fraction;
      sc.trials = cfg.trials;
      sc.seed = derive_seed(cfg.seed,
                            fi * static_cast<std::uint64_t>(cfg.trials) + trial);
      t0 = std::chrono::steady_clock::now();
      const BetweennessCloseness approx =
          approx_betweenness_closeness(*scored, sc, cfg.workers);
      const double secs = cfg.with_times ? seconds_since(t0) : 0.0;
      rows.push_back(score_ranks(rank_transform(approx.betweenness.values),
                                 exact_bet_ranks, cfg.network, method,
                                 "betweenness", secs));
      rows.push_back(score_ranks(rank_transform(approx.closeness.values),
                                 exact_clo_ranks, cfg.network, method,
                                 "closeness", secs));
    }
  }

  const auto model_row = [&](const MlpModel& model,
                             const std::vector<double>& exact_ranks,
                             const char* metric) {
    t0 = std::chrono::steady_clock::now();
    const PredictResult pr = predict(*scored, model, cfg.workers);
    const double secs = cfg.with_times ? seconds_since(t0) : 0.0;
    rows.push_back(score_ranks(pr.ranks, exact_ranks, cfg.network, "model",
                               metric, secs));
  };
  if (cfg.betweenness_model)
    model_row(*cfg.betweenness_model, exact_bet_ranks, "betweenness");
  if (cfg.closeness_model)
    model_row(*cfg.closeness_model, exact_clo_ranks, "closeness");

  return rows;
}

std::vector<ReportRow> aggregate_reports(const std::vector<EvalReport>& rows) {
  std::vector<ReportRow> out;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  std::vector<std::vector<double>> taus;
  for (const EvalReport& r : rows) {
    const auto key = std::make_pair(r.method, r.metric);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, out.size()).first;
      ReportRow row;
      row.method = r.method;
      row.metric = r.metric;
      out.push_back(row);
      taus.emplace_back();
    }
    ReportRow& row = out[it->second];
    row.runs += 1;
    row.mean_r2 += r.r_squared;
    row.mean_mse += r.mse;
    row.mean_seconds += r.seconds;
    taus[it->second].push_back(r.tau_b);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double k = static_cast<double>(out[i].runs);
    const MeanCi ci = mean_ci99(taus[i]);
    out[i].mean_tau_b = ci.mean;
    out[i].ci99_tau_b = ci.half_width;
    out[i].mean_r2 /= k;
    out[i].mean_mse /= k;
    out[i].mean_seconds /= k;
  }
  return out;
}

std::string report_csv(const std::vector<ReportRow>& rows, bool with_times) {
  std::string out = "method,metric,runs,mean_tau_b,ci99_tau_b,mean_r2,mean_mse";
  if (with_times) out += ",mean_seconds";
  out += '\n';
  for (const ReportRow& r : rows) {
    out += r.method;
    out += ',';
    out += r.metric;
    out += ',';
    out += std::to_string(r.runs);
    out += ',';
    out += format_double(r.mean_tau_b);
    out += ',';
    out += format_double(r.ci99_tau_b);
    out += ',';
    out += format_double(r.mean_r2);
    out += ',';
    out += format_double(r.mean_mse);
    if (with_times) {
      out += ',';
      out += format_double(r.mean_seconds);
    }
    out += '\n';
  }
  return out;
}

std::string report_json(const std::vector<ReportRow>& rows, bool with_times) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) {
    nlohmann::ordered_json row;
    row["method"] = r.method;
    row["metric"] = r.metric;
    row["runs"] = r.runs;
    row["mean_tau_b"] = r.mean_tau_b;
    row["ci99_tau_b"] = r.ci99_tau_b;
    row["mean_r2"] = r.mean_r2;
    row["mean_mse"] = r.mean_mse;
    if (with_times) row["mean_seconds"] = r.mean_seconds;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

}  // namespace centrality
