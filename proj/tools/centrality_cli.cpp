#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "centrality/bter.hpp"
#include "centrality/dataset.hpp"
#include "centrality/exact.hpp"
#include "centrality/graph.hpp"
#include "centrality/mlp.hpp"
#include "centrality/parallel.hpp"
#include "centrality/pipeline.hpp"
#include "centrality/rng.hpp"
#include "centrality/sampling.hpp"
#include "centrality/util.hpp"

using namespace centrality;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 1;
  int workers = 0;  // 0 -> CENTRALITY_WORKERS or hardware
  std::string output;
  std::string format = "csv";
};

int effective_workers(int flag_value) {
  if (flag_value > 0) return flag_value;
  return default_workers();
}

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
  } else {
    write_text_file(g.output, text);
  }
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Graph load_graph(const std::string& path, bool lcc) {
  Graph g = load_edge_list_file(path);
  if (lcc) g = largest_connected_component(g);
  return g;
}

std::string values_csv(const Graph& g, const std::vector<double>& values) {
  std::string out = "vertex_id,value\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out += std::to_string(g.label(v));
    out += ',';
    out += format_double(values[v]);
    out += '\n';
  }
  return out;
}

std::string values_json(const Graph& g, const std::vector<double>& values,
                        const std::string& metric, double seconds, int workers) {
  nlohmann::ordered_json j;
  j["metric"] = metric;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["seconds"] = seconds;
  j["workers"] = workers;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    rows.push_back({{"vertex_id", g.label(v)}, {"value", values[v]}});
  }
  j["values"] = std::move(rows);
  return j.dump(2) + "\n";
}

void summary_to_stderr(const std::string& metric, const Graph& g,
                       double seconds, int workers) {
  nlohmann::ordered_json j;
  j["metric"] = metric;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["seconds"] = seconds;
  j["workers"] = workers;
  std::cerr << j.dump() << "\n";
}

std::vector<double> metric_values(const Graph& g, Metric metric, int workers) {
  switch (metric) {
    case Metric::degree:
      return degree_centrality(g).values;
    case Metric::eigenvector:
      return eigenvector_centrality(g).scores.values;
    case Metric::betweenness:
      return betweenness_closeness(g, workers).betweenness.values;
    case Metric::closeness:
      return betweenness_closeness(g, workers).closeness.values;
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact, sampled and learned network centrality"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--seed", g.seed, "master seed")->capture_default_str();
  app.add_option("--workers", g.workers,
                 "worker threads (default: CENTRALITY_WORKERS or hardware)");
  app.add_option("--output,-o", g.output, "output file (default: stdout)");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // generate
  auto* gen = app.add_subcommand("generate", "generate BTER network(s)");
  std::uint32_t gen_n = 1000;
  std::string gen_family = "heavy";
  double gen_lambda = 2.0, gen_s = 10.0, gen_clustering = 0.5;
  std::string corpus_dir;
  std::vector<std::uint32_t> corpus_sizes{100, 200, 300, 400, 500};
  int per_cell = 4;
  gen->add_option("--n", gen_n, "vertex count")->capture_default_str();
  gen->add_option("--family", gen_family, "degree family")
      ->check(CLI::IsMember({"heavy", "heavy_tailed", "lognormal"}))
      ->capture_default_str();
  gen->add_option("--lambda", gen_lambda, "heavy-tailed exponent")
      ->capture_default_str();
  gen->add_option("--s", gen_s, "lognormal shape")->capture_default_str();
  gen->add_option("--clustering", gen_clustering, "within-block edge probability")
      ->capture_default_str();
  gen->add_option("--corpus-dir", corpus_dir,
                  "generate a full training corpus into this directory");
  gen->add_option("--sizes", corpus_sizes, "corpus network sizes")
      ->capture_default_str();
  gen->add_option("--per-cell", per_cell, "corpus networks per (config, size)")
      ->capture_default_str();

  // exact / sample
  auto* exact_cmd = app.add_subcommand("exact", "exact centrality for one graph");
  std::string input, metric_name_arg = "closeness";
  bool lcc = false;
  exact_cmd->add_option("--input,-i", input, "edge-list file")->required();
  exact_cmd->add_option("--metric", metric_name_arg, "centrality metric")
      ->check(CLI::IsMember({"degree", "eigenvector", "betweenness", "closeness"}))
      ->capture_default_str();
  exact_cmd->add_flag("--lcc", lcc, "reduce to the largest component first");

  auto* sample_cmd =
      app.add_subcommand("sample", "sampling approximation for one graph");
  double fraction = 0.05;
  sample_cmd->add_option("--input,-i", input, "edge-list file")->required();
  sample_cmd->add_option("--metric", metric_name_arg, "centrality metric")
      ->check(CLI::IsMember({"betweenness", "closeness"}))
      ->capture_default_str();
  sample_cmd->add_option("--fraction", fraction, "source sample fraction")
      ->capture_default_str();
  sample_cmd->add_flag("--lcc", lcc, "reduce to the largest component first");

  // make-dataset
  auto* mkds = app.add_subcommand("make-dataset", "corpus -> training dataset");
  std::string manifest_path, target = "closeness";
  mkds->add_option("--manifest", manifest_path, "corpus manifest.csv")->required();
  mkds->add_option("--target", target, "label metric")
      ->check(CLI::IsMember({"betweenness", "closeness"}))
      ->capture_default_str();

  // train
  auto* train_cmd = app.add_subcommand("train", "train a rank-regression MLP");
  std::string dataset_path, algo = "lm", history_path;
  int max_epochs = 200, patience = 10;
  train_cmd->add_option("--dataset", dataset_path, "dataset file")->required();
  train_cmd->add_option("--algo", algo, "training algorithm")
      ->check(CLI::IsMember({"lm", "gd", "gdm", "rprop"}))
      ->capture_default_str();
  train_cmd->add_option("--max-epochs", max_epochs, "epoch cap")
      ->capture_default_str();
  train_cmd->add_option("--patience", patience, "early-stopping patience")
      ->capture_default_str();
  train_cmd->add_option("--history", history_path, "write per-epoch CSV here");

  // predict
  auto* predict_cmd = app.add_subcommand("predict", "score a graph with a model");
  std::string model_path;
  predict_cmd->add_option("--input,-i", input, "edge-list file")->required();
  predict_cmd->add_option("--model", model_path, "model JSON file")->required();

  // compare
  auto* compare_cmd =
      app.add_subcommand("compare", "exact vs sampling vs model on one graph");
  std::string bet_model_path, clo_model_path, network_name = "graph";
  std::vector<double> fractions{0.025, 0.05};
  int trials = 5;
  bool no_times = false;
  compare_cmd->add_option("--input,-i", input, "edge-list file")->required();
  compare_cmd->add_option("--network", network_name, "network id in the report")
      ->capture_default_str();
  compare_cmd->add_option("--fractions", fractions, "sampling fractions")
      ->capture_default_str();
  compare_cmd->add_option("--trials", trials, "sampling trials per fraction")
      ->capture_default_str();
  compare_cmd->add_option("--bet-model", bet_model_path, "betweenness model");
  compare_cmd->add_option("--clo-model", clo_model_path, "closeness model");
  compare_cmd->add_flag("--no-times", no_times, "zero the seconds column");

  // report
  auto* report_cmd =
      app.add_subcommand("report", "aggregate compare CSVs by method and metric");
  std::vector<std::string> report_inputs;
  bool with_times = false;
  report_cmd->add_option("--input,-i", report_inputs, "compare CSV file(s)")
      ->required();
  report_cmd->add_flag("--with-times", with_times, "emit the mean_seconds column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n" << app.help();
    return 1;
  }

  const int workers = effective_workers(g.workers);
  try {
    if (*gen) {
      if (!corpus_dir.empty()) {
        CorpusConfig cc;
        cc.directory = corpus_dir;
        cc.sizes = corpus_sizes;
        cc.networks_per_cell = per_cell;
        cc.master_seed = g.seed;
        cc.workers = workers;
        const CorpusManifest manifest = build_training_corpus(cc);
        std::cerr << "generated " << manifest.entries.size() << " networks in "
                  << corpus_dir << "\n";
        return 0;
      }
      BterConfig bc;
      bc.n = gen_n;
      bc.dist.family = family_from_name(gen_family);
      bc.dist.lambda = gen_lambda;
      bc.dist.s = gen_s;
      bc.clustering_target = gen_clustering;
      bc.seed = g.seed;
      BterDiagnostics diag;
      const Graph graph = generate_bter(bc, &diag);
      std::ostringstream edges;
      write_edge_list(graph, edges);
      emit(g, edges.str());
      if (!g.output.empty()) {
        CorpusEntry e;
        e.file = g.output;
        e.family = family_name(bc.dist.family);
        e.parameter = bc.dist.family == DegreeFamily::heavy_tailed ? bc.dist.lambda
                                                                   : bc.dist.s;
        e.n = bc.n;
        e.clustering_target = bc.clustering_target;
        e.seed = bc.seed;
        e.realized_m = graph.num_edges();
        e.realized_clustering = global_clustering_coefficient(graph);
        nlohmann::ordered_json j;
        j["family"] = e.family;
        j["parameter"] = e.parameter;
        j["n"] = e.n;
        j["clustering_target"] = e.clustering_target;
        j["seed"] = e.seed;
        j["realized_m"] = e.realized_m;
        j["realized_clustering"] = e.realized_clustering;
        write_text_file(std::filesystem::path(g.output).replace_extension(".json"),
                        j.dump(2) + "\n");
      }
      nlohmann::ordered_json d;
      d["n"] = graph.num_vertices();
      d["m"] = graph.num_edges();
      d["phase2_edges"] = diag.phase2_edges;
      d["phase3_requested"] = diag.phase3_requested;
      d["phase3_placed"] = diag.phase3_placed;
      d["unplaced_excess_fraction"] = diag.unplaced_excess_fraction;
      std::cerr << d.dump() << "\n";
      return 0;
    }

    if (*exact_cmd || *sample_cmd) {
      const Graph graph = load_graph(input, lcc);
      const Metric metric = metric_from_name(metric_name_arg);
      const auto t0 = std::chrono::steady_clock::now();
      std::vector<double> values;
      if (*exact_cmd) {
        values = metric_values(graph, metric, workers);
      } else {
        SampleConfig sc;
        sc.fraction = fraction;
        sc.seed = g.seed;
        const BetweennessCloseness bc =
            approx_betweenness_closeness(graph, sc, workers);
        values = metric == Metric::betweenness ? bc.betweenness.values
                                               : bc.closeness.values;
      }
      const double secs = elapsed(t0);
      if (g.format == "json") {
        emit(g, values_json(graph, values, metric_name_arg, secs, workers));
      } else {
        emit(g, values_csv(graph, values));
        summary_to_stderr(metric_name_arg, graph, secs, workers);
      }
      return 0;
    }

    if (*mkds) {
      if (g.output.empty()) throw std::invalid_argument("make-dataset needs --output");
      const Dataset d = make_dataset(manifest_path, metric_from_name(target), workers);
      save_dataset(d, g.output);
      std::cerr << d.size() << " rows, manifest hash " << to_hex(d.manifest_hash)
                << "\n";
      return 0;
    }

    if (*train_cmd) {
      if (g.output.empty()) throw std::invalid_argument("train needs --output");
      const Dataset d = load_dataset(dataset_path);
      const auto rows = static_cast<Eigen::Index>(d.size());
      Eigen::MatrixXd X(rows, 2);
      Eigen::VectorXd y(rows);
      for (Eigen::Index i = 0; i < rows; ++i) {
        X(i, 0) = d.degree_rank[static_cast<std::size_t>(i)];
        X(i, 1) = d.eigenvector_rank[static_cast<std::size_t>(i)];
        y[i] = d.label_rank[static_cast<std::size_t>(i)];
      }
      TrainConfig tc;
      tc.algorithm = algorithm_from_name(algo);
      tc.max_epochs = max_epochs;
      tc.patience = patience;
      tc.model_seed = derive_seed(g.seed, 1);
      tc.shuffle_seed = derive_seed(g.seed, 2);
      tc.workers = workers;
      const TrainResult res = train(X, y, d.target_metric, tc);
      ModelProvenance prov;
      prov.model_seed = tc.model_seed;
      prov.shuffle_seed = tc.shuffle_seed;
      prov.master_seed = g.seed;
      prov.corpus_manifest_hash = to_hex(d.manifest_hash);
      prov.algorithm = algo;
      prov.max_epochs = max_epochs;
      prov.patience = patience;
      prov.train_split = tc.train_split;
      prov.best_val_mse = res.best_val_mse;
      prov.best_epoch = res.best_epoch;
      prov.epochs_run = static_cast<int>(res.history.size());
      save_model(res.model, prov, g.output);
      if (!history_path.empty())
        write_text_file(history_path, history_csv(res.history));
      std::cerr << "best val MSE " << format_double(res.best_val_mse)
                << " at epoch " << res.best_epoch << " ("
                << res.history.size() << " epochs";
      if (res.lm_terminated) std::cerr << ", mu blew up";
      std::cerr << ")\n";
      return 0;
    }

    if (*predict_cmd) {
      const Graph graph = load_graph(input, false);
      const MlpModel model = load_model(model_path);
      const auto t0 = std::chrono::steady_clock::now();
      const PredictResult pr = predict(graph, model, workers);
      const double secs = elapsed(t0);
      std::string out = "vertex_id,score,rank\n";
      for (std::size_t i = 0; i < pr.scores.size(); ++i) {
        out += std::to_string(pr.vertex_labels[i]);
        out += ',';
        out += format_double(pr.scores[i]);
        out += ',';
        out += format_double(pr.ranks[i]);
        out += '\n';
      }
      emit(g, out);
      if (pr.reduced_to_lcc)
        std::cerr << "input disconnected; scored the largest component\n";
      summary_to_stderr(model.target_metric, graph, secs, workers);
      return 0;
    }

    if (*compare_cmd) {
      const Graph graph = load_graph(input, true);
      CompareConfig cc;
      cc.network = network_name;
      cc.fractions = fractions;
      cc.trials = trials;
      cc.seed = g.seed;
      cc.workers = workers;
      cc.with_times = !no_times;
      if (!bet_model_path.empty()) cc.betweenness_model = load_model(bet_model_path);
      if (!clo_model_path.empty()) cc.closeness_model = load_model(clo_model_path);
      const std::vector<EvalReport> rows = compare(graph, cc);
      emit(g, eval_reports_to_csv(rows));
      return 0;
    }

    if (*report_cmd) {
      std::vector<EvalReport> rows;
      for (const std::string& file : report_inputs) {
        const std::vector<EvalReport> part = eval_reports_from_csv(read_text_file(file));
        rows.insert(rows.end(), part.begin(), part.end());
      }
      const std::vector<ReportRow> agg = aggregate_reports(rows);
      emit(g, g.format == "json" ? report_json(agg, with_times)
                                 : report_csv(agg, with_times));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
