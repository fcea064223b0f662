#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "centrality/ranks.hpp"

namespace centrality {

// Fully connected feedforward regressor, tanh hidden layers, linear output.
struct MlpModel {
  std::vector<int> layer_sizes{2, 20, 20, 20, 1};
  std::vector<Eigen::MatrixXd> weights;  // per layer, out x in
  std::vector<Eigen::VectorXd> biases;   // per layer
  bool identity_hidden = false;          // test-only: replaces tanh by identity
  std::array<NormalizationStats, 2> input_stats{};
  NormalizationStats output_stats{};
  std::string target_metric;  // "betweenness" or "closeness"
};

int parameter_count(const MlpModel& m);

// Weights drawn uniformly in [-0.7/sqrt(fan_in), +0.7/sqrt(fan_in)],
// biases likewise with the layer's fan-in.
MlpModel make_mlp(const std::vector<int>& layer_sizes, std::uint64_t seed);

Eigen::VectorXd flatten_parameters(const MlpModel& m);
void set_parameters(MlpModel& m, const Eigen::VectorXd& theta);

// Inputs as columns (in_dim x batch); returns one output per column.
// Throws on non-finite input.
Eigen::VectorXd forward_batch(const MlpModel& m, const Eigen::MatrixXd& X);
double forward_one(const MlpModel& m, double x0, double x1);

// Gradient of 1/2 * mean((y - t)^2) over the batch, in parameter order
// (per layer: row-major weights, then biases).
Eigen::VectorXd gradient(const MlpModel& m, const Eigen::MatrixXd& X,
                         const Eigen::VectorXd& t, int workers = 1);

struct NormalEquations {
  Eigen::MatrixXd jtj;  // p x p, symmetric PSD
  Eigen::VectorXd jte;  // p
  double sse = 0.0;     // sum of squared residuals at the current parameters
};

// Residual Jacobian rows accumulated streamingly (J never materialized in
// full); deterministic for any worker count.
NormalEquations jacobian_accumulate(const MlpModel& m, const Eigen::MatrixXd& X,
                                    const Eigen::VectorXd& t, int workers = 1);

struct LmConfig {
  double mu0 = 0.005;
  double mu_max = 1e10;
  double mu_increase = 1.5;
  // Decrease is a fraction of the increase factor: accepted steps multiply
  // mu by mu_decrease_fraction * mu_increase (0.15 by default).
  double mu_decrease_fraction = 0.1;
};

struct FirstOrderConfig {
  double learning_rate = 0.01;
  double momentum = 0.9;
  double rprop_initial_step = 0.07;
  double rprop_inc = 1.2;
  double rprop_dec = 0.5;
  double rprop_min_step = 1e-12;
  double rprop_max_step = 50.0;
};

struct LmState {
  double mu = 0.005;
  double sse = 0.0;        // SSE at the current parameters (valid once primed)
  bool primed = false;
  bool terminated = false;  // mu exceeded mu_max with no acceptance
};

// One full-batch epoch: solve (JtJ + mu I) delta = -Jte, accept the candidate
// iff its SSE strictly decreases (mu *= 0.15), otherwise raise mu (*= 1.5)
// and re-solve. Returns true when a step was accepted; false means mu passed
// mu_max and training should terminate.
bool lm_epoch(MlpModel& m, const Eigen::MatrixXd& X, const Eigen::VectorXd& t,
              LmState& state, const LmConfig& cfg, int workers = 1);

enum class Algorithm { lm, gd, gdm, rprop };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

struct FirstOrderState {
  Eigen::VectorXd velocity;   // gdm
  Eigen::VectorXd step_size;  // rprop
  Eigen::VectorXd prev_grad;  // rprop
};

void first_order_epoch(MlpModel& m, const Eigen::MatrixXd& X,
                       const Eigen::VectorXd& t, Algorithm algo,
                       FirstOrderState& state, const FirstOrderConfig& cfg,
                       int workers = 1);

// Patience logic shared by every trainer: stop after `patience` consecutive
// epochs without a strict improvement of the validation MSE.
class EarlyStopper {
 public:
  explicit EarlyStopper(int patience) : patience_(patience) {}

  // Returns true when training should stop after this epoch.
  bool observe(int epoch, double val_mse) {
    if (val_mse < best_) {
      best_ = val_mse;
      best_epoch_ = epoch;
      stale_ = 0;
    } else {
      ++stale_;
    }
    return stale_ >= patience_;
  }

  double best() const { return best_; }
  int best_epoch() const { return best_epoch_; }

 private:
  int patience_;
  double best_ = std::numeric_limits<double>::infinity();
  int best_epoch_ = 0;
  int stale_ = 0;
};

struct TrainConfig {
  std::vector<int> layer_sizes{2, 20, 20, 20, 1};
  Algorithm algorithm = Algorithm::lm;
  LmConfig lm;
  FirstOrderConfig first_order;
  int max_epochs = 200;
  int patience = 10;
  double train_split = 0.85;
  std::uint64_t model_seed = 0;    // weight init
  std::uint64_t shuffle_seed = 0;  // train/validation split
  int workers = 1;
};

struct EpochRecord {
  int epoch = 0;
  double train_mse = 0.0;
  double val_mse = 0.0;
  double mu = 0.0;  // 0 for first-order algorithms
};

struct TrainResult {
  MlpModel model;  // best validation snapshot, not the last epoch
  std::vector<EpochRecord> history;
  int best_epoch = 0;
  double best_val_mse = 0.0;
  bool lm_terminated = false;
};

// Columns of `inputs` are the two features; rows are samples, already taken
// through normalization steps 1-2. train() shuffles, splits 85/15, computes
// the z-score stats on the training split only, stores them in the model and
// trains full-batch epochs with validation-based early stopping.
TrainResult train(const Eigen::MatrixXd& inputs, const Eigen::VectorXd& labels,
                  const std::string& target_metric, const TrainConfig& cfg);

std::string history_csv(const std::vector<EpochRecord>& history);

struct ModelProvenance {
  std::uint64_t model_seed = 0;
  std::uint64_t shuffle_seed = 0;
  std::uint64_t master_seed = 0;
  std::string corpus_manifest_hash;  // hex
  std::string algorithm;
  int max_epochs = 0;
  int patience = 10;
  double train_split = 0.85;
  double best_val_mse = 0.0;
  int best_epoch = 0;
  int epochs_run = 0;
};

void save_model(const MlpModel& m, const ModelProvenance& prov,
                const std::filesystem::path& path);
MlpModel load_model(const std::filesystem::path& path, ModelProvenance* prov = nullptr);

}  // namespace centrality
