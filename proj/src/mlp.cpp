#include "centrality/mlp.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "centrality/parallel.hpp"
#include "centrality/rng.hpp"
#include "centrality/util.hpp"

namespace centrality {

namespace {

// tanh through the vectorized exp kernel; Eigen's array tanh falls back to
// a scalar loop for doubles, which dominates scoring time otherwise.
inline void tanh_inplace(Eigen::MatrixXd& a) {
  a.array() = 1.0 - 2.0 / ((2.0 * a.array()).exp() + 1.0);
}

struct Layout {
  std::vector<int> w_offset;
  std::vector<int> b_offset;
  int total = 0;
};

Layout layout_of(const std::vector<int>& sizes) {
  Layout l;
  int off = 0;
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    l.w_offset.push_back(off);
    off += sizes[i] * sizes[i - 1];
    l.b_offset.push_back(off);
    off += sizes[i];
  }
  l.total = off;
  return l;
}

// acts[0] = X, acts[l] = output of layer l (tanh applied to hidden layers).
void forward_layers(const MlpModel& m, const Eigen::MatrixXd& X,
                    std::vector<Eigen::MatrixXd>& acts) {
  const std::size_t nl = m.weights.size();
  acts.resize(nl + 1);
  acts[0] = X;
  for (std::size_t l = 0; l < nl; ++l) {
    acts[l + 1].noalias() = m.weights[l] * acts[l];
    acts[l + 1].colwise() += m.biases[l];
    if (l + 1 < nl && !m.identity_hidden) tanh_inplace(acts[l + 1]);
  }
}

constexpr std::size_t kForwardBlock = 1 << 14;
constexpr std::size_t kJacobianChunk = 256;

double sse_of(const MlpModel& m, const Eigen::MatrixXd& X, const Eigen::VectorXd& t) {
  const std::size_t n = static_cast<std::size_t>(X.cols());
  double sse = 0.0;
  std::vector<Eigen::MatrixXd> acts;
  for (std::size_t b = 0; b < n; b += kForwardBlock) {
    const std::size_t e = std::min(n, b + kForwardBlock);
    forward_layers(m, X.middleCols(static_cast<Eigen::Index>(b),
                                   static_cast<Eigen::Index>(e - b)),
                   acts);
    sse += (acts.back().row(0).transpose() -
            t.segment(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(e - b)))
               .squaredNorm();
  }
  return sse;
}

void check_model(const MlpModel& m) {
  if (m.layer_sizes.size() < 2) throw std::invalid_argument("model needs >= 2 layers");
  if (m.weights.size() != m.layer_sizes.size() - 1 || m.biases.size() != m.weights.size())
    throw std::invalid_argument("model weight count mismatch");
  if (m.layer_sizes.back() != 1)
    throw std::invalid_argument("regression model needs one output");
  for (std::size_t l = 0; l < m.weights.size(); ++l) {
    if (m.weights[l].rows() != m.layer_sizes[l + 1] ||
        m.weights[l].cols() != m.layer_sizes[l] ||
        m.biases[l].size() != m.layer_sizes[l + 1])
      throw std::invalid_argument("model shape mismatch");
  }
}

}  // namespace

int parameter_count(const MlpModel& m) { return layout_of(m.layer_sizes).total; }

MlpModel make_mlp(const std::vector<int>& layer_sizes, std::uint64_t seed) {
  if (layer_sizes.size() < 2) throw std::invalid_argument("model needs >= 2 layers");
  MlpModel m;
  m.layer_sizes = layer_sizes;
  Rng rng(seed);
  for (std::size_t l = 1; l < layer_sizes.size(); ++l) {
    const int out = layer_sizes[l], in = layer_sizes[l - 1];
    if (out < 1 || in < 1) throw std::invalid_argument("layer sizes must be positive");
    const double bound = 0.7 / std::sqrt(static_cast<double>(in));
    Eigen::MatrixXd w(out, in);
    for (int i = 0; i < out; ++i) {
      for (int j = 0; j < in; ++j) w(i, j) = rng.uniform(-bound, bound);
    }
    Eigen::VectorXd b(out);
    for (int i = 0; i < out; ++i) b(i) = rng.uniform(-bound, bound);
    m.weights.push_back(std::move(w));
    m.biases.push_back(std::move(b));
  }
  return m;
}

Eigen::VectorXd flatten_parameters(const MlpModel& m) {
  const Layout l = layout_of(m.layer_sizes);
  Eigen::VectorXd theta(l.total);
  for (std::size_t layer = 0; layer < m.weights.size(); ++layer) {
    const auto& w = m.weights[layer];
    int k = l.w_offset[layer];
    for (int i = 0; i < w.rows(); ++i) {
      for (int j = 0; j < w.cols(); ++j) theta(k++) = w(i, j);
    }
    theta.segment(l.b_offset[layer], m.biases[layer].size()) = m.biases[layer];
  }
  return theta;
}

void set_parameters(MlpModel& m, const Eigen::VectorXd& theta) {
  const Layout l = layout_of(m.layer_sizes);
  if (theta.size() != l.total) throw std::invalid_argument("parameter size mismatch");
  for (std::size_t layer = 0; layer < m.weights.size(); ++layer) {
    auto& w = m.weights[layer];
    int k = l.w_offset[layer];
    for (int i = 0; i < w.rows(); ++i) {
      for (int j = 0; j < w.cols(); ++j) w(i, j) = theta(k++);
    }
    m.biases[layer] = theta.segment(l.b_offset[layer], m.biases[layer].size());
  }
}

Eigen::VectorXd forward_batch(const MlpModel& m, const Eigen::MatrixXd& X) {
  check_model(m);
  if (X.rows() != m.layer_sizes.front())
    throw std::invalid_argument("input dimension mismatch");
  if (!X.allFinite()) throw std::invalid_argument("non-finite input");
  const std::size_t n = static_cast<std::size_t>(X.cols());
  Eigen::VectorXd y(n);
  std::vector<Eigen::MatrixXd> acts;
  for (std::size_t b = 0; b < n; b += kForwardBlock) {
    const std::size_t e = std::min(n, b + kForwardBlock);
    forward_layers(m, X.middleCols(static_cast<Eigen::Index>(b),
                                   static_cast<Eigen::Index>(e - b)),
                   acts);
    y.segment(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(e - b)) =
        acts.back().row(0).transpose();
  }
  return y;
}

double forward_one(const MlpModel& m, double x0, double x1) {
  Eigen::MatrixXd x(2, 1);
  x << x0, x1;
  return forward_batch(m, x)(0);
}

namespace {

// Per-sample deltas of the network output (not the loss): seed 1 at the
// output and propagate back through the tanh derivatives.
void backward_deltas(const MlpModel& m, const std::vector<Eigen::MatrixXd>& acts,
                     const Eigen::RowVectorXd& seed, std::vector<Eigen::MatrixXd>& deltas) {
  const std::size_t nl = m.weights.size();
  deltas.resize(nl);
  deltas[nl - 1] = seed;
  for (std::size_t l = nl - 1; l-- > 0;) {
    deltas[l].noalias() = m.weights[l + 1].transpose() * deltas[l + 1];
    if (!m.identity_hidden)
      deltas[l].array() *= 1.0 - acts[l + 1].array().square();
  }
}

struct GradPartial {
  Eigen::VectorXd g;
};

}  // namespace

Eigen::VectorXd gradient(const MlpModel& m, const Eigen::MatrixXd& X,
                         const Eigen::VectorXd& t, int workers) {
  check_model(m);
  if (X.cols() == 0) throw std::invalid_argument("empty batch");
  if (X.cols() != t.size()) throw std::invalid_argument("batch size mismatch");
  const Layout lay = layout_of(m.layer_sizes);
  Eigen::VectorXd g = Eigen::VectorXd::Zero(lay.total);

  chunked_reduce<GradPartial>(
      static_cast<std::size_t>(X.cols()), kJacobianChunk, workers,
      [&](std::size_t b, std::size_t e) {
        const auto cols = static_cast<Eigen::Index>(e - b);
        std::vector<Eigen::MatrixXd> acts, deltas;
        forward_layers(m, X.middleCols(static_cast<Eigen::Index>(b), cols), acts);
        const Eigen::RowVectorXd err =
            acts.back().row(0) -
            t.segment(static_cast<Eigen::Index>(b), cols).transpose();
        backward_deltas(m, acts, err, deltas);
        GradPartial p{Eigen::VectorXd(lay.total)};
        for (std::size_t l = 0; l < m.weights.size(); ++l) {
          Eigen::Map<Eigen::MatrixXd> gw(p.g.data() + lay.w_offset[l],
                                         m.weights[l].cols(), m.weights[l].rows());
          // row-major parameter order: store the transposed product
          gw.noalias() = acts[l] * deltas[l].transpose();
          p.g.segment(lay.b_offset[l], m.biases[l].size()) = deltas[l].rowwise().sum();
        }
        return p;
      },
      [&](GradPartial&& p) { g += p.g; });

  return g / static_cast<double>(X.cols());
}

NormalEquations jacobian_accumulate(const MlpModel& m, const Eigen::MatrixXd& X,
                                    const Eigen::VectorXd& t, int workers) {
  check_model(m);
  if (X.cols() == 0) throw std::invalid_argument("empty batch");
  if (X.cols() != t.size()) throw std::invalid_argument("batch size mismatch");
  const Layout lay = layout_of(m.layer_sizes);
  const int p = lay.total;

  NormalEquations ne;
  ne.jtj = Eigen::MatrixXd::Zero(p, p);
  ne.jte = Eigen::VectorXd::Zero(p);
  ne.sse = 0.0;

  chunked_reduce<NormalEquations>(
      static_cast<std::size_t>(X.cols()), kJacobianChunk, workers,
      [&](std::size_t b, std::size_t e) {
        const auto cols = static_cast<Eigen::Index>(e - b);
        std::vector<Eigen::MatrixXd> acts, deltas;
        forward_layers(m, X.middleCols(static_cast<Eigen::Index>(b), cols), acts);
        backward_deltas(m, acts, Eigen::RowVectorXd::Ones(cols), deltas);

        // Jacobian rows as columns: jt(:, c) = d y_c / d theta
        Eigen::MatrixXd jt(p, cols);
        for (Eigen::Index c = 0; c < cols; ++c) {
          double* col = jt.data() + static_cast<std::ptrdiff_t>(c) * p;
          for (std::size_t l = 0; l < m.weights.size(); ++l) {
            const auto& d = deltas[l];
            const auto& a = acts[l];
            const int out = static_cast<int>(d.rows());
            const int in = static_cast<int>(a.rows());
            double* w = col + lay.w_offset[l];
            for (int i = 0; i < out; ++i) {
              const double di = d(i, c);
              for (int j = 0; j < in; ++j) w[i * in + j] = di * a(j, c);
            }
            double* bias = col + lay.b_offset[l];
            for (int i = 0; i < out; ++i) bias[i] = d(i, c);
          }
        }

        NormalEquations part;
        part.jtj = Eigen::MatrixXd::Zero(p, p);
        part.jtj.selfadjointView<Eigen::Lower>().rankUpdate(jt);
        const Eigen::VectorXd err =
            acts.back().row(0).transpose() -
            t.segment(static_cast<Eigen::Index>(b), cols);
        part.jte.noalias() = jt * err;
        part.sse = err.squaredNorm();
        return part;
      },
      [&](NormalEquations&& part) {
        ne.jtj += part.jtj;
        ne.jte += part.jte;
        ne.sse += part.sse;
      });

  ne.jtj.triangularView<Eigen::StrictlyUpper>() =
      ne.jtj.transpose().triangularView<Eigen::StrictlyUpper>();
  return ne;
}

bool lm_epoch(MlpModel& m, const Eigen::MatrixXd& X, const Eigen::VectorXd& t,
              LmState& state, const LmConfig& cfg, int workers) {
  NormalEquations ne = jacobian_accumulate(m, X, t, workers);
  state.sse = ne.sse;
  state.primed = true;
  const Eigen::VectorXd theta = flatten_parameters(m);

  for (;;) {
    Eigen::MatrixXd damped = ne.jtj;
    damped.diagonal().array() += state.mu;
    Eigen::LDLT<Eigen::MatrixXd> solver(damped);
    bool accepted = false;
    if (solver.info() == Eigen::Success) {
      const Eigen::VectorXd delta = solver.solve(-ne.jte);
      if (delta.allFinite()) {
        MlpModel candidate = m;
        set_parameters(candidate, theta + delta);
        const double candidate_sse = sse_of(candidate, X, t);
        if (std::isfinite(candidate_sse) && candidate_sse < state.sse) {
          m = std::move(candidate);
          state.sse = candidate_sse;
          accepted = true;
        }
      }
    }
    if (accepted) {
      state.mu = std::max(state.mu * cfg.mu_decrease_fraction * cfg.mu_increase, 1e-300);
      return true;
    }
    state.mu *= cfg.mu_increase;
    if (state.mu > cfg.mu_max) {
      state.terminated = true;
      return false;
    }
  }
}

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::lm: return "lm";
    case Algorithm::gd: return "gd";
    case Algorithm::gdm: return "gdm";
    case Algorithm::rprop: return "rprop";
  }
  return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "lm") return Algorithm::lm;
  if (name == "gd") return Algorithm::gd;
  if (name == "gdm") return Algorithm::gdm;
  if (name == "rprop") return Algorithm::rprop;
  throw std::invalid_argument("unknown algorithm: " + name);
}

void first_order_epoch(MlpModel& m, const Eigen::MatrixXd& X,
                       const Eigen::VectorXd& t, Algorithm algo,
                       FirstOrderState& state, const FirstOrderConfig& cfg,
                       int workers) {
  const Eigen::VectorXd g = gradient(m, X, t, workers);
  Eigen::VectorXd theta = flatten_parameters(m);
  const int p = static_cast<int>(g.size());

  switch (algo) {
    case Algorithm::gd:
      theta -= cfg.learning_rate * g;
      break;
    case Algorithm::gdm:
      if (state.velocity.size() != p) state.velocity = Eigen::VectorXd::Zero(p);
      state.velocity = cfg.momentum * state.velocity - cfg.learning_rate * g;
      theta += state.velocity;
      break;
    case Algorithm::rprop: {
      if (state.step_size.size() != p) {
        state.step_size = Eigen::VectorXd::Constant(p, cfg.rprop_initial_step);
        state.prev_grad = Eigen::VectorXd::Zero(p);
      }
      for (int i = 0; i < p; ++i) {
        const double s = g(i) * state.prev_grad(i);
        if (s > 0) {
          state.step_size(i) = std::min(state.step_size(i) * cfg.rprop_inc, cfg.rprop_max_step);
        } else if (s < 0) {
          state.step_size(i) = std::max(state.step_size(i) * cfg.rprop_dec, cfg.rprop_min_step);
        }
        if (g(i) > 0) {
          theta(i) -= state.step_size(i);
        } else if (g(i) < 0) {
          theta(i) += state.step_size(i);
        }
        state.prev_grad(i) = g(i);
      }
      break;
    }
    case Algorithm::lm:
      throw std::invalid_argument("lm is not a first-order algorithm");
  }
  set_parameters(m, theta);
}

TrainResult train(const Eigen::MatrixXd& inputs, const Eigen::VectorXd& labels,
                  const std::string& target_metric, const TrainConfig& cfg) {
  const auto n = inputs.rows();
  if (inputs.cols() != 2) throw std::invalid_argument("expected two input features");
  if (labels.size() != n) throw std::invalid_argument("label count mismatch");
  if (n < 2) throw std::invalid_argument("empty split");

  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng shuffle_rng(cfg.shuffle_seed);
  shuffle_rng.shuffle(order);

  auto n_train = static_cast<Eigen::Index>(
      std::llround(cfg.train_split * static_cast<double>(n)));
  n_train = std::clamp<Eigen::Index>(n_train, 1, n - 1);
  const Eigen::Index n_val = n - n_train;

  Eigen::MatrixXd xtr(2, n_train), xval(2, n_val);
  Eigen::VectorXd ttr(n_train), tval(n_val);
  for (Eigen::Index i = 0; i < n_train; ++i) {
    const auto r = static_cast<Eigen::Index>(order[static_cast<std::size_t>(i)]);
    xtr(0, i) = inputs(r, 0);
    xtr(1, i) = inputs(r, 1);
    ttr(i) = labels(r);
  }
  for (Eigen::Index i = 0; i < n_val; ++i) {
    const auto r = static_cast<Eigen::Index>(order[static_cast<std::size_t>(n_train + i)]);
    xval(0, i) = inputs(r, 0);
    xval(1, i) = inputs(r, 1);
    tval(i) = labels(r);
  }

  // z-score stats from the training split only
  MlpModel model = make_mlp(cfg.layer_sizes, cfg.model_seed);
  model.target_metric = target_metric;
  std::vector<double> col(static_cast<std::size_t>(n_train));
  for (int f = 0; f < 2; ++f) {
    for (Eigen::Index i = 0; i < n_train; ++i) col[static_cast<std::size_t>(i)] = xtr(f, i);
    model.input_stats[static_cast<std::size_t>(f)] = compute_stats(col);
  }
  for (Eigen::Index i = 0; i < n_train; ++i) col[static_cast<std::size_t>(i)] = ttr(i);
  model.output_stats = compute_stats(col);

  for (int f = 0; f < 2; ++f) {
    const auto& s = model.input_stats[static_cast<std::size_t>(f)];
    xtr.row(f) = (xtr.row(f).array() - s.mean) / s.stddev;
    xval.row(f) = (xval.row(f).array() - s.mean) / s.stddev;
  }
  ttr = (ttr.array() - model.output_stats.mean) / model.output_stats.stddev;
  tval = (tval.array() - model.output_stats.mean) / model.output_stats.stddev;

  TrainResult result;
  EarlyStopper stopper(cfg.patience);
  MlpModel best = model;
  LmState lm_state;
  lm_state.mu = cfg.lm.mu0;
  FirstOrderState fo_state;

  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    double train_sse;
    if (cfg.algorithm == Algorithm::lm) {
      const bool updated = lm_epoch(model, xtr, ttr, lm_state, cfg.lm, cfg.workers);
      if (!updated) {
        result.lm_terminated = true;
        break;
      }
      train_sse = lm_state.sse;
    } else {
      first_order_epoch(model, xtr, ttr, cfg.algorithm, fo_state, cfg.first_order,
                        cfg.workers);
      train_sse = sse_of(model, xtr, ttr);
    }
    const double val_mse = sse_of(model, xval, tval) / static_cast<double>(n_val);
    result.history.push_back({epoch, train_sse / static_cast<double>(n_train), val_mse,
                              cfg.algorithm == Algorithm::lm ? lm_state.mu : 0.0});
    if (val_mse < stopper.best()) best = model;
    if (stopper.observe(epoch, val_mse)) break;
  }

  result.model = std::move(best);
  result.best_epoch = stopper.best_epoch();
  result.best_val_mse = stopper.best();
  return result;
}

std::string history_csv(const std::vector<EpochRecord>& history) {
  std::string out = "epoch,train_mse,val_mse,mu\n";
  for (const auto& r : history) {
    out += std::to_string(r.epoch);
    out += ',';
    out += format_double(r.train_mse);
    out += ',';
    out += format_double(r.val_mse);
    out += ',';
    out += format_double(r.mu);
    out += '\n';
  }
  return out;
}

void save_model(const MlpModel& m, const ModelProvenance& prov,
                const std::filesystem::path& path) {
  check_model(m);
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["target_metric"] = m.target_metric;
  j["layer_sizes"] = m.layer_sizes;
  j["hidden_activation"] = m.identity_hidden ? "identity" : "tanh";
  auto& weights = j["weights"] = nlohmann::ordered_json::array();
  for (const auto& w : m.weights) {
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(w.size()));
    for (int i = 0; i < w.rows(); ++i) {
      for (int jj = 0; jj < w.cols(); ++jj) flat.push_back(w(i, jj));
    }
    weights.push_back(flat);
  }
  auto& biases = j["biases"] = nlohmann::ordered_json::array();
  for (const auto& b : m.biases) {
    biases.push_back(std::vector<double>(b.data(), b.data() + b.size()));
  }
  j["input_stats"] = {
      {"mean", {m.input_stats[0].mean, m.input_stats[1].mean}},
      {"std", {m.input_stats[0].stddev, m.input_stats[1].stddev}},
  };
  j["output_stats"] = {{"mean", m.output_stats.mean}, {"std", m.output_stats.stddev}};
  j["training_provenance"] = {
      {"seeds",
       {{"model_seed", prov.model_seed},
        {"shuffle_seed", prov.shuffle_seed},
        {"master_seed", prov.master_seed}}},
      {"corpus_manifest_hash", prov.corpus_manifest_hash},
      {"algorithm", prov.algorithm},
      {"config",
       {{"max_epochs", prov.max_epochs},
        {"patience", prov.patience},
        {"train_split", prov.train_split}}},
      {"best_val_mse", prov.best_val_mse},
      {"best_epoch", prov.best_epoch},
      {"epochs_run", prov.epochs_run},
  };
  write_text_file(path, j.dump(2) + "\n");
}

MlpModel load_model(const std::filesystem::path& path, ModelProvenance* prov) {
  const auto j = nlohmann::json::parse(read_text_file(path));
  if (j.at("schema_version").get<int>() != 1)
    throw std::invalid_argument("unsupported model schema");
  MlpModel m;
  m.layer_sizes = j.at("layer_sizes").get<std::vector<int>>();
  m.target_metric = j.at("target_metric").get<std::string>();
  const auto activation = j.at("hidden_activation").get<std::string>();
  if (activation == "identity") {
    m.identity_hidden = true;
  } else if (activation != "tanh") {
    throw std::invalid_argument("unsupported hidden activation: " + activation);
  }
  const auto& weights = j.at("weights");
  const auto& biases = j.at("biases");
  if (weights.size() != m.layer_sizes.size() - 1 || biases.size() != weights.size())
    throw std::invalid_argument("model layer count mismatch");
  for (std::size_t l = 0; l + 1 < m.layer_sizes.size(); ++l) {
    const int out = m.layer_sizes[l + 1], in = m.layer_sizes[l];
    const auto wf = weights[l].get<std::vector<double>>();
    const auto bf = biases[l].get<std::vector<double>>();
    if (wf.size() != static_cast<std::size_t>(out) * static_cast<std::size_t>(in) ||
        bf.size() != static_cast<std::size_t>(out))
      throw std::invalid_argument("model shape mismatch");
    Eigen::MatrixXd w(out, in);
    for (int i = 0; i < out; ++i) {
      for (int jj = 0; jj < in; ++jj)
        w(i, jj) = wf[static_cast<std::size_t>(i) * in + jj];
    }
    m.weights.push_back(std::move(w));
    m.biases.push_back(Eigen::Map<const Eigen::VectorXd>(bf.data(), out));
  }
  const auto& istats = j.at("input_stats");
  m.input_stats[0] = {istats.at("mean")[0].get<double>(), istats.at("std")[0].get<double>()};
  m.input_stats[1] = {istats.at("mean")[1].get<double>(), istats.at("std")[1].get<double>()};
  m.output_stats = {j.at("output_stats").at("mean").get<double>(),
                    j.at("output_stats").at("std").get<double>()};
  if (prov && j.contains("training_provenance")) {
    const auto& tp = j.at("training_provenance");
    prov->model_seed = tp.at("seeds").at("model_seed").get<std::uint64_t>();
    prov->shuffle_seed = tp.at("seeds").at("shuffle_seed").get<std::uint64_t>();
    prov->master_seed = tp.at("seeds").at("master_seed").get<std::uint64_t>();
    prov->corpus_manifest_hash = tp.at("corpus_manifest_hash").get<std::string>();
    prov->algorithm = tp.at("algorithm").get<std::string>();
    prov->max_epochs = tp.at("config").at("max_epochs").get<int>();
    prov->patience = tp.at("config").at("patience").get<int>();
    prov->train_split = tp.at("config").at("train_split").get<double>();
    prov->best_val_mse = tp.at("best_val_mse").get<double>();
    prov->best_epoch = tp.at("best_epoch").get<int>();
    prov->epochs_run = tp.at("epochs_run").get<int>();
  }
  check_model(m);
  return m;
}

}  // namespace centrality
