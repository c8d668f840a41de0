#pragma once

#include "asymbeta/learners.hpp"
#include "asymbeta/rng.hpp"

namespace asymbeta {

struct FfnnOptions {
  double learning_rate = 0.001;
  double dropout = 0.1;
  int depth = 1;  // 1..3 hidden layers, widths 32/16/8 truncated to depth
  int max_epochs = 100;
  int patience = 5;
  int batch_size = 256;
  int seed_count = 10;
  uint64_t seed = 0;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  double bn_momentum = 0.9;  // running-statistic decay
};

// One ReLU network: hidden layers are Linear -> BatchNorm -> ReLU -> Dropout
// (dropout during training only), output is a linear unit. Exposed so the
// gradient checks can probe a single net directly.
class FfnnNetwork {
 public:
  FfnnNetwork(int input_dim, int depth, Rng& init_rng);

  int input_dim() const { return input_dim_; }
  int n_layers() const { return static_cast<int>(layers_.size()); }

  // Forward pass with running-statistic batch norm and no dropout.
  Eigen::VectorXd predict(const Eigen::MatrixXd& X) const;

  // MSE loss and its gradient w.r.t. every parameter, with batch norm frozen
  // at the running statistics (evaluation-mode path). Pass grad = nullptr to
  // get the loss alone.
  double frozen_loss(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                     std::vector<Eigen::MatrixXd>* grad) const;

  // One training-mode forward/backward: batch statistics, dropout masks from
  // rng, running statistics updated in place. Returns batch MSE.
  double train_batch_gradient(const Eigen::MatrixXd& X,
                              const Eigen::VectorXd& y, double dropout,
                              Rng& rng, std::vector<Eigen::MatrixXd>* grad);

  // Flattened parameter access (per-parameter-block matrices, used by Adam
  // and the finite-difference probes).
  std::vector<Eigen::MatrixXd*> parameter_blocks();
  std::vector<const Eigen::MatrixXd*> parameter_blocks() const;
  int n_parameters() const;
  double get_parameter(int flat_index) const;
  void add_to_parameter(int flat_index, double delta);

  void serialize(std::ostream& out) const;
  static FfnnNetwork deserialize(std::istream& in);

 private:
  struct Layer {
    Eigen::MatrixXd W;       // out x in
    Eigen::MatrixXd b;       // out x 1
    Eigen::MatrixXd gamma;   // out x 1
    Eigen::MatrixXd beta;    // out x 1
    Eigen::VectorXd run_mean, run_var;  // running BN statistics
  };
  FfnnNetwork() = default;

  int input_dim_ = 0;
  std::vector<Layer> layers_;
  Eigen::MatrixXd w_out_;  // 1 x last_width
  Eigen::MatrixXd b_out_;  // 1 x 1

  friend class FfnnModel;
};

// Seed ensemble: the prediction is the arithmetic mean over independently
// initialized and trained networks, plus the training target mean.
class FfnnModel final : public Model {
 public:
  FfnnModel(std::vector<FfnnNetwork> nets, double y_mean, FfnnOptions opt);
  Eigen::VectorXd predict(const Eigen::MatrixXd& X) const override;
  Eigen::VectorXd predict_single(int net, const Eigen::MatrixXd& X) const;
  int n_nets() const { return static_cast<int>(nets_.size()); }
  uint64_t training_seed() const { return opt_.seed; }
  const char* family() const override { return "ffnn"; }
  int input_dim() const override;
  void serialize(std::ostream& out) const override;

 private:
  std::vector<FfnnNetwork> nets_;
  double y_mean_;
  FfnnOptions opt_;
};

// Trains the seed ensemble with Adam, early stopping on validation MSE, and
// the divergence policy: a seed whose loss turns non-finite is retried once
// at half the learning rate, then dropped with a warning.
ModelPtr fit_ffnn(const TrainingSet& ts, const TrainingSet& validation,
                  const FfnnOptions& opt);

std::vector<int> ffnn_layer_widths(int depth);  // {32,16,8} truncated

}  // namespace asymbeta
