#pragma once

#include "asymbeta/learners.hpp"
#include "asymbeta/rng.hpp"

namespace asymbeta {

// Flat regression tree. Leaves carry the mean target of their region;
// internal nodes route on feature < threshold.
struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1, right = -1;
  double value = 0.0;
};

class TreeModel final : public Model {
 public:
  TreeModel() : nodes_{TreeNode{}}, input_dim_(0) {}  // single-leaf zero tree
  TreeModel(std::vector<TreeNode> nodes, int input_dim);
  Eigen::VectorXd predict(const Eigen::MatrixXd& X) const override;
  double predict_row(const Eigen::Ref<const Eigen::RowVectorXd>& x) const;
  const char* family() const override { return "tree"; }
  int input_dim() const override { return input_dim_; }
  void serialize(std::ostream& out) const override;

  int n_nodes() const { return static_cast<int>(nodes_.size()); }
  const std::vector<TreeNode>& nodes() const { return nodes_; }

 private:
  std::vector<TreeNode> nodes_;
  int input_dim_;
};

// Recursive binary splits minimizing within-leaf squared loss. Split
// candidates are midpoints between consecutive distinct sorted values; loss
// ties break toward the lowest feature index, then the lowest threshold.
// When mtry < P each split considers an mtry-subset drawn from rng.
TreeModel fit_tree_impl(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                        std::vector<int> rows, int max_depth, int min_leaf,
                        int mtry, Rng* rng);

ModelPtr fit_tree(const TrainingSet& ts, int max_depth, int min_leaf = 5);

struct GBoostOptions {
  int max_trees = 500;
  int depth = 1;
  double learning_rate = 0.1;
  int patience = 50;  // early-stop window on validation MSE
  int min_leaf = 1;
};

// Stagewise residual boosting with shallow trees; keeps the iteration with
// the best validation MSE.
class GBoostModel final : public Model {
 public:
  GBoostModel(double init, double learning_rate, std::vector<TreeModel> trees,
              int input_dim);
  Eigen::VectorXd predict(const Eigen::MatrixXd& X) const override;
  const char* family() const override { return "gboost"; }
  int input_dim() const override { return input_dim_; }
  void serialize(std::ostream& out) const override;

  int n_trees() const { return static_cast<int>(trees_.size()); }

 private:
  double init_;
  double learning_rate_;
  std::vector<TreeModel> trees_;
  int input_dim_;
};

ModelPtr fit_gboost(const TrainingSet& ts, const GBoostOptions& opt,
                    const TrainingSet& validation);

struct ForestOptions {
  int n_trees = 200;
  int depth = 10;
  int mtry = 0;  // 0 = ceil(sqrt(P))
  int min_leaf = 5;
  bool bootstrap = true;  // test hook: disabled runs each tree on all rows
  uint64_t seed = 0;
};

class ForestModel final : public Model {
 public:
  ForestModel(std::vector<TreeModel> trees, int input_dim, uint64_t seed = 0);
  Eigen::VectorXd predict(const Eigen::MatrixXd& X) const override;
  const char* family() const override { return "rforest"; }
  int input_dim() const override { return input_dim_; }
  void serialize(std::ostream& out) const override;

  int n_trees() const { return static_cast<int>(trees_.size()); }
  uint64_t training_seed() const { return seed_; }

 private:
  std::vector<TreeModel> trees_;
  int input_dim_;
  uint64_t seed_;
};

// Bootstrap-aggregated trees with per-split feature subsampling. Per-tree
// seeds derive from (seed, tree index), so the parallel and serial builds
// produce identical forests; the serial variant is the test reference.
ModelPtr fit_rforest(const TrainingSet& ts, const ForestOptions& opt);
ModelPtr fit_rforest_serial(const TrainingSet& ts, const ForestOptions& opt);

}  // namespace asymbeta
