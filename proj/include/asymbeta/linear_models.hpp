#pragma once

#include "asymbeta/learners.hpp"

namespace asymbeta {

// All three linear learners fit their objective on the mean-centered target
// and add the training mean back at predict time; the stored target mean is
// the only training statistic a linear model needs.

// Principal component regression: W holds the top-K right singular vectors
// of X (no re-centering; columns are standardized upstream), theta the
// least-squares coefficients of y on XW.
class PcrModel final : public Model {
 public:
  PcrModel(Eigen::MatrixXd W, Eigen::VectorXd theta, double y_mean);
  Eigen::VectorXd predict(const Eigen::MatrixXd& X) const override;
  const char* family() const override { return "pcr"; }
  int input_dim() const override { return static_cast<int>(W_.rows()); }
  void serialize(std::ostream& out) const override;

  const Eigen::MatrixXd& weights() const { return W_; }
  const Eigen::VectorXd& theta() const { return theta_; }

 private:
  Eigen::MatrixXd W_;
  Eigen::VectorXd theta_;
  double y_mean_;
};

// SIMPLS partial least squares for a univariate target: weight vectors
// maximize w'X'yy'Xw under unit norm with score-orthogonality deflation;
// theta regresses the target on the orthonormal scores.
class PlsModel final : public Model {
 public:
  PlsModel(Eigen::MatrixXd W, Eigen::VectorXd theta, double y_mean);
  Eigen::VectorXd predict(const Eigen::MatrixXd& X) const override;
  const char* family() const override { return "pls"; }
  int input_dim() const override { return static_cast<int>(W_.rows()); }
  void serialize(std::ostream& out) const override;

  const Eigen::MatrixXd& weights() const { return W_; }

 private:
  Eigen::MatrixXd W_;
  Eigen::VectorXd theta_;
  double y_mean_;
};

// Elastic net minimizing (1/n)||y - X theta||^2 + lambda sum_j
// [alpha |theta_j| + (1-alpha) theta_j^2] by cyclic coordinate descent.
// The ridge term carries no 1/2, so lambda is not interchangeable with
// glmnet-style parameterizations.
class ElasticNetModel final : public Model {
 public:
  ElasticNetModel(Eigen::VectorXd theta, double y_mean, double lambda,
                  double alpha);
  Eigen::VectorXd predict(const Eigen::MatrixXd& X) const override;
  const char* family() const override { return "elastic_net"; }
  int input_dim() const override { return static_cast<int>(theta_.size()); }
  void serialize(std::ostream& out) const override;

  const Eigen::VectorXd& theta() const { return theta_; }
  double lambda() const { return lambda_; }
  double alpha() const { return alpha_; }

 private:
  Eigen::VectorXd theta_;
  double y_mean_;
  double lambda_, alpha_;
};

ModelPtr fit_pcr(const TrainingSet& ts, int K);
ModelPtr fit_pls(const TrainingSet& ts, int K);
ModelPtr fit_elastic_net(const TrainingSet& ts, double lambda, double alpha,
                         double tol = 1e-7, int max_sweeps = 10000);

}  // namespace asymbeta
