#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "asymbeta/common.hpp"

namespace asymbeta {

struct RowKey {
  int asset = -1;
  MonthIndex month = 0;
};

// Stacked panel training data: no missing values, one target per row.
struct TrainingSet {
  Eigen::MatrixXd X;  // n x P
  Eigen::VectorXd y;  // n
  std::vector<RowKey> keys;

  int n() const { return static_cast<int>(X.rows()); }
  int p() const { return static_cast<int>(X.cols()); }
  void check_valid() const;  // finite, n >= 1, P >= 1, sizes agree
};

// Uniform fit/predict contract. Fitted models are immutable; predict is
// deterministic and never mutates the model.
class Model {
 public:
  virtual ~Model() = default;
  virtual Eigen::VectorXd predict(const Eigen::MatrixXd& X) const = 0;
  virtual const char* family() const = 0;
  virtual int input_dim() const = 0;
  virtual void serialize(std::ostream& out) const = 0;

 protected:
  void check_input(const Eigen::MatrixXd& X) const;
};

using ModelPtr = std::unique_ptr<Model>;

// Parses a blob produced by Model::serialize (format is versioned).
ModelPtr deserialize_model(std::istream& in);
void save_model(const Model& m, const std::string& path);
ModelPtr load_model(const std::string& path);

// Equal-weighted forecast combination with per-position availability:
// missing entries (NaN) are excluded position by position; a position with
// no available forecast stays missing.
std::vector<double> combine_forecasts(
    const std::vector<std::vector<double>>& forecasts);

}  // namespace asymbeta
