#pragma once

#include <optional>
#include <span>

#include "asymbeta/learners.hpp"

namespace asymbeta {

enum class EvalWeighting { Panel, TimeSeries, CrossSection };
const char* to_string(EvalWeighting w);

// One evaluated forecast observation; realization and benchmark always set.
struct EvalRow {
  int asset = 0;
  MonthIndex month = 0;
  double forecast = 0.0;
  double realization = 0.0;
  double benchmark = 0.0;
};

// Equal-weighted MSE of the model (use_benchmark = false) or the benchmark
// under the pooled / per-asset-averaged / per-month-averaged weighting.
double mse(std::span<const EvalRow> rows, bool use_benchmark, EvalWeighting w);

// 1 - MSE_model / MSE_benchmark; empty when the benchmark MSE is zero.
std::optional<double> oos_r2(std::span<const EvalRow> rows, EvalWeighting w);

// Bartlett-kernel long-run variance of the mean of d with L lags
// (truncated to len-1); plain variance at L = 0.
double hac_variance_of_mean(const std::vector<double>& d, int lags);

struct CWResult {
  double dbar = 0.0;
  double hac_se = 0.0;
  double statistic = 0.0;
  int lags = 4;
  bool degenerate = false;  // constant differential series
};

// Clark-West adjusted-MSPE test: d = e_bench^2 - e_model^2 + (f_b - f_m)^2,
// aggregated per weighting, with Newey-West HAC standard errors. Positive
// statistics favor the conditional model; compare against one-sided normal
// critical values (1.282 / 1.645 / 2.326). The TimeSeries aggregation is
// indexed by asset, where serial correlation has no meaning, so its variance
// uses lag 0.
CWResult clark_west(std::span<const EvalRow> rows, EvalWeighting w,
                    int lags = 4);

// one-sided significance stars at 10/5/1%
std::string cw_stars(double statistic);

// Cumulative difference of monthly portfolio forecast errors: each month the
// equal-weighted portfolio of forecasts is scored against the equal-weighted
// realization, and benchmark-minus-model squared errors accumulate through
// time.
std::vector<std::pair<MonthIndex, double>> cdfe(std::span<const EvalRow> rows);

struct QuintileRow {
  double mse_benchmark = 0.0;
  double mse_model = 0.0;
  double frac_positive_benchmark = 0.0;
  double frac_positive_model = 0.0;
};
struct QuintileReport {
  std::array<QuintileRow, 5> quintiles;  // 1 = low realized beta, 5 = high
  int months_used = 0;
  int months_skipped = 0;  // fewer than five assets
};

// Sorts each month's cross-section into realized-beta quintiles and reports
// time-averaged portfolio-level errors and the fraction of stocks whose
// realization exceeds the forecast (strictly).
QuintileReport quintile_report(std::span<const EvalRow> rows);

// Permutation group importance: per period, each group's columns are
// shuffled cross-sectionally with a single permutation and the equal-weighted
// panel MSE increase is recorded; period averages are normalized to sum 100.
std::vector<double> permutation_group_importance(
    const Model& model, const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
    const std::vector<int>& period_of_row,
    const std::vector<std::vector<int>>& group_columns, uint64_t seed);

// Raw per-group period-averaged MSE increases (no normalization), for
// callers that pool several fitted models before normalizing.
std::vector<double> permutation_group_mse_increase(
    const Model& model, const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
    const std::vector<int>& period_of_row,
    const std::vector<std::vector<int>>& group_columns, uint64_t seed);

// scales nonnegative-sum increases to sum to 100
std::vector<double> normalize_importance(std::vector<double> increases);

struct DensitySummary {
  std::vector<double> grid;
  std::vector<double> density;
  double mode = 0.0;
  double bandwidth = 0.0;
  bool degenerate = false;  // constant sample
};

// Gaussian KDE with the Silverman bandwidth 0.9 min(sd, IQR/1.34) n^{-1/5}
// on a uniform grid spanning [min - 3bw, max + 3bw]; mode ties resolve to
// the lowest grid value.
DensitySummary density_summary(const std::vector<double>& values,
                               int grid_size = 512);

}  // namespace asymbeta
