#pragma once

#include <map>

#include "asymbeta/evaluation.hpp"
#include "asymbeta/panel.hpp"

namespace asymbeta {

// Single-factor covariance forecast: Sigma = market_var * beta beta' + diag(resid_var).
struct FactorCovariance {
  Eigen::VectorXd betas;
  double market_var = 0.0;
  Eigen::VectorXd resid_var;  // strictly positive (floored)

  Eigen::MatrixXd dense() const;  // materialized matrix, for tests/reports
  // quadratic form w' Sigma w without materializing Sigma
  double variance(const Eigen::VectorXd& w) const;
};

// Market variance from the trailing daily window plus per-asset residual
// variances of r_i - beta_i r_m. Assets with fewer than min_obs daily
// observations are excluded (their indices land in `excluded`).
FactorCovariance build_factor_cov(const Eigen::VectorXd& betas,
                                  std::span<const double> market_window,
                                  const Eigen::MatrixXd& asset_returns_window,
                                  int min_obs = 60,
                                  double resid_var_floor = 1e-8,
                                  std::vector<int>* excluded = nullptr);

struct QpSolution {
  Eigen::VectorXd weights;
  double objective = 0.0;
  std::vector<int> active_bounds;  // indices clamped at +/- bound
  double lambda_budget = 0.0;      // multiplier of sum w = 1
  double lambda_neutral = 0.0;     // multiplier of beta' w = 0
  int iterations = 0;
};

struct InfeasibleError : Error {
  explicit InfeasibleError(const std::string& msg) : Error(msg) {}
};

// Minimizes w' Sigma w subject to sum w = 1, beta' w = 0 and |w_i| <= bound.
// Primal active-set method; every linear solve collapses to a 2x2 system
// because Sigma is diagonal plus rank one. Infeasibility is certified by an
// exact phase-1 (parametric continuous knapsack over the box slice).
QpSolution solve_min_variance_neutral(const FactorCovariance& cov,
                                      const Eigen::VectorXd& betas,
                                      double bound = 0.3);

// Budget-constrained variant without the neutrality row (relaxation checks).
QpSolution solve_min_variance_budget_only(const FactorCovariance& cov,
                                          double bound = 0.3);

struct PortfolioOptions {
  int universe_size = 500;
  double weight_bound = 0.3;
  int cov_window_days = 504;  // two years of daily data
  int min_obs = 60;
  double resid_var_floor = 1e-8;
};

struct FormationResult {
  MonthIndex formation_month = 0;
  MonthIndex target_month = 0;
  std::vector<int> assets;  // indices into the return panel
  Eigen::VectorXd weights;
  double expost_beta = kNaN;
  bool infeasible = false;
  std::string note;
};

struct TrackRecord {
  std::vector<FormationResult> months;
  std::vector<double> expost_betas;  // feasible months only
};

// Monthly rebalanced market-neutral minimum-variance portfolios from one
// model's CAPM beta forecasts. Formation at month u - h uses the forecast of
// the h-month realized beta ending at u; the ex-post portfolio beta is the
// weighted realized beta over that window.
TrackRecord form_and_track(
    const ReturnPanel& rp, const MonthlyMeta& meta,
    const std::map<std::pair<std::string, MonthIndex>, std::pair<double, double>>&
        forecast_and_realized,  // (asset, target month) -> (forecast, realized)
    int h, const PortfolioOptions& opt);

}  // namespace asymbeta
