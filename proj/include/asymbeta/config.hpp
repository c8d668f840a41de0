#pragma once

#include <optional>
#include <string>

#include "asymbeta/pipeline.hpp"
#include "asymbeta/portfolio.hpp"
#include "asymbeta/synth.hpp"

namespace asymbeta {

struct DataPaths {
  std::string returns_path;
  std::string market_path;
  std::optional<std::string> riskfree_path;
  std::string chars_path;
  std::string groups_path;
  std::string meta_path;
  std::string dividends_path;
};

struct ValuationConfig {
  std::vector<double> growth_annual = {0.0, 0.01, 0.02};
  std::vector<double> premium_annual = {0.08, 0.10, 0.12};
  std::string beta_source = "semibetas";  // semibetas | downup | capm
  std::vector<std::string> models;        // default: every model in the panel
};

struct PortfolioConfig {
  PortfolioOptions options;
  std::string beta_source = "semibetas";
  std::vector<std::string> models;
  std::vector<int> horizons;  // default: experiment horizons
};

struct EvaluationConfig {
  int cw_lags = 4;
  std::optional<std::string> recessions_path;  // month list echoed to plots
  bool importance = true;
};

// One config file per run; commands only pick the verb. Every knob that
// affects outputs lives here so a (config, seed) pair pins the run.
struct RunConfig {
  uint64_t seed = 1;
  std::string output_dir;
  std::optional<DgpConfig> synth;
  DataPaths data;  // defaults to <output_dir>/data/<file> when unset
  std::vector<Family> models;
  std::vector<BetaKind> kinds;
  std::vector<int> horizons;
  std::map<Family, HyperGrid> grid_overrides;
  EvaluationConfig evaluation;
  ValuationConfig valuation;
  PortfolioConfig portfolio;
  bool fail_fast = false;
  int threads = 0;  // 0 = library default

  std::string data_dir() const { return output_dir + "/data"; }
  std::string betas_path() const { return output_dir + "/betas.csv"; }
  std::string forecasts_path() const { return output_dir + "/forecasts.csv"; }
  std::string models_dir() const { return output_dir + "/models"; }
  std::string eval_dir() const { return output_dir + "/eval"; }
  std::string portfolio_dir() const { return output_dir + "/portfolio"; }
};

RunConfig load_config(const std::string& path);

}  // namespace asymbeta
