#pragma once

#include "asymbeta/io.hpp"
#include "asymbeta/panel.hpp"

namespace asymbeta {

// Characteristic-driven beta process with known ground truth. Signal
// characteristics follow per-asset AR(1) processes re-standardized
// cross-sectionally every month; the true beta of month t is a clipped
// linear function of the signals at month t - link_lag; daily returns are
// beta times the market plus idiosyncratic noise.
struct DgpConfig {
  int n_assets = 50;
  int n_months = 134;
  int days_per_month = 21;
  double market_mean = 0.0004;   // daily
  double market_vol = 0.01;      // daily
  double beta_base = 1.0;        // b0
  std::vector<double> beta_link = {0.5, -0.3, 0.25, 0.2};  // signal loadings
  double char_persistence = 0.3;  // AR(1) coefficient of characteristics
  int link_lag = 1;
  double idio_vol = 0.01;        // daily idiosyncratic vol
  int noise_chars = 4;           // irrelevant predictors
  double beta_clip_lo = -1.0;
  double beta_clip_hi = 4.0;
  uint64_t seed = 1;  // mandatory

  int n_signals() const { return static_cast<int>(beta_link.size()); }
};

struct SynthData {
  ReturnPanel returns;
  CharacteristicPanel characteristics;  // raw (unpreprocessed, unlagged)
  Eigen::MatrixXd true_beta;            // n_months x n_assets
  MonthlyMeta meta;
  Eigen::MatrixXd dividends;            // n_months x n_assets, positive
};

SynthData generate(const DgpConfig& cfg);

// Writes the same delimited formats panel_store reads:
// returns.csv, market.csv, chars.csv, groups.csv, meta.csv, dividends.csv,
// true_betas.csv.
void write_synth_files(const SynthData& data, const std::string& dir);

}  // namespace asymbeta
