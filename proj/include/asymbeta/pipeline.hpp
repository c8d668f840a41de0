#pragma once

#include <map>

#include "asymbeta/hypergrid.hpp"
#include "asymbeta/preprocess.hpp"
#include "asymbeta/realized_beta.hpp"

namespace asymbeta {

inline constexpr int kTrainMonths = 108;
inline constexpr int kValidationMonths = 12;
inline constexpr int kInsampleMonths = 120;
inline constexpr int kOosMonths = 12;
inline constexpr int kScheduleStep = 12;
inline constexpr int kAvailabilityMonths = 36;

// One rolling-window iteration. The in-sample block is train + validation;
// out-of-sample target months start h+1 calendar months after the in-sample
// end, leaving a gap of exactly h months whose information the forecast may
// not touch.
struct WindowIteration {
  MonthIndex train_begin, train_end;  // 108 months
  MonthIndex val_begin, val_end;      // 12 months
  MonthIndex oos_begin, oos_end;      // 12 target months

  MonthIndex insample_begin() const { return train_begin; }
  MonthIndex insample_end() const { return val_end; }
};

struct WindowSchedule {
  int h = 1;
  std::vector<WindowIteration> iterations;
};

WindowSchedule build_schedule(MonthIndex first, MonthIndex last, int h);

struct ForecastRow {
  std::string asset;
  MonthIndex target_month = 0;
  std::string model;  // family name, or "clin"/"cnl" combinations
  BetaKind kind = BetaKind::Capm;
  int h = 1;
  double forecast = 0.0;
  double realization = 0.0;
  double benchmark = 0.0;
};

struct ForecastPanel {
  std::vector<ForecastRow> rows;
};

void write_forecast_panel(const std::string& path, const ForecastPanel& fp);
ForecastPanel read_forecast_panel(const std::string& path);

// Rows extracted for one iteration of one (kind, horizon) cell. Feature
// origin months are tracked so the no-look-ahead audit can verify
// origin + h == target for every row.
struct IterationData {
  TrainingSet train;       // targets inside the 108 training months
  TrainingSet validation;  // targets inside the 12 validation months
  TrainingSet insample;    // both, for the refit
  Eigen::MatrixXd oos_X;
  std::vector<RowKey> oos_keys;
  std::vector<int> eligible_assets;
};

// Per-month return availability (>= 1 daily observation), months x assets.
std::vector<uint8_t> monthly_availability(const ReturnPanel& rp);

// Assets eligible for an iteration: a full run of available months over the
// final 36 in-sample months.
std::vector<int> eligible_assets_for_iteration(
    const ReturnPanel& rp, const std::vector<uint8_t>& availability,
    const WindowIteration& it);

struct LookaheadAudit {
  long long rows_checked = 0;
  long long violations = 0;
};

IterationData select_training_rows(const WindowIteration& it,
                                   const RealizedBetaPanel& betas,
                                   const CharacteristicPanel& lagged_chars,
                                   const ReturnPanel& rp,
                                   const std::vector<uint8_t>& availability,
                                   BetaKind kind, int h, LookaheadAudit* audit);

struct TuneResult {
  HyperCandidate chosen;
  double validation_mse = 0.0;
  std::vector<double> oos_forecasts;  // aligned with IterationData::oos_keys
  ModelPtr refit_model;
};

// Validation-sample tuning: fit every grid candidate on the training months,
// score pooled MSE on the validation months, pick the minimizer (first in
// enumeration order on ties), refit on all 120 in-sample months, and predict
// the out-of-sample feature rows.
TuneResult tune_fit_forecast(const IterationData& data, const HyperGrid& grid,
                             uint64_t seed);

// h-lagged realized beta of the same kind, the naive benchmark.
double benchmark_forecast(const RealizedBetaPanel& betas, int asset,
                          MonthIndex target_month, BetaKind kind, int h);

struct ExperimentConfig {
  std::vector<Family> models;
  std::vector<BetaKind> kinds;
  std::vector<int> horizons;
  std::map<Family, HyperGrid> grid_overrides;
  uint64_t seed = 1;
  bool fail_fast = false;
  std::string model_dir;  // refit models are saved here when non-empty
};

struct CellRecord {
  Family family;
  BetaKind kind;
  int h = 1;
  int iteration = 0;
  std::string chosen_hyperparameters;
  double validation_mse = 0.0;
  bool ok = false;
  std::string error;
};

struct ExperimentResult {
  ForecastPanel panel;
  std::vector<CellRecord> cells;
  LookaheadAudit audit;
};

// Full cross-product of (model, kind, horizon, iteration) cells, executed in
// parallel against immutable inputs. Combination rows clin (pcr, pls,
// elastic net) and cnl (gboost, rforest, ffnn) are appended when all three
// constituents ran. Identical config and seed reproduce the panel
// bit-identically.
ExperimentResult run_experiment(const ReturnPanel& rp,
                                const RealizedBetaPanel& betas,
                                const CharacteristicPanel& preprocessed_chars,
                                const ExperimentConfig& cfg);

}  // namespace asymbeta
