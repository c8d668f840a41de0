#pragma once

#include <Eigen/Dense>
#include <string>
#include <unordered_map>
#include <vector>

#include "asymbeta/common.hpp"

namespace asymbeta {

// Six predictor groups of the characteristic taxonomy.
enum class Group {
  Intangibles,
  Investment,
  Momentum,
  Profitability,
  TradingFrictions,
  ValueVsGrowth,
};
inline constexpr int kNumGroups = 6;

const char* to_string(Group g);
Group group_from_string(std::string_view s);  // throws on unknown label

// Daily excess returns for a cross-section of assets plus the market series,
// partitioned into contiguous calendar months. Immutable after loading;
// shared freely across threads.
struct ReturnPanel {
  std::vector<std::string> asset_ids;
  std::vector<DateKey> dates;           // strictly increasing
  std::vector<double> market;           // aligned to dates, never missing
  Eigen::MatrixXd returns;              // n_assets x n_dates, NaN = missing
  std::vector<MonthIndex> months;       // distinct months, ascending
  std::vector<int> month_begin;         // size months+1; dates of month i are
                                        // [month_begin[i], month_begin[i+1])

  int n_assets() const { return static_cast<int>(asset_ids.size()); }
  int n_dates() const { return static_cast<int>(dates.size()); }
  int n_months() const { return static_cast<int>(months.size()); }
  int month_pos(MonthIndex m) const;  // -1 if absent

  // builds months/month_begin from dates and checks every invariant
  void finalize();

  // number of non-missing daily returns for asset in month position mi
  int obs_in_month(int asset, int mi) const;
};

// Monthly (asset x predictor) characteristic values with missing mask.
struct CharacteristicPanel {
  std::vector<MonthIndex> months;  // ascending, contiguous not required
  std::vector<std::string> asset_ids;
  std::vector<std::string> predictor_names;
  std::vector<Group> predictor_groups;       // per predictor
  std::vector<Eigen::MatrixXd> values;       // per month: n_assets x P
  std::vector<std::vector<uint8_t>> missing; // per month: n_assets*P, row-major
  int lag_applied = 0;
  // month of origin of each stored month's values (== months[i] when raw);
  // kept so the look-ahead audit can verify origin + lag == report month
  std::vector<MonthIndex> origin_months;

  int n_assets() const { return static_cast<int>(asset_ids.size()); }
  int n_predictors() const { return static_cast<int>(predictor_names.size()); }
  int n_months() const { return static_cast<int>(months.size()); }
  int month_pos(MonthIndex m) const;
  bool is_missing(int mi, int asset, int pred) const {
    return missing[mi][static_cast<size_t>(asset) * n_predictors() + pred] != 0;
  }

  // columns per group, in predictor order
  std::vector<std::vector<int>> group_columns() const;
};

// Per-(asset, month) price / volume / market-cap metadata.
struct MonthlyMeta {
  std::vector<MonthIndex> months;
  std::vector<std::string> asset_ids;
  Eigen::MatrixXd price;   // months x assets, NaN missing
  Eigen::MatrixXd volume;
  Eigen::MatrixXd mktcap;

  int month_pos(MonthIndex m) const;
};

struct UniverseFilter {
  double min_price = 5.0;
  bool require_positive_volume = true;
  double market_cap_percentile = 0.2;  // in [0, 1]
  // reference universe for the percentile threshold; empty = all assets
  std::vector<std::string> percentile_reference;
};

std::unordered_map<std::string, int> index_ids(
    const std::vector<std::string>& ids);

}  // namespace asymbeta
