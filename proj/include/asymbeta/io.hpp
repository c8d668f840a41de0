#pragma once

#include <optional>
#include <string>

#include "asymbeta/panel.hpp"

namespace asymbeta {

// Loads daily (date, asset_id, ret) rows plus a separate (date, ret) market
// file. Rows with unparseable dates are rejected (counted, warned about);
// duplicate (asset, date) pairs and a market series that misses a listed
// date are fatal. If rf_path is given, the risk-free rate is subtracted
// from asset and market returns before storage.
ReturnPanel load_daily_returns(const std::string& returns_path,
                               const std::string& market_path,
                               const std::optional<std::string>& rf_path = {},
                               char delim = ',');

// Loads monthly (month, asset_id, <P columns>) characteristics plus a
// (predictor, group) map. Blank cells become missing-mask entries. Every
// predictor column must have a group assignment.
CharacteristicPanel load_characteristics(const std::string& chars_path,
                                         const std::string& group_map_path,
                                         char delim = ',');

MonthlyMeta load_meta(const std::string& path, char delim = ',');

// (month, asset_id, dividend) -> months x assets matrix, NaN missing
struct DividendPanel {
  std::vector<MonthIndex> months;
  std::vector<std::string> asset_ids;
  Eigen::MatrixXd dividends;
};
DividendPanel load_dividends(const std::string& path, char delim = ',');

}  // namespace asymbeta
