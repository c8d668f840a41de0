#pragma once

#include "asymbeta/panel.hpp"

namespace asymbeta {

// Linear-interpolation (inclusive) empirical quantile of unsorted data,
// p in [0, 1]. Used for winsorization bounds and the market-cap threshold.
double quantile(std::vector<double> values, double p);

// Per month, in order: impute missing cells with the cross-sectional median,
// clamp to the month's [0.5%, 99.5%] cross-sectional percentiles, z-score
// with the population standard deviation. Constant columns become zeros; a
// predictor missing for every asset in a month becomes zeros.
CharacteristicPanel preprocess_characteristics(const CharacteristicPanel& cp);

// Shift values h months forward: the row reported at month t originates from
// month t-h; the first h months drop out.
CharacteristicPanel lag_predictors(const CharacteristicPanel& cp, int h);

// Per-month eligibility mask (months x assets). An asset is eligible iff
// price > min_price, volume > 0 (when required), and market cap >= the
// market_cap_percentile quantile of caps among the reference assets that
// month. An empty reference universe makes the threshold -inf with a warning.
std::vector<std::vector<uint8_t>> apply_universe_filters(
    const ReturnPanel& rp, const MonthlyMeta& meta, const UniverseFilter& f);

}  // namespace asymbeta
