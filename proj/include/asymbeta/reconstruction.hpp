#pragma once

#include <map>

#include "asymbeta/pipeline.hpp"

namespace asymbeta {

// CAPM beta triples rebuilt from one model's component forecasts.
struct CapmTriples {
  // (asset, target month) -> {forecast, realization, benchmark}
  std::map<std::pair<std::string, MonthIndex>, std::array<double, 3>> rows;
};

// source selects the reconstruction:
//   "capm"      - the direct capm rows
//   "semibetas" - sum of the four semibeta rows under the stored-sign
//                 convention (forecast, realization and benchmark alike)
//   "downup"    - variance-weighted down/up combination; the weights come
//                 from the market window ending at the feature month, the
//                 latest window observable when the forecast is formed
CapmTriples reconstruct_capm_triples(const ForecastPanel& fp,
                                     const std::string& model, int h,
                                     const std::string& source,
                                     const ReturnPanel* rp);

// distinct model ids present in a panel, sorted
std::vector<std::string> models_in_panel(const ForecastPanel& fp);

}  // namespace asymbeta
