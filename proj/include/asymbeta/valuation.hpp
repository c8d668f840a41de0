#pragma once

#include <array>
#include <optional>
#include <span>

#include "asymbeta/common.hpp"

namespace asymbeta {

// Annual CAPM cost of equity and its per-period (monthly) counterpart.
struct CostOfEquity {
  double annual = 0.0;
  double monthly = 0.0;
};
CostOfEquity cost_of_equity(double beta, double premium_annual,
                            double riskfree_annual = 0.0);

// Twelve flat monthly cash flows plus a terminal perpetuity discounted at a
// single monthly rate. Throws when the terminal value is non-finite
// (r <= g) or the cash flow is not positive.
double dcf_single(double cf1, double r_monthly, double g_monthly);

// Term-structure variant: bucketed cash flows (1, 2, 3, 6) x cf1 discounted
// at horizon-specific monthly rates with exponents 1..4, plus the terminal
// perpetuity at the 12-month rate.
double dcf_term_structure(double cf1, const std::array<double, 4>& r_monthly,
                          double g_monthly);

// Panel out-of-sample R^2 of model-implied prices against benchmark-implied
// prices, scored on realized prices. Empty when the benchmark error is zero.
std::optional<double> valuation_r2(std::span<const double> predicted,
                                   std::span<const double> realized,
                                   std::span<const double> benchmark);

}  // namespace asymbeta
