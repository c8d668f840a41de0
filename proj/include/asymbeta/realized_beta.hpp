#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asymbeta/panel.hpp"

namespace asymbeta {

// The seven realized measures. Discordant semibetas (SemiMNeg, SemiMPos) are
// stored negated so that all four semibetas are weakly positive.
enum class BetaKind : int {
  Capm = 0,
  Down,
  Up,
  SemiN,
  SemiP,
  SemiMNeg,
  SemiMPos,
};
inline constexpr int kNumBetaKinds = 7;
inline constexpr std::array<BetaKind, 7> kAllBetaKinds = {
    BetaKind::Capm,    BetaKind::Down,     BetaKind::Up,      BetaKind::SemiN,
    BetaKind::SemiP,   BetaKind::SemiMNeg, BetaKind::SemiMPos};

const char* to_string(BetaKind k);
BetaKind beta_kind_from_string(std::string_view s);

// Realized market beta: sum(r_i r_m) / sum(r_m^2). Throws when the market
// series has zero sum of squares.
double realized_capm(std::span<const double> r_i, std::span<const double> r_m);

// Downside/upside betas with a zero cutoff. A side whose market sum of
// squares vanishes is reported missing; the other side is still returned.
struct DownUp {
  std::optional<double> down;
  std::optional<double> up;
};
DownUp realized_down_up(std::span<const double> r_i, std::span<const double> r_m);

// The four realized semibetas under the stored-sign convention: concordant
// components as-is, discordant components negated (weakly positive).
struct Semibetas {
  double n = 0.0;      // both returns negative
  double p = 0.0;      // both returns positive
  double m_neg = 0.0;  // asset up, market down (negated)
  double m_pos = 0.0;  // asset down, market up (negated)
};
Semibetas realized_semibetas(std::span<const double> r_i,
                             std::span<const double> r_m);

// CAPM beta as the variance-weighted combination of downside and upside
// betas over the same window.
double reconstruct_from_down_up(double down, double up,
                                std::span<const double> r_m);

// CAPM beta from stored (negated-discordant) semibetas.
double reconstruct_from_semibetas(const Semibetas& s);
double reconstruct_from_semibetas(double n, double p, double m_neg, double m_pos);

// Minimum daily observation counts per horizon, h in {1,3,6,12}.
int min_obs_for_horizon(int h);

struct BetaCell {
  std::array<double, kNumBetaKinds> beta;  // NaN = missing
  int n_obs = 0;
  BetaCell() { beta.fill(kNaN); }
};

// Monthly realized betas over trailing h-month windows of daily returns.
struct RealizedBetaPanel {
  std::vector<std::string> asset_ids;
  std::vector<MonthIndex> months;
  std::vector<int> horizons;
  // cells[h_idx][month_pos * n_assets + asset]
  std::vector<std::vector<BetaCell>> cells;

  int n_assets() const { return static_cast<int>(asset_ids.size()); }
  int n_months() const { return static_cast<int>(months.size()); }
  int month_pos(MonthIndex m) const;
  int horizon_pos(int h) const;  // -1 if absent

  // NaN when the cell is absent/missing
  double get(int asset, MonthIndex month, BetaKind kind, int h) const;
  int obs(int asset, MonthIndex month, int h) const;  // 0 when absent
};

// Computes betas for every (asset, month, horizon) cell, skipping cells whose
// daily observation count falls below the horizon minimum. A window with zero
// market sum of squares yields a missing cell, not an error. `kinds` selects
// which measures are stored. The default entry point runs the OpenMP kernel;
// the serial variant is the reference implementation kept for testing.
RealizedBetaPanel compute_beta_panel(
    const ReturnPanel& rp, const std::vector<BetaKind>& kinds,
    const std::vector<int>& horizons);
RealizedBetaPanel compute_beta_panel_serial(
    const ReturnPanel& rp, const std::vector<BetaKind>& kinds,
    const std::vector<int>& horizons);

void write_beta_panel(const std::string& path, const RealizedBetaPanel& panel);
RealizedBetaPanel read_beta_panel(const std::string& path);

}  // namespace asymbeta
