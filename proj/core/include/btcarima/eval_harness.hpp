#pragma once

#include "btcarima/arima.hpp"
#include "btcarima/model_grid.hpp"
#include "btcarima/windows.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace btcarima {

/// Backtest MSE per window location. day_index is the index of the predicted
/// day (0 = first day of the series).
struct LocationCurve {
  std::vector<std::size_t> day_index;
  std::vector<double> mse;
};

/// Slides a window of length w over every admissible start and averages
/// `reps` forecasts per location. Throws WindowTooShort if w < d + 1.
[[nodiscard]] LocationCurve mse_by_location(const ArimaModel& model, std::span<const double> prices,
                                            std::size_t w, int reps, std::uint64_t seed);

struct SweepRow {
  std::size_t w = 0;
  Region region = Region::full_span;
  bool ok = false;
  std::string error;  ///< why the row failed, empty when ok
  int rss_best_index = -1;
  ArimaOrder rss_best_order;
  int mse_best_index = -1;
  ArimaOrder mse_best_order;
  double avg_mse = 0.0;
  /// Per-window MSE of the MSE winner; avg_mse is their mean.
  std::vector<double> window_mse;
};

/// One row per window length using an already fitted grid. Rows that cannot
/// be evaluated (region too small, nothing ok) are returned with ok = false.
[[nodiscard]] std::vector<SweepRow> sweep_from_grid(const GridReport& fitted,
                                                    std::span<const double> prices,
                                                    std::span<const std::size_t> w_list,
                                                    const EvalConfig& eval_base,
                                                    unsigned threads = 0);

/// Fits the grid once on the full series, then sweeps the window lengths.
[[nodiscard]] std::vector<SweepRow> sweep_window_lengths(std::span<const double> prices,
                                                         std::span<const std::size_t> w_list,
                                                         const EvalConfig& eval_base,
                                                         const FitConfig& config,
                                                         const GridOptions& options = {});

} // namespace btcarima
