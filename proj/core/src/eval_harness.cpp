#include "btcarima/eval_harness.hpp"

#include "btcarima/errors.hpp"
#include "btcarima/seeding.hpp"

#include <numeric>

namespace btcarima {

LocationCurve mse_by_location(const ArimaModel& model, std::span<const double> prices,
                              std::size_t w, int reps, std::uint64_t seed) {
  if (w < static_cast<std::size_t>(model.order.d) + 1) {
    throw WindowTooShort("window length " + std::to_string(w) + " is too short for d = " +
                         std::to_string(model.order.d));
  }
  if (prices.size() < w + 1) {
    throw SeriesTooShort("series too short for a single window of length " + std::to_string(w));
  }
  std::vector<std::size_t> starts(prices.size() - w);
  std::iota(starts.begin(), starts.end(), std::size_t{0});
  auto result = backtest(model, prices, starts, w, reps, seed);
  LocationCurve curve;
  curve.day_index.reserve(starts.size());
  for (const auto s : starts) {
    curve.day_index.push_back(s + w);
  }
  curve.mse = std::move(result.window_mse);
  return curve;
}

std::vector<SweepRow> sweep_from_grid(const GridReport& fitted, std::span<const double> prices,
                                      std::span<const std::size_t> w_list,
                                      const EvalConfig& eval_base, unsigned threads) {
  std::vector<SweepRow> rows;
  rows.reserve(w_list.size());
  for (const auto w : w_list) {
    SweepRow row;
    row.w = w;
    row.region = eval_base.region;
    try {
      EvalConfig eval = eval_base;
      eval.window_len = w;
      if (!fitted.best) {
        throw OptimizerFailure("no grid entry could be fitted");
      }
      const auto scored = score_by_mse(fitted, prices, eval, threads);
      if (!scored.best) {
        throw OptimizerFailure("no grid entry produced a finite backtest MSE");
      }
      row.rss_best_index = fitted.best->index;
      row.rss_best_order = fitted.best->order;
      row.mse_best_index = scored.best->index;
      row.mse_best_order = scored.best->order;
      const auto& winner = *scored.models[static_cast<std::size_t>(scored.best->index)];
      const auto starts = sample_windows(prices.size(), eval);
      auto detail = backtest(winner, prices, starts, w, eval.reps,
                             derive_seed(eval.master_seed,
                                         static_cast<std::uint64_t>(scored.best->index)));
      row.avg_mse = detail.mse;
      row.window_mse = std::move(detail.window_mse);
      row.ok = true;
    } catch (const Error& e) {
      row.ok = false;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> sweep_window_lengths(std::span<const double> prices,
                                           std::span<const std::size_t> w_list,
                                           const EvalConfig& eval_base, const FitConfig& config,
                                           const GridOptions& options) {
  const auto fitted = rss_grid_search(prices, config, options);
  return sweep_from_grid(fitted, prices, w_list, eval_base, options.threads);
}

} // namespace btcarima
