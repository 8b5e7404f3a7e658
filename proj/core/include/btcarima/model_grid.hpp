#pragma once

#include "btcarima/arima.hpp"
#include "btcarima/windows.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace btcarima {

/// Orders p in 0..9, q in 0..9, d in 0..2 linearised as 30p + 3q + d.
inline constexpr int kGridSize = 300;

enum class EntryStatus { ok, excluded_by_pq_rule, fit_failed };
enum class Strategy { rss, mse };

[[nodiscard]] std::string_view status_name(EntryStatus status) noexcept;
[[nodiscard]] std::string_view strategy_name(Strategy strategy) noexcept;

struct GridEntry {
  int index = 0;
  ArimaOrder order;
  std::optional<double> metric;  ///< present iff status == ok
  EntryStatus status = EntryStatus::ok;
  std::string detail;            ///< failure reason, empty otherwise
};

struct GridReport {
  Strategy strategy = Strategy::rss;
  std::vector<GridEntry> entries;                ///< all 300, index order
  std::vector<std::optional<ArimaModel>> models; ///< parallel to entries
  std::optional<GridEntry> best;                 ///< absent when no entry is ok
  std::optional<EvalConfig> eval_config;
};

struct GridOptions {
  /// Exclude orders with p < q.
  bool pq_rule = true;
  /// Worker threads; 0 uses the hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
};

/// Throws OutOfGrid for orders outside the grid bounds.
[[nodiscard]] int model_index(const ArimaOrder& order);
/// Exact inverse of model_index over 0..299; throws OutOfGrid otherwise.
[[nodiscard]] ArimaOrder index_to_order(int index);

/// All 300 entries in index order with no metric. Under the pq rule, entries
/// with p < q are marked excluded_by_pq_rule; the rest start as ok.
[[nodiscard]] std::vector<GridEntry> enumerate_grid(bool pq_rule);

/// Fits every non-excluded order to log(prices). Per-entry failures are
/// recorded as fit_failed; the metric of ok entries is fit_rss. Strategy is
/// rss and `best` is the minimum-RSS entry.
[[nodiscard]] GridReport rss_grid_search(std::span<const double> prices, const FitConfig& config,
                                         const GridOptions& options = {});

/// Scores the models of an RSS grid by backtest MSE over windows sampled per
/// `eval`. Entry i uses seed derive_seed(eval.master_seed, i). Entries whose
/// backtest fails or is non-finite become fit_failed.
[[nodiscard]] GridReport score_by_mse(const GridReport& fitted, std::span<const double> prices,
                                      const EvalConfig& eval, unsigned threads = 0);

/// rss_grid_search followed by score_by_mse.
[[nodiscard]] GridReport mse_grid_search(std::span<const double> prices, const EvalConfig& eval,
                                         const FitConfig& config, const GridOptions& options = {});

/// Lowest-metric ok entry, ties to the smaller index.
[[nodiscard]] std::optional<GridEntry> select_best(std::span<const GridEntry> entries);

} // namespace btcarima
