#include "btcarima/model_grid.hpp"

#include "btcarima/errors.hpp"
#include "btcarima/parallel.hpp"
#include "btcarima/seeding.hpp"
#include "btcarima/transforms.hpp"

#include <cmath>
#include <string>

namespace btcarima {

std::string_view status_name(EntryStatus status) noexcept {
  switch (status) {
  case EntryStatus::ok:
    return "ok";
  case EntryStatus::excluded_by_pq_rule:
    return "excluded_by_pq_rule";
  case EntryStatus::fit_failed:
    return "fit_failed";
  }
  return "unknown";
}

std::string_view strategy_name(Strategy strategy) noexcept {
  return strategy == Strategy::rss ? "rss" : "mse";
}

int model_index(const ArimaOrder& order) {
  if (!order.in_grid()) {
    throw OutOfGrid("order (p=" + std::to_string(order.p) + ", q=" + std::to_string(order.q) +
                    ", d=" + std::to_string(order.d) + ") is outside the search grid");
  }
  return 30 * order.p + 3 * order.q + order.d;
}

ArimaOrder index_to_order(int index) {
  if (index < 0 || index >= kGridSize) {
    throw OutOfGrid("model index " + std::to_string(index) + " is outside 0.." +
                    std::to_string(kGridSize - 1));
  }
  return ArimaOrder{index / 30, index % 3, (index / 3) % 10};
}

std::vector<GridEntry> enumerate_grid(bool pq_rule) {
  std::vector<GridEntry> entries;
  entries.reserve(kGridSize);
  for (int p = 0; p <= ArimaOrder::kMaxP; ++p) {
    for (int q = 0; q <= ArimaOrder::kMaxQ; ++q) {
      for (int d = 0; d <= ArimaOrder::kMaxD; ++d) {
        GridEntry e;
        e.order = ArimaOrder{p, d, q};
        e.index = model_index(e.order);
        e.status = pq_rule && p < q ? EntryStatus::excluded_by_pq_rule : EntryStatus::ok;
        entries.push_back(std::move(e));
      }
    }
  }
  return entries;
}

std::optional<GridEntry> select_best(std::span<const GridEntry> entries) {
  const GridEntry* best = nullptr;
  for (const auto& e : entries) {
    if (e.status != EntryStatus::ok || !e.metric) {
      continue;
    }
    if (best == nullptr || *e.metric < *best->metric ||
        (*e.metric == *best->metric && e.index < best->index)) {
      best = &e;
    }
  }
  return best ? std::optional<GridEntry>(*best) : std::nullopt;
}

GridReport rss_grid_search(std::span<const double> prices, const FitConfig& config,
                           const GridOptions& options) {
  const auto log_prices = log_values(prices);
  GridReport report;
  report.strategy = Strategy::rss;
  report.entries = enumerate_grid(options.pq_rule);
  report.models.resize(report.entries.size());

  parallel_for(report.entries.size(), options.threads, [&](std::size_t i) {
    auto& entry = report.entries[i];
    if (entry.status != EntryStatus::ok) {
      return;
    }
    try {
      auto model = fit(entry.order, log_prices, config);
      if (!std::isfinite(model.fit_rss) || model.fit_rss < 0.0) {
        throw OptimizerFailure("non-finite residual sum of squares");
      }
      entry.metric = model.fit_rss;
      report.models[i] = std::move(model);
    } catch (const Error& e) {
      entry.status = EntryStatus::fit_failed;
      entry.metric.reset();
      entry.detail = e.what();
    }
  });
  report.best = select_best(report.entries);
  return report;
}

GridReport score_by_mse(const GridReport& fitted, std::span<const double> prices,
                        const EvalConfig& eval, unsigned threads) {
  const auto starts = sample_windows(prices.size(), eval);
  GridReport report;
  report.strategy = Strategy::mse;
  report.entries = fitted.entries;
  report.models = fitted.models;
  report.eval_config = eval;

  parallel_for(report.entries.size(), threads, [&](std::size_t i) {
    auto& entry = report.entries[i];
    entry.metric.reset();
    if (entry.status != EntryStatus::ok || !report.models[i]) {
      return;
    }
    try {
      const double mse =
          mse_of_model(*report.models[i], prices, starts, eval.window_len, eval.reps,
                       derive_seed(eval.master_seed, static_cast<std::uint64_t>(entry.index)));
      if (!std::isfinite(mse)) {
        throw OptimizerFailure("backtest MSE is non-finite");
      }
      entry.metric = mse;
    } catch (const Error& e) {
      entry.status = EntryStatus::fit_failed;
      entry.detail = e.what();
    }
  });
  report.best = select_best(report.entries);
  return report;
}

GridReport mse_grid_search(std::span<const double> prices, const EvalConfig& eval,
                           const FitConfig& config, const GridOptions& options) {
  eval.validate();
  return score_by_mse(rss_grid_search(prices, config, options), prices, eval, options.threads);
}

} // namespace btcarima
