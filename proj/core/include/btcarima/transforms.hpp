#pragma once

#include "btcarima/time_series.hpp"

#include <span>
#include <utility>
#include <vector>

namespace btcarima {

/// What was applied to a series, and what is needed to undo it.
///
/// `retained_heads[k]` is the first element of the k-th difference level
/// (level 0 is the, possibly logged, input itself).
struct TransformState {
  bool log_applied = false;
  int diff_order = 0;
  std::vector<double> retained_heads;

  bool operator==(const TransformState&) const = default;
};

struct Differenced {
  std::vector<double> values;
  std::vector<double> heads;
};

/// Element-wise natural log; throws NonPositiveValue on any value <= 0.
[[nodiscard]] std::vector<double> log_values(std::span<const double> values);

/// `order`-th finite difference. Requires `values.size() > order`.
[[nodiscard]] Differenced difference_values(std::span<const double> values, int order);

/// Inverse of difference_values: `heads.size()` cumulative-sum passes.
[[nodiscard]] std::vector<double> integrate_values(std::span<const double> diffed,
                                                   std::span<const double> heads);

[[nodiscard]] TimeSeries log_transform(const TimeSeries& ts);
[[nodiscard]] TimeSeries exp_transform(const TimeSeries& ts);

/// Differenced series is dated from `ts.start() + order` days. Throws
/// SeriesTooShort unless at least two differenced values remain.
[[nodiscard]] std::pair<TimeSeries, TransformState> difference(const TimeSeries& ts, int order);

/// Optional log followed by `order`-fold differencing.
[[nodiscard]] std::pair<TimeSeries, TransformState> transform(const TimeSeries& ts, bool apply_log,
                                                              int order);

/// Undoes the differencing recorded in `state`, then the log when
/// `state.log_applied` is set.
[[nodiscard]] TimeSeries inverse_difference(const TimeSeries& diffed, const TransformState& state);

} // namespace btcarima
