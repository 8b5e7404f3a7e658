#include "btcarima/transforms.hpp"

#include "btcarima/errors.hpp"

#include <cmath>
#include <string>

namespace btcarima {

std::vector<double> log_values(std::span<const double> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0)) {
      throw NonPositiveValue("cannot take log of value " + std::to_string(values[i]) +
                             " at index " + std::to_string(i));
    }
    out.push_back(std::log(values[i]));
  }
  return out;
}

Differenced difference_values(std::span<const double> values, int order) {
  if (order < 0) {
    throw InvalidConfig("differencing order must be non-negative");
  }
  if (values.size() <= static_cast<std::size_t>(order)) {
    throw SeriesTooShort("series of length " + std::to_string(values.size()) +
                         " cannot be differenced " + std::to_string(order) + " times");
  }
  Differenced out;
  out.values.assign(values.begin(), values.end());
  out.heads.reserve(static_cast<std::size_t>(order));
  for (int level = 0; level < order; ++level) {
    out.heads.push_back(out.values.front());
    for (std::size_t t = 0; t + 1 < out.values.size(); ++t) {
      out.values[t] = out.values[t + 1] - out.values[t];
    }
    out.values.pop_back();
  }
  return out;
}

std::vector<double> integrate_values(std::span<const double> diffed,
                                     std::span<const double> heads) {
  std::vector<double> out(diffed.begin(), diffed.end());
  for (auto head = heads.rbegin(); head != heads.rend(); ++head) {
    std::vector<double> level;
    level.reserve(out.size() + 1);
    double acc = *head;
    level.push_back(acc);
    for (double step : out) {
      acc += step;
      level.push_back(acc);
    }
    out = std::move(level);
  }
  return out;
}

TimeSeries log_transform(const TimeSeries& ts) {
  return TimeSeries(ts.start(), log_values(ts.values()));
}

TimeSeries exp_transform(const TimeSeries& ts) {
  std::vector<double> out;
  out.reserve(ts.size());
  for (double v : ts.values()) {
    out.push_back(std::exp(v));
  }
  return TimeSeries(ts.start(), std::move(out));
}

std::pair<TimeSeries, TransformState> difference(const TimeSeries& ts, int order) {
  auto diffed = difference_values(ts.values(), order);
  if (diffed.values.size() < 2) {
    throw SeriesTooShort("differencing a series of length " + std::to_string(ts.size()) + " " +
                         std::to_string(order) + " times leaves fewer than 2 values");
  }
  TransformState state{false, order, std::move(diffed.heads)};
  return {TimeSeries(ts.start() + std::chrono::days(order), std::move(diffed.values)),
          std::move(state)};
}

std::pair<TimeSeries, TransformState> transform(const TimeSeries& ts, bool apply_log, int order) {
  if (!apply_log) {
    return difference(ts, order);
  }
  auto result = difference(log_transform(ts), order);
  result.second.log_applied = true;
  return result;
}

TimeSeries inverse_difference(const TimeSeries& diffed, const TransformState& state) {
  if (state.diff_order < 0 ||
      state.retained_heads.size() != static_cast<std::size_t>(state.diff_order)) {
    throw StateMismatch("transform state holds " + std::to_string(state.retained_heads.size()) +
                        " heads for differencing order " + std::to_string(state.diff_order));
  }
  auto values = integrate_values(diffed.values(), state.retained_heads);
  if (state.log_applied) {
    for (double& v : values) {
      v = std::exp(v);
    }
  }
  return TimeSeries(diffed.start() - std::chrono::days(state.diff_order), std::move(values));
}

} // namespace btcarima
