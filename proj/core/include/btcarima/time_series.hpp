#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace btcarima {

using Date = std::chrono::sys_days;

/// Parses a strict `YYYY-MM-DD` calendar date.
[[nodiscard]] std::optional<Date> parse_iso_date(std::string_view text);
[[nodiscard]] std::string format_iso_date(Date date);

/// Daily observations on consecutive calendar days.
///
/// Only the first date is stored; the i-th value belongs to `start() + i days`,
/// which makes gaps unrepresentable. Values are finite and there are at least
/// two of them.
class TimeSeries {
public:
  TimeSeries(Date start, std::vector<double> values);

  [[nodiscard]] Date start() const noexcept { return start_; }
  [[nodiscard]] Date date_at(std::size_t i) const noexcept {
    return start_ + std::chrono::days(static_cast<long>(i));
  }
  [[nodiscard]] Date last_date() const noexcept { return date_at(values_.size() - 1); }
  [[nodiscard]] std::vector<Date> dates() const;

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }

  /// Contiguous sub-range `[first, first + count)`; count must be >= 2.
  [[nodiscard]] TimeSeries slice(std::size_t first, std::size_t count) const;

  bool operator==(const TimeSeries&) const = default;

private:
  Date start_;
  std::vector<double> values_;
};

} // namespace btcarima
