#include "btcarima/time_series.hpp"

#include "btcarima/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace btcarima {

namespace {

bool parse_digits(std::string_view text, int& out) {
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

} // namespace

std::optional<Date> parse_iso_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    return std::nullopt;
  }
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
    if (text[i] < '0' || text[i] > '9') {
      return std::nullopt;
    }
  }
  int y = 0;
  int m = 0;
  int d = 0;
  if (!parse_digits(text.substr(0, 4), y) || !parse_digits(text.substr(5, 2), m) ||
      !parse_digits(text.substr(8, 2), d)) {
    return std::nullopt;
  }
  const std::chrono::year_month_day ymd{std::chrono::year{y},
                                        std::chrono::month{static_cast<unsigned>(m)},
                                        std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) {
    return std::nullopt;
  }
  return Date{ymd};
}

std::string format_iso_date(Date date) {
  const std::chrono::year_month_day ymd{date};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

TimeSeries::TimeSeries(Date start, std::vector<double> values)
    : start_(start), values_(std::move(values)) {
  if (values_.size() < 2) {
    throw InvalidSeries("time series needs at least 2 observations, got " +
                        std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvalidSeries("non-finite value at " + format_iso_date(date_at(i)));
    }
  }
}

std::vector<Date> TimeSeries::dates() const {
  std::vector<Date> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out.push_back(date_at(i));
  }
  return out;
}

TimeSeries TimeSeries::slice(std::size_t first, std::size_t count) const {
  if (first + count > values_.size()) {
    throw SeriesTooShort("slice [" + std::to_string(first) + ", " +
                         std::to_string(first + count) + ") exceeds series length " +
                         std::to_string(values_.size()));
  }
  return TimeSeries(date_at(first), std::vector<double>(values_.begin() + static_cast<long>(first),
                                                        values_.begin() +
                                                            static_cast<long>(first + count)));
}

} // namespace btcarima
