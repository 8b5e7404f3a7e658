#pragma once

#include "btcarima/time_series.hpp"

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

namespace btcarima {

enum class FillPolicy { error, forward_fill };

struct DatasetSpec {
  std::filesystem::path path;
  Date start_date = Date{std::chrono::year{2015} / std::chrono::September / 1};
  int span_days = 1096;
  FillPolicy fill_policy = FillPolicy::forward_fill;
};

using WarningSink = std::function<void(const std::string&)>;

/// Parses `date,close` rows (ISO-8601 dates, optional header, LF or CRLF),
/// sorts them, clips to [start_date, start_date + span_days) and fills or
/// rejects missing days per the fill policy. A missing first day is filled
/// from the latest earlier row when one exists.
///
/// Errors: ParseError (with line number), GapError, NonPositivePrice.
[[nodiscard]] TimeSeries parse_price_csv(std::string_view text, const DatasetSpec& spec,
                                         const WarningSink& warn = {});

/// Reads `spec.path` and forwards to parse_price_csv. Throws IoError when the
/// file cannot be read.
[[nodiscard]] TimeSeries ingest_csv(const DatasetSpec& spec, const WarningSink& warn = {});

/// `date,close` CSV with shortest round-trip decimal closes, so that
/// parse_price_csv(format_series_csv(ts)) == ts.
[[nodiscard]] std::string format_series_csv(const TimeSeries& ts);

[[nodiscard]] std::string read_file(const std::filesystem::path& path);

} // namespace btcarima
