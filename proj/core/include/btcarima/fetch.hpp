#pragma once

#include "btcarima/time_series.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

namespace btcarima {

/// Environment variables consulted when no URL / key is given explicitly.
inline constexpr const char* kFetchUrlEnv = "BTCARIMA_FETCH_URL";
inline constexpr const char* kApiKeyEnv = "BTCARIMA_API_KEY";

struct FetchRequest {
  std::string endpoint_url;  ///< http(s)://host[:port]/path[?query]
  Date start;
  Date end;                  ///< inclusive
  std::string api_key;       ///< sent as `X-API-Key` when non-empty
  std::filesystem::path output;
  int timeout_seconds = 30;
};

/// Keeps the `date` and `close` columns (matched case-insensitively in the
/// header row) of a CSV response body and returns them as `date,close` CSV.
/// Values are passed through unvalidated. Throws MalformedResponse when either
/// column or every data row is missing.
[[nodiscard]] std::string extract_date_close(std::string_view body);

/// GETs `endpoint_url` with `start` / `end` query parameters and writes the
/// extracted `date,close` rows to `output` atomically. Returns the number of
/// data rows written. Throws NetworkError (with HTTP status when one was
/// received) or MalformedResponse.
std::size_t fetch_prices(const FetchRequest& request);

} // namespace btcarima
