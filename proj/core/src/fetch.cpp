#include "btcarima/fetch.hpp"

#include "btcarima/errors.hpp"
#include "btcarima/report_io.hpp"

#include <httplib.h>

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

namespace btcarima {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  for (;;) {
    const auto comma = line.find(',');
    fields.push_back(trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) {
      return fields;
    }
    line.remove_prefix(comma + 1);
  }
}

struct ParsedUrl {
  std::string base;  // scheme://host[:port]
  std::string path;  // /path?query
};

ParsedUrl parse_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw NetworkError(0, "endpoint URL '" + url + "' has no scheme");
  }
  const auto path_start = url.find('/', scheme_end + 3);
  ParsedUrl out;
  out.base = url.substr(0, path_start);
  out.path = path_start == std::string::npos ? "/" : url.substr(path_start);
  return out;
}

} // namespace

std::string extract_date_close(std::string_view body) {
  std::optional<std::size_t> date_col;
  std::optional<std::size_t> close_col;
  bool header_seen = false;
  std::string out = "date,close\n";
  std::size_t rows = 0;
  while (!body.empty()) {
    const auto eol = body.find('\n');
    const auto line = trim(body.substr(0, eol));
    body.remove_prefix(eol == std::string_view::npos ? body.size() : eol + 1);
    if (line.empty()) {
      continue;
    }
    const auto fields = split_fields(line);
    if (!header_seen) {
      header_seen = true;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        const auto name = lower(fields[i]);
        if (name == "date" && !date_col) {
          date_col = i;
        } else if (name == "close" && !close_col) {
          close_col = i;
        }
      }
      if (!date_col || !close_col) {
        throw MalformedResponse("response header lacks a " +
                                std::string(!date_col ? "date" : "close") + " column");
      }
      continue;
    }
    if (fields.size() <= std::max(*date_col, *close_col)) {
      throw MalformedResponse("response row " + std::to_string(rows + 1) + " has too few columns");
    }
    out.append(fields[*date_col]);
    out += ',';
    out.append(fields[*close_col]);
    out += '\n';
    ++rows;
  }
  if (!header_seen) {
    throw MalformedResponse("empty response body");
  }
  if (rows == 0) {
    throw MalformedResponse("response contains no data rows");
  }
  return out;
}

std::size_t fetch_prices(const FetchRequest& request) {
  if (request.endpoint_url.empty()) {
    throw NetworkError(0, std::string("no endpoint URL configured (pass --fetch-url or set ") +
                              kFetchUrlEnv + ")");
  }
  const auto url = parse_url(request.endpoint_url);
  httplib::Client client(url.base);
  client.set_connection_timeout(request.timeout_seconds);
  client.set_read_timeout(request.timeout_seconds);
  client.set_follow_location(true);

  httplib::Headers headers;
  if (!request.api_key.empty()) {
    headers.emplace("X-API-Key", request.api_key);
  }
  const auto target = url.path + (url.path.find('?') == std::string::npos ? "?" : "&") +
                      "start=" + format_iso_date(request.start) +
                      "&end=" + format_iso_date(request.end);
  const auto response = client.Get(target, headers);
  if (!response) {
    throw NetworkError(0, "request to " + url.base + " failed: " +
                              httplib::to_string(response.error()));
  }
  if (response->status < 200 || response->status >= 300) {
    throw NetworkError(response->status,
                       "endpoint returned HTTP " + std::to_string(response->status));
  }
  const auto csv = extract_date_close(response->body);
  write_file_atomic(request.output, csv);
  return static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) - 1;
}

} // namespace btcarima
