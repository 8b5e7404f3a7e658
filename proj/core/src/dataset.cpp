#include "btcarima/dataset.hpp"

#include "btcarima/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace btcarima {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<double> parse_decimal(std::string_view text) {
  double value = 0.0;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (ec != std::errc{} || ptr != last) {
    return std::nullopt;
  }
  return value;
}

} // namespace

TimeSeries parse_price_csv(std::string_view text, const DatasetSpec& spec,
                           const WarningSink& warn) {
  if (spec.span_days <= 0) {
    throw InvalidConfig("dataset span must be positive");
  }
  if (text.starts_with("\xEF\xBB\xBF")) {
    text.remove_prefix(3);
  }

  std::map<Date, double> rows;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const auto raw = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) {
      continue;
    }
    // A first line that does not start with a digit is a header.
    if (!seen_content) {
      seen_content = true;
      if (line.front() < '0' || line.front() > '9') {
        continue;
      }
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected exactly two fields `date,close`");
    }
    const auto date_field = trim(line.substr(0, comma));
    const auto close_field = trim(line.substr(comma + 1));
    const auto date = parse_iso_date(date_field);
    if (!date) {
      throw ParseError(line_no, "invalid ISO-8601 date '" + std::string(date_field) + "'");
    }
    const auto close = parse_decimal(close_field);
    if (!close || !std::isfinite(*close)) {
      throw ParseError(line_no, "invalid close value '" + std::string(close_field) + "'");
    }
    if (*close <= 0.0) {
      throw NonPositivePrice("line " + std::to_string(line_no) + ": close " +
                             std::string(close_field) + " on " + std::string(date_field) +
                             " is not positive");
    }
    if (!rows.emplace(*date, *close).second) {
      throw ParseError(line_no, "duplicate date " + std::string(date_field));
    }
  }

  const Date first = spec.start_date;
  const Date stop = spec.start_date + std::chrono::days(spec.span_days);
  auto it = rows.lower_bound(first);
  if (it == rows.end() || it->first >= stop) {
    throw GapError("no observations between " + format_iso_date(first) + " and " +
                   format_iso_date(stop - std::chrono::days(1)));
  }
  const auto last_in_span = std::prev(rows.lower_bound(stop));

  std::vector<double> values;
  std::size_t filled = 0;
  std::optional<Date> first_gap;
  std::optional<double> previous;
  if (it->first != first) {
    if (it == rows.begin()) {
      throw GapError("no observation on or before the start date " + format_iso_date(first));
    }
    previous = std::prev(it)->second;
  }
  for (Date day = first; day <= last_in_span->first; day += std::chrono::days(1)) {
    if (it != rows.end() && it->first == day) {
      values.push_back(it->second);
      previous = it->second;
      ++it;
      continue;
    }
    if (spec.fill_policy == FillPolicy::error) {
      throw GapError("missing observation for " + format_iso_date(day));
    }
    if (!first_gap) {
      first_gap = day;
    }
    values.push_back(*previous);
    ++filled;
  }
  if (filled > 0 && warn) {
    warn("forward-filled " + std::to_string(filled) + " missing day(s), first on " +
         format_iso_date(*first_gap));
  }
  return TimeSeries(first, std::move(values));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("failed reading " + path.string());
  }
  return buf.str();
}

TimeSeries ingest_csv(const DatasetSpec& spec, const WarningSink& warn) {
  return parse_price_csv(read_file(spec.path), spec, warn);
}

std::string format_series_csv(const TimeSeries& ts) {
  std::string out = "date,close\n";
  char buf[64];
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out += format_iso_date(ts.date_at(i));
    out += ',';
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, ts[i]);
    out.append(buf, ptr);
    out += '\n';
  }
  return out;
}

} // namespace btcarima
