#pragma once

#include "btcarima/arima.hpp"
#include "btcarima/dataset.hpp"
#include "btcarima/windows.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace btcarima {

enum class Command { preprocess, grid_rss, grid_mse, eval_locations, sweep_w, fetch };

[[nodiscard]] std::optional<Command> parse_command(std::string_view name);
[[nodiscard]] std::string_view command_name(Command command) noexcept;

struct OutputFormats {
  bool csv = true;
  bool json = true;
  bool svg = false;
};

/// Parses a comma separated subset of {csv, json, svg}; throws InvalidConfig
/// on unknown or empty input.
[[nodiscard]] OutputFormats parse_formats(std::string_view text);

struct RunConfig {
  Command command = Command::preprocess;
  DatasetSpec dataset;
  std::uint64_t seed = 42;
  std::vector<std::size_t> w{9};
  std::size_t locations = 50;
  int reps = 40;
  Region region = Region::full_span;
  bool pq_rule = true;
  /// eval-locations: evaluate this order instead of the MSE-grid winner.
  std::optional<ArimaOrder> order;
  int adf_max_lag = 12;
  int acf_lags = 100;
  FitConfig fit;
  std::filesystem::path output_dir = "out";
  OutputFormats formats;
  std::string fetch_url;
  std::string api_key;
  /// Worker threads for grid work; 0 = hardware concurrency. Never affects output.
  unsigned threads = 0;
};

/// Runs one command and writes its reports under `config.output_dir`
/// (report.json plus per-figure CSV / SVG files). Progress goes to `log`.
/// Throws btcarima::Error subclasses on failure.
void execute(const RunConfig& config, std::ostream& log);

/// execute() with errors reported on `log`; returns the process exit status.
[[nodiscard]] int run_command(const RunConfig& config, std::ostream& log);

} // namespace btcarima
