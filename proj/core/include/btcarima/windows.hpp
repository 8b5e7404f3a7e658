#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace btcarima {

enum class Region { full_span, first_half };

[[nodiscard]] std::string_view region_name(Region region) noexcept;

/// Backtest sampling parameters. Defaults are 50 locations x 40 repetitions.
struct EvalConfig {
  std::size_t window_len = 9;
  std::size_t num_locations = 50;
  int reps = 40;
  Region region = Region::full_span;
  std::uint64_t master_seed = 42;

  /// Throws InvalidConfig on window_len < 2, num_locations < 1 or reps < 1.
  void validate() const;
};

/// One past the last index a window or its target may touch: the series
/// length for the full span, floor(n / 2) for the first half.
[[nodiscard]] std::size_t region_end(std::size_t series_len, Region region) noexcept;

/// num_locations distinct window starts, uniform without replacement over
/// every start s with s + w + 1 <= region_end, sorted ascending.
///
/// Throws SeriesTooShort unless series_len > w + 1 and RegionTooSmall when the
/// region has fewer admissible starts than requested locations.
[[nodiscard]] std::vector<std::size_t> sample_windows(std::size_t series_len,
                                                      const EvalConfig& eval);

} // namespace btcarima
