#include "btcarima/windows.hpp"

#include "btcarima/errors.hpp"
#include "btcarima/seeding.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <random>
#include <string>

namespace btcarima {

namespace {

constexpr std::uint64_t kWindowStream = 0x77696e646f7773ULL;

} // namespace

std::string_view region_name(Region region) noexcept {
  return region == Region::full_span ? "full" : "first-half";
}

void EvalConfig::validate() const {
  if (window_len < 2) {
    throw InvalidConfig("window length must be at least 2");
  }
  if (num_locations < 1) {
    throw InvalidConfig("at least one window location is required");
  }
  if (reps < 1) {
    throw InvalidConfig("at least one repetition is required");
  }
}

std::size_t region_end(std::size_t series_len, Region region) noexcept {
  return region == Region::full_span ? series_len : series_len / 2;
}

std::vector<std::size_t> sample_windows(std::size_t series_len, const EvalConfig& eval) {
  eval.validate();
  const std::size_t w = eval.window_len;
  if (series_len <= w + 1) {
    throw SeriesTooShort("series of length " + std::to_string(series_len) +
                         " cannot hold a window of " + std::to_string(w) + " plus a target");
  }
  const std::size_t end = region_end(series_len, eval.region);
  const std::size_t admissible = end > w ? end - w : 0;
  if (admissible < eval.num_locations) {
    throw RegionTooSmall("region " + std::string(region_name(eval.region)) + " admits " +
                         std::to_string(admissible) + " window starts, " +
                         std::to_string(eval.num_locations) + " requested");
  }
  std::vector<std::size_t> population(admissible);
  std::iota(population.begin(), population.end(), std::size_t{0});
  std::vector<std::size_t> starts;
  starts.reserve(eval.num_locations);
  std::mt19937_64 rng(derive_seed(eval.master_seed, kWindowStream));
  std::sample(population.begin(), population.end(), std::back_inserter(starts),
              static_cast<std::ptrdiff_t>(eval.num_locations), rng);
  std::sort(starts.begin(), starts.end());
  return starts;
}

} // namespace btcarima
