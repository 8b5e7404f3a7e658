#pragma once

#include <cstdint>

namespace btcarima {

/// SplitMix64 finaliser.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

/// Child seed for work item (a, b) under `base`. Independent of the order in
/// which work items are scheduled.
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                                  std::uint64_t b = 0) noexcept {
  return mix64(mix64(mix64(base) ^ a) ^ (b * 0xd6e8feb86659fd93ULL));
}

} // namespace btcarima
