#pragma once

#include <span>
#include <vector>

namespace btcarima {

/// Biased sample autocorrelation (autocovariances divided by n) for lags
/// 0..max_lag. result[0] is exactly 1.
///
/// Throws LagTooLarge when max_lag >= values.size(), SeriesTooShort for fewer
/// than 2 values and ZeroVariance for a constant series.
[[nodiscard]] std::vector<double> acf(std::span<const double> values, int max_lag);

/// Partial autocorrelations for lags 1..max_lag via Durbin-Levinson on the
/// biased sample ACF. result[k - 1] is the lag-k coefficient.
///
/// Throws DegenerateToeplitz when the recursion's prediction-error variance
/// vanishes (including constant input).
[[nodiscard]] std::vector<double> pacf(std::span<const double> values, int max_lag);

/// Durbin-Levinson on an already-computed autocorrelation sequence
/// (rho[0] == 1). Returns partial autocorrelations for lags 1..rho.size()-1.
[[nodiscard]] std::vector<double> durbin_levinson(std::span<const double> rho);

} // namespace btcarima
