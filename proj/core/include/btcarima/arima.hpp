#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace btcarima {

/// (p, d, q) with 0 <= p, q <= 9 and 0 <= d <= 2.
struct ArimaOrder {
  int p = 0;
  int d = 0;
  int q = 0;

  static constexpr int kMaxP = 9;
  static constexpr int kMaxD = 2;
  static constexpr int kMaxQ = 9;

  [[nodiscard]] constexpr bool in_grid() const noexcept {
    return p >= 0 && p <= kMaxP && d >= 0 && d <= kMaxD && q >= 0 && q <= kMaxQ;
  }
  bool operator==(const ArimaOrder&) const = default;
};

/// Fitted model in transform space:
///   x_t = c + sum_i phi_i x_{t-i} + sum_j theta_j e_{t-j} + e_t
/// where x is the d-times differenced (log) series.
struct ArimaModel {
  ArimaOrder order;
  std::vector<double> ar_coeffs;
  std::vector<double> ma_coeffs;
  double intercept = 0.0;
  double innovation_variance = 0.0;
  double fit_rss = 0.0;
  bool converged = true;
  bool invertible = true;
};

enum class FitInitialization { zeros, hannan_rissanen };

struct FitConfig {
  /// Iteration cap per simplex run; 0 means 500 x parameter count.
  int max_iterations = 0;
  double tolerance = 1e-10;
  /// Starting points for the simplex runs; the lowest objective wins.
  std::vector<FitInitialization> initialization{FitInitialization::hannan_rissanen,
                                                FitInitialization::zeros};
};

/// Conditional residuals e_t for t = p..n-1 with pre-sample residuals zero.
/// `series` is the already differenced series. Throws SeriesTooShort unless
/// series.size() > p.
[[nodiscard]] std::vector<double> css_residuals(const ArimaModel& model,
                                                std::span<const double> series);

/// Sum of squared conditional residuals for a packed parameter vector
/// [phi_1..phi_p, theta_1..theta_q, c]. `scratch` is resized as needed.
[[nodiscard]] double css_objective(std::span<const double> series, int p, int q,
                                   std::span<const double> params, std::vector<double>& scratch);

/// True when every root of 1 + theta_1 z + ... + theta_q z^q lies strictly
/// outside the unit circle.
[[nodiscard]] bool ma_invertible(std::span<const double> ma_coeffs);

/// Differences `series` d times and minimises the conditional sum of squares.
///
/// With q == 0 the problem is linear and is solved exactly by least squares.
/// Otherwise a simplex search is run from each configured starting point and
/// the best result kept. Throws SeriesTooShort when the differenced series has
/// p + q + 1 or fewer values and OptimizerFailure when every probe of the
/// objective was non-finite.
[[nodiscard]] ArimaModel fit(const ArimaOrder& order, std::span<const double> series,
                             const FitConfig& config = {});

/// One-day-ahead price forecast from a window of raw prices.
///
/// The window is logged (when `log_prices`) and differenced d times, giving m
/// values. Residuals follow the conditional recursion from t = min(p, m), the
/// same conditioning as css_residuals. AR lags missing from the window and the
/// q residuals before the recursion start are drawn i.i.d. from
/// N(0, innovation_variance) using `seed`, AR lags first, nearest lag first.
/// The prediction is mapped back to price units.
/// Throws WindowTooShort if window.size() < d + 1.
[[nodiscard]] double forecast_next(const ArimaModel& model, std::span<const double> window,
                                   bool log_prices, std::uint64_t seed);

/// True when a forecast from a window of `window_len` prices consumes random
/// pre-window draws, i.e. q > 0 or the differenced window is shorter than p.
[[nodiscard]] bool forecast_needs_draws(const ArimaModel& model, std::size_t window_len);

struct BacktestResult {
  double mse = 0.0;                 ///< mean over windows of window_mse
  std::vector<double> window_mse;   ///< per window, mean over reps
};

/// Squared price-space error of `reps` forecasts per window. A window starting
/// at s uses prices[s, s + w) and is scored against prices[s + w].
[[nodiscard]] BacktestResult backtest(const ArimaModel& model, std::span<const double> prices,
                                      std::span<const std::size_t> window_starts,
                                      std::size_t window_len, int reps, std::uint64_t seed,
                                      bool log_prices = true);

/// Grand mean of backtest(); USD^2 for price input.
[[nodiscard]] double mse_of_model(const ArimaModel& model, std::span<const double> prices,
                                  std::span<const std::size_t> window_starts,
                                  std::size_t window_len, int reps, std::uint64_t seed,
                                  bool log_prices = true);

} // namespace btcarima
