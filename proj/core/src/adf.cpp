#include "btcarima/adf.hpp"

#include "btcarima/errors.hpp"
#include "least_squares.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace btcarima {

namespace {

// MacKinnon (1994) constant-only, single series.
constexpr double kTauMax = 2.74;
constexpr double kTauMin = -18.83;
constexpr double kTauStar = -1.61;
constexpr double kSmallP[] = {2.1659, 1.4412, 3.8269e-2};
constexpr double kLargeP[] = {1.7339, 9.3202e-1, -1.2745e-1, -1.0368e-2};

// MacKinnon (2010) response surface: b0 + b1/T + b2/T^2 + b3/T^3.
constexpr double kCrit1[] = {-3.43035, -6.5393, -16.786, -79.433};
constexpr double kCrit5[] = {-2.86154, -2.8903, -4.234, -40.040};
constexpr double kCrit10[] = {-2.56677, -1.5384, -2.809, 0.0};

template <std::size_t N>
double polyval(const double (&coef)[N], double x) {
  double acc = 0.0;
  for (std::size_t i = N; i-- > 0;) {
    acc = acc * x + coef[i];
  }
  return acc;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

struct Design {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
};

// Rows use differences from index `trim` onwards; columns are
// [const, level, first `lags` lagged differences]. The level column is
// centred, which leaves its coefficient and t-ratio unchanged (a constant is
// present) but keeps the regression well conditioned for series far from 0.
Design build_design(const std::vector<double>& level, const std::vector<double>& diff, int trim,
                    int lags) {
  const auto nobs = static_cast<Eigen::Index>(diff.size()) - trim;
  Design d{Eigen::MatrixXd(nobs, 2 + lags), Eigen::VectorXd(nobs)};
  double level_mean = 0.0;
  for (Eigen::Index i = 0; i < nobs; ++i) {
    level_mean += level[static_cast<std::size_t>(i + trim)];
  }
  level_mean /= static_cast<double>(nobs);
  for (Eigen::Index i = 0; i < nobs; ++i) {
    const auto t = static_cast<std::size_t>(i + trim);
    d.y(i) = diff[t];
    d.x(i, 0) = 1.0;
    d.x(i, 1) = level[t] - level_mean;
    for (int j = 1; j <= lags; ++j) {
      d.x(i, 1 + j) = diff[t - static_cast<std::size_t>(j)];
    }
  }
  return d;
}

} // namespace

double adf_p_value(double statistic) {
  if (statistic > kTauMax) {
    return 1.0;
  }
  if (statistic < kTauMin) {
    return 0.0;
  }
  const double z =
      statistic <= kTauStar ? polyval(kSmallP, statistic) : polyval(kLargeP, statistic);
  return normal_cdf(z);
}

AdfCriticalValues adf_critical_values(int nobs) {
  const double inv = 1.0 / static_cast<double>(nobs);
  return {polyval(kCrit1, inv), polyval(kCrit5, inv), polyval(kCrit10, inv)};
}

AdfResult adf_test(std::span<const double> values, int max_lag) {
  if (max_lag < 0) {
    throw InvalidConfig("ADF max_lag must be non-negative");
  }
  if (values.size() < static_cast<std::size_t>(max_lag) + 10) {
    throw SeriesTooShort("ADF test with max_lag " + std::to_string(max_lag) + " needs at least " +
                         std::to_string(max_lag + 10) + " observations, got " +
                         std::to_string(values.size()));
  }
  const std::vector<double> level(values.begin(), values.end());
  std::vector<double> diff(level.size() - 1);
  for (std::size_t t = 0; t + 1 < level.size(); ++t) {
    diff[t] = level[t + 1] - level[t];
  }

  // Lag selection on the common sample trimmed by max_lag.
  int best_lag = 0;
  double best_aic = std::numeric_limits<double>::infinity();
  for (int lags = 0; lags <= max_lag; ++lags) {
    const auto d = build_design(level, diff, max_lag, lags);
    const auto fit = detail::least_squares(d.x, d.y);
    const auto n = static_cast<double>(d.y.size());
    const double llf =
        -0.5 * n * (std::log(2.0 * std::numbers::pi) + std::log(fit.ssr / n) + 1.0);
    const double aic = -2.0 * llf + 2.0 * static_cast<double>(d.x.cols());
    if (aic < best_aic) {
      best_aic = aic;
      best_lag = lags;
    }
  }

  const auto d = build_design(level, diff, best_lag, best_lag);
  const auto fit = detail::least_squares(d.x, d.y, /*with_std_err=*/true);
  AdfResult out;
  out.statistic = fit.coef(1) / fit.std_err(1);
  out.p_value = adf_p_value(out.statistic);
  out.nobs = static_cast<int>(d.y.size());
  out.critical_values = adf_critical_values(out.nobs);
  out.lags_used = best_lag;
  return out;
}

} // namespace btcarima
