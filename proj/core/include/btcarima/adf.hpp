#pragma once

#include <span>

namespace btcarima {

struct AdfCriticalValues {
  double one_pct = 0.0;
  double five_pct = 0.0;
  double ten_pct = 0.0;
};

struct AdfResult {
  double statistic = 0.0;  ///< t-ratio on the lagged level
  double p_value = 1.0;
  AdfCriticalValues critical_values;
  int lags_used = 0;
  int nobs = 0;  ///< rows in the final regression
};

/// Augmented Dickey-Fuller test with a constant and no trend.
///
/// The number of lagged differences is chosen by AIC over 0..max_lag, all
/// candidates estimated on the common sample; the chosen regression is then
/// re-estimated on its full sample. p-values use MacKinnon's approximate
/// response surface, critical values MacKinnon's finite-sample surface.
///
/// Throws SeriesTooShort if values.size() < max_lag + 10 and
/// SingularRegression for constant input.
[[nodiscard]] AdfResult adf_test(std::span<const double> values, int max_lag = 12);

/// Approximate asymptotic p-value of a constant-only ADF t-statistic.
[[nodiscard]] double adf_p_value(double statistic);

/// Finite-sample critical values for a regression with `nobs` rows.
[[nodiscard]] AdfCriticalValues adf_critical_values(int nobs);

} // namespace btcarima
