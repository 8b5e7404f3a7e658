#include "btcarima/autocorrelation.hpp"

#include "btcarima/errors.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace btcarima {

std::vector<double> acf(std::span<const double> values, int max_lag) {
  const std::size_t n = values.size();
  if (n < 2) {
    throw SeriesTooShort("autocorrelation needs at least 2 observations");
  }
  if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= n) {
    throw LagTooLarge("max_lag " + std::to_string(max_lag) + " must lie in [0, " +
                      std::to_string(n - 1) + "]");
  }
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
  std::vector<double> centred(n);
  for (std::size_t t = 0; t < n; ++t) {
    centred[t] = values[t] - mean;
  }
  auto autocov = [&](std::size_t lag) {
    double s = 0.0;
    for (std::size_t t = 0; t + lag < n; ++t) {
      s += centred[t] * centred[t + lag];
    }
    return s / static_cast<double>(n);
  };
  const double gamma0 = autocov(0);
  if (!(gamma0 > 0.0)) {
    throw ZeroVariance("autocorrelation of a constant series is undefined");
  }
  std::vector<double> out(static_cast<std::size_t>(max_lag) + 1);
  out[0] = 1.0;
  for (std::size_t k = 1; k < out.size(); ++k) {
    out[k] = autocov(k) / gamma0;
  }
  return out;
}

std::vector<double> durbin_levinson(std::span<const double> rho) {
  const std::size_t max_lag = rho.empty() ? 0 : rho.size() - 1;
  std::vector<double> partial;
  partial.reserve(max_lag);
  std::vector<double> phi;  // phi[j - 1] = phi_{k,j}
  double error_var = 1.0;   // relative one-step prediction-error variance
  for (std::size_t k = 1; k <= max_lag; ++k) {
    double num = rho[k];
    for (std::size_t j = 1; j < k; ++j) {
      num -= phi[j - 1] * rho[k - j];
    }
    if (!(std::abs(error_var) > 1e-12)) {
      throw DegenerateToeplitz("Durbin-Levinson recursion hit a singular Toeplitz system at lag " +
                               std::to_string(k));
    }
    const double phi_kk = num / error_var;
    std::vector<double> next(k);
    for (std::size_t j = 1; j < k; ++j) {
      next[j - 1] = phi[j - 1] - phi_kk * phi[k - j - 1];
    }
    next[k - 1] = phi_kk;
    phi = std::move(next);
    error_var *= (1.0 - phi_kk * phi_kk);
    partial.push_back(phi_kk);
  }
  return partial;
}

std::vector<double> pacf(std::span<const double> values, int max_lag) {
  std::vector<double> rho;
  try {
    rho = acf(values, max_lag);
  } catch (const ZeroVariance& e) {
    throw DegenerateToeplitz(e.what());
  }
  return durbin_levinson(rho);
}

} // namespace btcarima
