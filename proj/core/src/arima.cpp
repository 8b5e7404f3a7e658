#include "btcarima/arima.hpp"

#include "btcarima/errors.hpp"
#include "btcarima/nelder_mead.hpp"
#include "btcarima/seeding.hpp"
#include "btcarima/transforms.hpp"
#include "least_squares.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>

namespace btcarima {

namespace {

void check_order(const ArimaOrder& order) {
  if (order.p < 0 || order.d < 0 || order.q < 0) {
    throw InvalidOrder("ARIMA orders must be non-negative");
  }
}

std::string describe(const ArimaOrder& o) {
  return "(" + std::to_string(o.p) + "," + std::to_string(o.d) + "," + std::to_string(o.q) + ")";
}

std::vector<double> pack(const ArimaModel& m) {
  std::vector<double> params(m.ar_coeffs);
  params.insert(params.end(), m.ma_coeffs.begin(), m.ma_coeffs.end());
  params.push_back(m.intercept);
  return params;
}

void unpack(std::span<const double> params, ArimaModel& m) {
  const auto p = static_cast<std::size_t>(m.order.p);
  const auto q = static_cast<std::size_t>(m.order.q);
  m.ar_coeffs.assign(params.begin(), params.begin() + static_cast<long>(p));
  m.ma_coeffs.assign(params.begin() + static_cast<long>(p),
                     params.begin() + static_cast<long>(p + q));
  m.intercept = params[p + q];
}

double mean_of(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double std_dev_of(std::span<const double> x) {
  const double m = mean_of(x);
  double s = 0.0;
  for (double v : x) {
    s += (v - m) * (v - m);
  }
  return std::sqrt(s / static_cast<double>(x.size()));
}

// Exact CSS minimiser for q == 0: regress x_t on [x_{t-1..t-p}, 1].
std::optional<std::vector<double>> ar_least_squares(std::span<const double> x, int p) {
  const auto n = static_cast<Eigen::Index>(x.size());
  const Eigen::Index rows = n - p;
  Eigen::MatrixXd design(rows, p + 1);
  Eigen::VectorXd target(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto t = static_cast<std::size_t>(r + p);
    target(r) = x[t];
    for (int i = 1; i <= p; ++i) {
      design(r, i - 1) = x[t - static_cast<std::size_t>(i)];
    }
    design(r, p) = 1.0;
  }
  try {
    const auto fit = detail::least_squares(design, target);
    return std::vector<double>(fit.coef.data(), fit.coef.data() + fit.coef.size());
  } catch (const SingularRegression&) {
    return std::nullopt;
  }
}

// Two-stage Hannan-Rissanen: long AR for residual proxies, then a linear
// regression on AR lags and lagged proxies.
std::optional<std::vector<double>> hannan_rissanen(std::span<const double> x, int p, int q) {
  const int n = static_cast<int>(x.size());
  const int long_order = std::min(std::max(p + q + 5, 10), (n - 1) / 4);
  if (long_order < 1) {
    return std::nullopt;
  }
  const auto long_ar = ar_least_squares(x, long_order);
  if (!long_ar) {
    return std::nullopt;
  }
  std::vector<double> proxy(x.size(), 0.0);
  for (int t = long_order; t < n; ++t) {
    double v = x[static_cast<std::size_t>(t)] - (*long_ar)[static_cast<std::size_t>(long_order)];
    for (int i = 1; i <= long_order; ++i) {
      v -= (*long_ar)[static_cast<std::size_t>(i - 1)] * x[static_cast<std::size_t>(t - i)];
    }
    proxy[static_cast<std::size_t>(t)] = v;
  }
  const int first = std::max(p, long_order + q);
  const int rows = n - first;
  const int cols = p + q + 1;
  if (rows <= cols) {
    return std::nullopt;
  }
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd target(rows);
  for (int r = 0; r < rows; ++r) {
    const int t = r + first;
    target(r) = x[static_cast<std::size_t>(t)];
    for (int i = 1; i <= p; ++i) {
      design(r, i - 1) = x[static_cast<std::size_t>(t - i)];
    }
    for (int j = 1; j <= q; ++j) {
      design(r, p + j - 1) = proxy[static_cast<std::size_t>(t - j)];
    }
    design(r, p + q) = 1.0;
  }
  try {
    const auto fit = detail::least_squares(design, target);
    return std::vector<double>(fit.coef.data(), fit.coef.data() + fit.coef.size());
  } catch (const SingularRegression&) {
    return std::nullopt;
  }
}

} // namespace

double css_objective(std::span<const double> series, int p, int q, std::span<const double> params,
                     std::vector<double>& scratch) {
  const std::size_t n = series.size();
  const auto up = static_cast<std::size_t>(p);
  const auto uq = static_cast<std::size_t>(q);
  const double* phi = params.data();
  const double* theta = params.data() + up;
  const double c = params[up + uq];
  // scratch[k + q] holds e_k; everything before index p + q stays zero.
  scratch.assign(n + uq, 0.0);
  double ss = 0.0;
  for (std::size_t t = up; t < n; ++t) {
    double v = series[t] - c;
    for (std::size_t i = 1; i <= up; ++i) {
      v -= phi[i - 1] * series[t - i];
    }
    for (std::size_t j = 1; j <= uq; ++j) {
      v -= theta[j - 1] * scratch[t + uq - j];
    }
    scratch[t + uq] = v;
    ss += v * v;
  }
  return std::isfinite(ss) ? ss : std::numeric_limits<double>::infinity();
}

std::vector<double> css_residuals(const ArimaModel& model, std::span<const double> series) {
  const int p = model.order.p;
  const int q = model.order.q;
  if (series.size() <= static_cast<std::size_t>(p)) {
    throw SeriesTooShort("conditional residuals of AR order " + std::to_string(p) +
                         " need more than " + std::to_string(p) + " observations");
  }
  if (model.ar_coeffs.size() != static_cast<std::size_t>(p) ||
      model.ma_coeffs.size() != static_cast<std::size_t>(q)) {
    throw InvalidOrder("coefficient counts do not match order " + describe(model.order));
  }
  std::vector<double> scratch;
  const auto params = pack(model);
  (void)css_objective(series, p, q, params, scratch);
  return {scratch.begin() + static_cast<long>(p + q), scratch.end()};
}

bool ma_invertible(std::span<const double> ma_coeffs) {
  std::size_t q = ma_coeffs.size();
  while (q > 0 && ma_coeffs[q - 1] == 0.0) {
    --q;
  }
  if (q == 0) {
    return true;
  }
  for (std::size_t j = 0; j < q; ++j) {
    if (!std::isfinite(ma_coeffs[j])) {
      return false;
    }
  }
  // Roots of z^q + theta_1 z^{q-1} + ... + theta_q are the reciprocals of the
  // MA polynomial's roots; invertible iff they all lie inside the unit circle.
  const auto dim = static_cast<Eigen::Index>(q);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    companion(0, j) = -ma_coeffs[static_cast<std::size_t>(j)];
  }
  for (Eigen::Index i = 1; i < dim; ++i) {
    companion(i, i - 1) = 1.0;
  }
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  return solver.eigenvalues().cwiseAbs().maxCoeff() < 1.0;
}

ArimaModel fit(const ArimaOrder& order, std::span<const double> series, const FitConfig& config) {
  check_order(order);
  if (config.max_iterations < 0 || !(config.tolerance > 0.0)) {
    throw InvalidConfig("fit needs max_iterations >= 0 and tolerance > 0");
  }
  const auto differenced = difference_values(series, order.d);
  const std::span<const double> x = differenced.values;
  const int p = order.p;
  const int q = order.q;
  if (x.size() <= static_cast<std::size_t>(p + q + 1)) {
    throw SeriesTooShort("order " + describe(order) + " needs more than " +
                         std::to_string(p + q + 1) + " differenced observations, got " +
                         std::to_string(x.size()));
  }

  ArimaModel model;
  model.order = order;
  const int dim = p + q + 1;
  std::vector<double> scratch;
  auto objective = [&](std::span<const double> params) {
    return css_objective(x, p, q, params, scratch);
  };

  std::vector<double> best_params;
  double best_value = std::numeric_limits<double>::infinity();
  bool best_converged = false;

  std::optional<std::vector<double>> exact;
  if (p == 0 && q == 0) {
    exact = std::vector<double>{mean_of(x)};
  } else if (q == 0) {
    exact = ar_least_squares(x, p);
  }
  if (exact) {
    best_params = *exact;
    best_value = objective(best_params);
    best_converged = true;
  } else {
    const double mean = mean_of(x);
    const double scale = std::max({std_dev_of(x), std::abs(mean), 1e-6});
    std::vector<double> steps(static_cast<std::size_t>(dim), 0.1);
    steps.back() = 0.1 * scale;
    NelderMeadOptions options;
    options.max_iterations = config.max_iterations > 0 ? config.max_iterations : 500 * dim;
    options.tolerance = config.tolerance;

    for (const auto init : config.initialization) {
      std::vector<double> start(static_cast<std::size_t>(dim), 0.0);
      start.back() = mean;
      if (init == FitInitialization::hannan_rissanen) {
        auto guess = q > 0 ? hannan_rissanen(x, p, q) : std::nullopt;
        if (!guess) {
          continue;
        }
        start = std::move(*guess);
      }
      auto run = nelder_mead(objective, std::move(start), steps, options);
      if (run.value < best_value) {
        best_value = run.value;
        best_params = std::move(run.x);
        best_converged = run.converged;
      }
    }
  }

  if (!std::isfinite(best_value)) {
    throw OptimizerFailure("conditional sum of squares is non-finite at every probe for order " +
                           describe(order));
  }
  unpack(best_params, model);
  model.fit_rss = best_value;
  const std::size_t residual_count = x.size() - static_cast<std::size_t>(p);
  model.innovation_variance = best_value / static_cast<double>(residual_count);
  model.converged = best_converged;
  model.invertible = ma_invertible(model.ma_coeffs);
  return model;
}

bool forecast_needs_draws(const ArimaModel& model, std::size_t window_len) {
  const auto d = static_cast<std::size_t>(model.order.d);
  const std::size_t in_window = window_len > d ? window_len - d : 0;
  return model.order.q > 0 || in_window < static_cast<std::size_t>(model.order.p);
}

double forecast_next(const ArimaModel& model, std::span<const double> window, bool log_prices,
                     std::uint64_t seed) {
  const auto p = static_cast<std::size_t>(model.order.p);
  const auto q = static_cast<std::size_t>(model.order.q);
  const auto d = static_cast<std::size_t>(model.order.d);
  if (window.size() < d + 1) {
    throw WindowTooShort("window of " + std::to_string(window.size()) +
                         " prices is too short for d = " + std::to_string(d));
  }
  if (model.ar_coeffs.size() != p || model.ma_coeffs.size() != q) {
    throw InvalidOrder("coefficient counts do not match order " + describe(model.order));
  }
  const auto level = log_prices ? log_values(window)
                                : std::vector<double>(window.begin(), window.end());
  const auto diffed = difference_values(level, static_cast<int>(d));
  const auto& z = diffed.values;
  const std::size_t m = z.size();

  // As in the CSS objective, the residual recursion conditions on the first p
  // values and starts at t0 = min(p, m). Whatever the recursion and the
  // prediction need before that is drawn: AR lags before the window (only
  // when m < p), nearest first, then the q residuals preceding t0.
  const std::size_t t0 = std::min(p, m);
  const std::size_t ar_draws = p - t0;
  std::vector<double> xs(ar_draws + m);  // xs[ar_draws + t] = z_t
  std::vector<double> es(q + m, 0.0);    // es[q + t] = e_t
  std::mt19937_64 rng(seed);
  const double sd = std::sqrt(model.innovation_variance);
  const bool random_start = std::isfinite(sd) && sd > 0.0;
  std::normal_distribution<double> noise(0.0, random_start ? sd : 1.0);
  for (std::size_t k = 0; k < ar_draws; ++k) {
    xs[ar_draws - 1 - k] = random_start ? noise(rng) : 0.0;
  }
  for (std::size_t k = 0; k < q; ++k) {
    es[q + t0 - 1 - k] = random_start ? noise(rng) : 0.0;
  }
  std::copy(z.begin(), z.end(), xs.begin() + static_cast<long>(ar_draws));

  const double c = model.intercept;
  if (q > 0) {
    for (std::size_t t = t0; t < m; ++t) {
      double v = xs[ar_draws + t] - c;
      for (std::size_t i = 1; i <= p; ++i) {
        v -= model.ar_coeffs[i - 1] * xs[ar_draws + t - i];
      }
      for (std::size_t j = 1; j <= q; ++j) {
        v -= model.ma_coeffs[j - 1] * es[q + t - j];
      }
      es[q + t] = v;
    }
  }
  double next = c;
  for (std::size_t i = 1; i <= p; ++i) {
    next += model.ar_coeffs[i - 1] * xs[ar_draws + m - i];
  }
  for (std::size_t j = 1; j <= q; ++j) {
    next += model.ma_coeffs[j - 1] * es[q + m - j];
  }

  std::vector<double> extended(z);
  extended.push_back(next);
  const double level_next = integrate_values(extended, diffed.heads).back();
  return log_prices ? std::exp(level_next) : level_next;
}

BacktestResult backtest(const ArimaModel& model, std::span<const double> prices,
                        std::span<const std::size_t> window_starts, std::size_t window_len,
                        int reps, std::uint64_t seed, bool log_prices) {
  if (reps < 1) {
    throw InvalidConfig("backtest needs reps >= 1");
  }
  if (window_starts.empty()) {
    throw InvalidConfig("backtest needs at least one window");
  }
  const bool stochastic = forecast_needs_draws(model, window_len);
  BacktestResult out;
  out.window_mse.reserve(window_starts.size());
  for (const std::size_t start : window_starts) {
    if (start + window_len + 1 > prices.size()) {
      throw SeriesTooShort("window starting at " + std::to_string(start) + " with length " +
                           std::to_string(window_len) + " has no target inside " +
                           std::to_string(prices.size()) + " prices");
    }
    const auto window = prices.subspan(start, window_len);
    const double truth = prices[start + window_len];
    double acc = 0.0;
    if (stochastic) {
      for (int r = 0; r < reps; ++r) {
        const auto rep_seed = derive_seed(seed, start, static_cast<std::uint64_t>(r));
        const double err = forecast_next(model, window, log_prices, rep_seed) - truth;
        acc += err * err;
      }
      acc /= static_cast<double>(reps);
    } else {
      const double err = forecast_next(model, window, log_prices, derive_seed(seed, start)) - truth;
      acc = err * err;
    }
    out.window_mse.push_back(acc);
  }
  out.mse = std::accumulate(out.window_mse.begin(), out.window_mse.end(), 0.0) /
            static_cast<double>(out.window_mse.size());
  return out;
}

double mse_of_model(const ArimaModel& model, std::span<const double> prices,
                    std::span<const std::size_t> window_starts, std::size_t window_len, int reps,
                    std::uint64_t seed, bool log_prices) {
  return backtest(model, prices, window_starts, window_len, reps, seed, log_prices).mse;
}

} // namespace btcarima
