#include "btcarima/arima.hpp"
#include "btcarima/errors.hpp"
#include "btcarima/nelder_mead.hpp"
#include "btcarima/seeding.hpp"
#include "btcarima/transforms.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

namespace btcarima {
namespace {

ArimaModel make_model(ArimaOrder order, std::vector<double> ar, std::vector<double> ma, double c,
                      double sigma2 = 0.0) {
  ArimaModel m;
  m.order = order;
  m.ar_coeffs = std::move(ar);
  m.ma_coeffs = std::move(ma);
  m.intercept = c;
  m.innovation_variance = sigma2;
  return m;
}

double baseline_css(std::span<const double> x, int p, int q) {
  std::vector<double> params(static_cast<std::size_t>(p + q + 1), 0.0);
  params.back() = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  std::vector<double> scratch;
  return css_objective(x, p, q, params, scratch);
}

// --- Nelder-Mead ----------------------------------------------------------

TEST(NelderMead, MinimisesRosenbrock) {
  const Objective rosen = [](std::span<const double> v) {
    return 100.0 * std::pow(v[1] - v[0] * v[0], 2) + std::pow(1.0 - v[0], 2);
  };
  const std::vector<double> steps{0.5, 0.5};
  NelderMeadOptions opts;
  opts.max_iterations = 5000;
  opts.tolerance = 1e-14;
  const auto r = nelder_mead(rosen, {-1.2, 1.0}, steps, opts);
  EXPECT_NEAR(r.x[0], 1.0, 1e-3);
  EXPECT_NEAR(r.x[1], 1.0, 2e-3);
}

TEST(NelderMead, ReportsIterationCap) {
  const Objective bowl = [](std::span<const double> v) { return 1.0 + v[0] * v[0] + v[1] * v[1]; };
  const std::vector<double> steps{1.0, 1.0};
  NelderMeadOptions opts;
  opts.max_iterations = 3;
  const auto r = nelder_mead(bowl, {5.0, 5.0}, steps, opts);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 3);
}

TEST(NelderMead, NonFiniteEverywhereStaysInfinite) {
  const Objective nan_obj = [](std::span<const double>) { return std::nan(""); };
  const std::vector<double> steps{1.0};
  const auto r = nelder_mead(nan_obj, {0.0}, steps, {});
  EXPECT_TRUE(std::isinf(r.value));
}

// --- css_residuals --------------------------------------------------------

TEST(CssResiduals, ZeroModelShiftsSeries) {
  const auto x = testing::uniform_values(40, 3);
  for (int p : {0, 1, 4}) {
    for (int q : {0, 2}) {
      const auto m = make_model({p, 0, q}, std::vector<double>(static_cast<std::size_t>(p), 0.0),
                                std::vector<double>(static_cast<std::size_t>(q), 0.0), 0.0);
      const auto e = css_residuals(m, x);
      ASSERT_EQ(e.size(), x.size() - static_cast<std::size_t>(p));
      for (std::size_t i = 0; i < e.size(); ++i) {
        EXPECT_EQ(e[i], x[i + static_cast<std::size_t>(p)]);
      }
    }
  }
}

TEST(CssResiduals, Ar1ExactRecursion) {
  const auto m = make_model({1, 0, 0}, {0.5}, {}, 0.0);
  const std::vector<double> x{1.0, 0.5, 0.25};
  EXPECT_EQ(css_residuals(m, x), (std::vector<double>{0.0, 0.0}));
}

TEST(CssResiduals, RecoversSimulatedInnovations) {
  const std::vector<double> phi{0.6};
  const std::vector<double> theta{0.3};
  const auto sim = testing::simulate_arma(phi, theta, 0.1, 1.0, 1000, 21, 0);
  const auto m = make_model({1, 0, 1}, phi, theta, 0.1);
  const auto e = css_residuals(m, sim.x);
  double ss = 0.0;
  std::size_t count = 0;
  for (std::size_t t = 50; t < sim.x.size(); ++t) {
    const double diff = e[t - 1] - sim.innovations[t];
    ss += diff * diff;
    ++count;
  }
  EXPECT_LE(std::sqrt(ss / static_cast<double>(count)), 0.02);
}

TEST(CssResiduals, TooShort) {
  const auto m = make_model({3, 0, 0}, {0.1, 0.1, 0.1}, {}, 0.0);
  EXPECT_THROW((void)css_residuals(m, std::vector{1.0, 2.0, 3.0}), SeriesTooShort);
}

TEST(CssObjective, EqualsSumOfSquaredResiduals) {
  const auto x = testing::uniform_values(60, 8, -1.0, 1.0);
  const auto m = make_model({2, 0, 2}, {0.3, -0.2}, {0.4, 0.1}, 0.05);
  const auto e = css_residuals(m, x);
  double ss = 0.0;
  for (double v : e) {
    ss += v * v;
  }
  const std::vector<double> params{0.3, -0.2, 0.4, 0.1, 0.05};
  std::vector<double> scratch;
  EXPECT_NEAR(css_objective(x, 2, 2, params, scratch), ss, 1e-12 * std::max(1.0, ss));
}

// --- invertibility --------------------------------------------------------

TEST(Invertibility, RootModulus) {
  EXPECT_TRUE(ma_invertible(std::vector<double>{}));
  EXPECT_TRUE(ma_invertible(std::vector{0.5}));
  EXPECT_FALSE(ma_invertible(std::vector{1.5}));
  EXPECT_FALSE(ma_invertible(std::vector{-1.0}));
  // 1 + 0.5z + 0.9z^2 has roots of modulus 1/sqrt(0.9) > 1.
  EXPECT_TRUE(ma_invertible(std::vector{0.5, 0.9}));
  EXPECT_FALSE(ma_invertible(std::vector{0.5, 1.2}));
}

// --- fit --------------------------------------------------------------------

TEST(Fit, WhiteNoiseOrderIsClosedForm) {
  const auto x = testing::uniform_values(123, 4);
  const auto m = fit({0, 0, 0}, x);
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  double ss = 0.0;
  for (double v : x) {
    ss += (v - mean) * (v - mean);
  }
  EXPECT_NEAR(m.intercept, mean, 1e-12);
  EXPECT_NEAR(m.fit_rss, ss, 1e-9 * ss);
  EXPECT_TRUE(m.converged);
}

TEST(Fit, InnovationVarianceIsRssOverResidualCount) {
  const auto x = testing::random_walk(300, 6);
  for (ArimaOrder o : {ArimaOrder{0, 0, 0}, ArimaOrder{2, 1, 0}, ArimaOrder{1, 1, 1},
                       ArimaOrder{3, 2, 2}}) {
    const auto m = fit(o, x);
    const std::size_t effective = x.size() - static_cast<std::size_t>(o.d + o.p);
    EXPECT_EQ(m.innovation_variance, m.fit_rss / static_cast<double>(effective));
  }
}

TEST(Fit, NeverWorseThanMeanBaseline) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto x = testing::random_walk(250, seed);
    for (ArimaOrder o : {ArimaOrder{1, 0, 0}, ArimaOrder{1, 1, 1}, ArimaOrder{0, 1, 2},
                         ArimaOrder{3, 1, 3}, ArimaOrder{2, 2, 1}}) {
      const auto m = fit(o, x);
      const auto diffed = difference_values(x, o.d).values;
      EXPECT_LE(m.fit_rss, baseline_css(diffed, o.p, o.q)) << seed;
      EXPECT_GE(m.fit_rss, 0.0);
    }
  }
}

TEST(Fit, RecoversAr1) {
  const std::vector<double> phi{0.5};
  const auto sim = testing::simulate_arma(phi, {}, 0.0, 1.0, 1000, 77);
  const auto m = fit({1, 0, 0}, sim.x);
  EXPECT_NEAR(m.ar_coeffs[0], 0.5, 0.1);
}

TEST(Fit, RecoversMa1) {
  const std::vector<double> theta{0.4};
  const auto sim = testing::simulate_arma({}, theta, 0.0, 1.0, 1000, 78);
  const auto m = fit({0, 0, 1}, sim.x);
  EXPECT_NEAR(m.ma_coeffs[0], 0.4, 0.15);
  EXPECT_TRUE(m.invertible);
}

TEST(Fit, RecoversIntegratedArma) {
  const std::vector<double> phi{0.5};
  const std::vector<double> theta{0.3};
  const auto sim = testing::simulate_arma(phi, theta, 0.0, 1.0, 1500, 79);
  std::vector<double> level(sim.x.size());
  std::partial_sum(sim.x.begin(), sim.x.end(), level.begin());
  const auto m = fit({1, 1, 1}, level);
  EXPECT_NEAR(m.ar_coeffs[0], 0.5, 0.2);
  EXPECT_NEAR(m.ma_coeffs[0], 0.3, 0.2);
}

TEST(Fit, Errors) {
  const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
  EXPECT_THROW((void)fit({2, 0, 1}, x), SeriesTooShort);
  EXPECT_THROW((void)fit({0, 2, 0}, std::vector{1.0, 2.0, 4.0}), SeriesTooShort);
  EXPECT_THROW((void)fit({-1, 0, 0}, x), InvalidOrder);
  FitConfig bad;
  bad.tolerance = 0.0;
  EXPECT_THROW((void)fit({0, 0, 1}, testing::uniform_values(50, 1), bad), InvalidConfig);
}

TEST(Fit, ZerosOnlyInitialisation) {
  FitConfig cfg;
  cfg.initialization = {FitInitialization::zeros};
  const auto x = testing::uniform_values(200, 12, -1.0, 1.0);
  const auto m = fit({1, 0, 1}, x, cfg);
  EXPECT_LE(m.fit_rss, baseline_css(x, 1, 1));
}

// --- forecast_next ----------------------------------------------------------

TEST(Forecast, ConstantModelReturnsIntercept) {
  const auto m = make_model({0, 0, 0}, {}, {}, 123.5, 4.0);
  for (std::uint64_t seed : {1ULL, 99ULL}) {
    EXPECT_EQ(forecast_next(m, std::vector{1.0, 900.0, -3.0}, false, seed), 123.5);
  }
}

TEST(Forecast, ZeroCoefficientRandomWalkCarriesForward) {
  const auto m = make_model({1, 1, 0}, {0.0}, {}, 0.0, 1.0);
  EXPECT_DOUBLE_EQ(forecast_next(m, std::vector{3.0, 4.0, 7.5}, false, 5), 7.5);
  EXPECT_NEAR(forecast_next(m, std::vector{300.0, 400.0, 750.0}, true, 5), 750.0, 1e-9);
}

TEST(Forecast, SeedMattersOnlyWithDraws) {
  const auto window = testing::price_path(9, 31);
  const auto ar = make_model({3, 1, 0}, {0.2, -0.1, 0.05}, {}, 0.001, 0.002);
  EXPECT_FALSE(forecast_needs_draws(ar, window.size()));
  EXPECT_EQ(forecast_next(ar, window, true, 1), forecast_next(ar, window, true, 2));

  const auto long_ar = make_model({9, 1, 0}, std::vector<double>(9, 0.05), {}, 0.0, 0.002);
  EXPECT_TRUE(forecast_needs_draws(long_ar, window.size()));
  EXPECT_NE(forecast_next(long_ar, window, true, 1), forecast_next(long_ar, window, true, 2));

  const auto ma = make_model({1, 1, 1}, {0.2}, {0.4}, 0.0, 0.002);
  EXPECT_TRUE(forecast_needs_draws(ma, window.size()));
  EXPECT_NE(forecast_next(ma, window, true, 1), forecast_next(ma, window, true, 2));
  EXPECT_EQ(forecast_next(ma, window, true, 7), forecast_next(ma, window, true, 7));
}

TEST(Forecast, MatchesHandTracedRecursion) {
  // ARIMA(2,1,1), log off, window of five prices: four differenced values.
  // The recursion conditions on z0, z1 and starts at t = 2 with e1 drawn.
  const auto m = make_model({2, 1, 1}, {0.4, -0.2}, {0.3}, 0.05, 0.25);
  const std::vector<double> w{10.0, 10.6, 10.2, 10.9, 11.3};
  const std::uint64_t seed = 2024;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 0.5);
  const double e1 = noise(rng);
  const double z0 = 0.6;
  const double z1 = 10.2 - 10.6;
  const double z2 = 10.9 - 10.2;
  const double z3 = 11.3 - 10.9;
  const double e2 = z2 - 0.05 - 0.4 * z1 + 0.2 * z0 - 0.3 * e1;
  const double e3 = z3 - 0.05 - 0.4 * z2 + 0.2 * z1 - 0.3 * e2;
  const double next = 0.05 + 0.4 * z3 - 0.2 * z2 + 0.3 * e3;
  EXPECT_NEAR(forecast_next(m, w, false, seed), 11.3 + next, 1e-12);
}

TEST(Forecast, ShortWindowDrawsArLagsThenResiduals) {
  // ARIMA(3,0,1) on two values: x_{-1} is drawn, then the residual e_1.
  const auto m = make_model({3, 0, 1}, {0.5, 0.2, 0.1}, {0.4}, 1.0, 0.04);
  const std::vector<double> w{2.0, 3.0};
  std::mt19937_64 rng(77);
  std::normal_distribution<double> noise(0.0, 0.2);
  const double x_m1 = noise(rng);
  const double e1 = noise(rng);
  const double next = 1.0 + 0.5 * 3.0 + 0.2 * 2.0 + 0.1 * x_m1 + 0.4 * e1;
  EXPECT_NEAR(forecast_next(m, w, false, 77), next, 1e-12);
}

TEST(Forecast, FittedConstantLevelReproducesLevel) {
  // A model that fits a flat series exactly must also forecast it exactly,
  // whatever its orders.
  const std::vector<double> flat(60, 6.0);
  for (ArimaOrder o : {ArimaOrder{3, 0, 2}, ArimaOrder{9, 0, 8}, ArimaOrder{2, 1, 2}}) {
    FitConfig cfg;
    cfg.max_iterations = 150;
    const auto model = fit(o, flat, cfg);
    const std::span<const double> window(flat.data(), 9);
    EXPECT_NEAR(forecast_next(model, window, false, 3), 6.0, 1e-9) << o.p << o.d << o.q;
  }
}

TEST(Forecast, RepresentationInvariance) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto window = testing::price_path(12, seed);
    const auto logged = log_values(window);
    for (const auto& m :
         {make_model({2, 1, 1}, {0.3, 0.1}, {-0.2}, 0.001, 0.001),
          make_model({1, 2, 0}, {-0.4}, {}, 0.0, 0.004),
          make_model({0, 0, 2}, {}, {0.5, 0.2}, std::log(window[0]), 0.01)}) {
      const double via_prices = forecast_next(m, window, true, seed * 3);
      const double via_logs = std::exp(forecast_next(m, logged, false, seed * 3));
      EXPECT_LE(std::abs(via_prices - via_logs) / via_logs, 1e-9);
    }
  }
}

TEST(Forecast, WindowTooShort) {
  const auto m = make_model({0, 2, 0}, {}, {}, 0.0);
  EXPECT_THROW((void)forecast_next(m, std::vector{1.0, 2.0}, false, 1), WindowTooShort);
  EXPECT_NO_THROW((void)forecast_next(m, std::vector{1.0, 2.0, 4.0}, false, 1));
}

// --- backtest ----------------------------------------------------------------

TEST(Backtest, ConstantPriceGivesZeroError) {
  const std::vector<double> prices(40, 250.0);
  const auto m = make_model({0, 0, 0}, {}, {}, std::log(250.0), 0.0);
  const std::vector<std::size_t> starts{0, 5, 30};
  EXPECT_NEAR(mse_of_model(m, prices, starts, 9, 40, 1), 0.0, 1e-18);
}

TEST(Backtest, DeterministicModelMatchesClosedForm) {
  // AR(1) on log returns with every lag inside the window.
  const auto prices = testing::price_path(60, 14);
  const auto m = make_model({1, 1, 0}, {0.25}, {}, 0.002, 0.0009);
  const std::vector<std::size_t> starts{3, 17, 42};
  const std::size_t w = 5;
  double want = 0.0;
  for (std::size_t s : starts) {
    const double r_last = std::log(prices[s + w - 1]) - std::log(prices[s + w - 2]);
    const double pred = std::exp(std::log(prices[s + w - 1]) + 0.002 + 0.25 * r_last);
    want += std::pow(pred - prices[s + w], 2);
  }
  want /= 3.0;
  EXPECT_NEAR(mse_of_model(m, prices, starts, w, 7, 99), want, 1e-9 * want);
}

TEST(Backtest, StochasticModelMatchesBruteForce) {
  const auto prices = testing::price_path(60, 15);
  const auto m = make_model({1, 1, 2}, {0.1}, {0.3, -0.1}, 0.0, 0.0016);
  const std::vector<std::size_t> starts{0, 20, 50};
  const std::size_t w = 6;
  const int reps = 5;
  const std::uint64_t seed = 321;
  double total = 0.0;
  for (std::size_t s : starts) {
    const std::span<const double> window(prices.data() + s, w);
    for (int r = 0; r < reps; ++r) {
      const double pred =
          forecast_next(m, window, true, derive_seed(seed, s, static_cast<std::uint64_t>(r)));
      total += std::pow(pred - prices[s + w], 2);
    }
  }
  const auto res = backtest(m, prices, starts, w, reps, seed);
  EXPECT_NEAR(res.mse, total / (3.0 * reps), 1e-12 * res.mse);
  ASSERT_EQ(res.window_mse.size(), 3U);
}

TEST(Backtest, RepsIrrelevantWithoutDraws) {
  const auto prices = testing::price_path(200, 16);
  const auto m = fit({2, 1, 0}, log_values(prices));
  const std::vector<std::size_t> starts{1, 50, 100, 150, 180};
  EXPECT_EQ(mse_of_model(m, prices, starts, 9, 1, 5), mse_of_model(m, prices, starts, 9, 40, 5));
}

TEST(Backtest, RejectsWindowsWithoutTarget) {
  const std::vector<double> prices(20, 5.0);
  const auto m = make_model({0, 0, 0}, {}, {}, std::log(5.0));
  const std::vector<std::size_t> starts{11};
  EXPECT_THROW((void)mse_of_model(m, prices, starts, 9, 1, 1), SeriesTooShort);
  EXPECT_THROW((void)mse_of_model(m, prices, std::vector<std::size_t>{0}, 9, 0, 1), InvalidConfig);
}

} // namespace
} // namespace btcarima
