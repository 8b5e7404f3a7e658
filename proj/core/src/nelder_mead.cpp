#include "btcarima/nelder_mead.hpp"

#include "btcarima/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace btcarima {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

} // namespace

NelderMeadResult nelder_mead(const Objective& objective, std::vector<double> start,
                             std::span<const double> steps, const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  if (steps.size() != n) {
    throw InvalidConfig("simplex step count does not match dimension");
  }
  if (options.max_iterations <= 0 || !(options.tolerance > 0.0)) {
    throw InvalidConfig("Nelder-Mead needs max_iterations > 0 and tolerance > 0");
  }

  NelderMeadResult result;
  auto eval = [&](std::span<const double> x) {
    ++result.evaluations;
    const double v = objective(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  if (n == 0) {
    result.value = eval(start);
    result.x = std::move(start);
    result.converged = true;
    return result;
  }

  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) {
    simplex[i + 1][i] += steps[i];
  }
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    values[i] = eval(simplex[i]);
  }

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n);
  std::vector<double> reflected(n);
  std::vector<double> trial(n);

  auto along = [&](double coef, const std::vector<double>& worst, std::vector<double>& out) {
    for (std::size_t j = 0; j < n; ++j) {
      out[j] = centroid[j] + coef * (centroid[j] - worst[j]);
    }
  };

  for (;;) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];

    if (!std::isfinite(values[best])) {
      break;  // every vertex infeasible; nothing to move towards
    }
    const double spread = values[worst] - values[best];
    if (spread <= options.tolerance * std::abs(values[best])) {
      result.converged = true;
      break;
    }
    if (result.iterations >= options.max_iterations) {
      break;
    }
    ++result.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        centroid[j] += simplex[i][j];
      }
    }
    for (double& c : centroid) {
      c /= static_cast<double>(n);
    }

    along(kReflect, simplex[worst], reflected);
    const double f_reflected = eval(reflected);

    if (f_reflected < values[best]) {
      along(kExpand, simplex[worst], trial);
      const double f_expanded = eval(trial);
      if (f_expanded < f_reflected) {
        simplex[worst] = trial;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }

    // Contraction, outside when the reflection improved on the worst vertex.
    const bool outside = f_reflected < values[worst];
    along(outside ? kContract : -kContract, simplex[worst], trial);
    const double f_contracted = eval(trial);
    if (outside ? f_contracted <= f_reflected : f_contracted < values[worst]) {
      simplex[worst] = trial;
      values[worst] = f_contracted;
      continue;
    }

    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        simplex[i][j] = simplex[best][j] + kShrink * (simplex[i][j] - simplex[best][j]);
      }
      values[i] = eval(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto best = static_cast<std::size_t>(best_it - values.begin());
  result.x = simplex[best];
  result.value = values[best];
  return result;
}

} // namespace btcarima
