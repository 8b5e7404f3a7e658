#pragma once

#include <functional>
#include <span>
#include <vector>

namespace btcarima {

struct NelderMeadOptions {
  int max_iterations = 1000;
  /// Stop once (worst - best) vertex value <= tolerance * |best|.
  double tolerance = 1e-10;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free simplex minimisation (standard reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2). The initial simplex is `start` plus one
/// vertex per coordinate displaced by `steps[i]`. Non-finite objective values
/// are treated as +infinity, so the result value is infinite only if every
/// probe was.
[[nodiscard]] NelderMeadResult nelder_mead(const Objective& objective, std::vector<double> start,
                                           std::span<const double> steps,
                                           const NelderMeadOptions& options);

} // namespace btcarima
