#include "korobov/harness/fit.hpp"

#include <algorithm>
#include <cmath>

#include "korobov/errors.hpp"

namespace korobov::harness {

ExponentFit fit_exponent(std::span<const std::pair<double, double>> eps_count) {
  if (eps_count.size() < 3) throw DomainError("exponent fit needs at least 3 points");
  const double n = static_cast<double>(eps_count.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [eps, count] : eps_count) {
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("exponent fit needs eps in (0,1)");
    if (!(count >= 1.0)) throw DomainError("exponent fit needs counts >= 1");
    mean_x += std::log(1.0 / eps);
    mean_y += std::log(count);
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& [eps, count] : eps_count) {
    const double dx = std::log(1.0 / eps) - mean_x;
    const double dy = std::log(count) - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw DomainError("exponent fit needs at least two distinct eps values");

  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  fit.points_used = eps_count.size();
  if (syy > 0.0) {
    const double ss_res = syy - fit.slope * sxy;
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  }
  return fit;
}

}  // namespace korobov::harness
