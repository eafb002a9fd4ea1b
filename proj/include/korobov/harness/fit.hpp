#pragma once

#include <cstddef>
#include <span>
#include <utility>

namespace korobov::harness {

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
  std::size_t points_used = 0;
};

/// Least squares of ln(count) on ln(1/eps) over (eps, count) pairs.
///
/// The slope estimates tau in count ~ C eps^{-tau}. Needs at least three
/// points, counts >= 1 and two distinct eps values (DomainError otherwise).
/// Flat data (all ln counts equal) reports r^2 = 1.
ExponentFit fit_exponent(std::span<const std::pair<double, double>> eps_count);

}  // namespace korobov::harness
