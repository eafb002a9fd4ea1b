#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "korobov/spectrum.hpp"
#include "korobov/weights.hpp"

namespace korobov {

using BigInt = boost::multiprecision::cpp_int;

struct CountOptions {
  /// Indices whose log-eigenvalue lies within this distance of 2 ln eps are ties.
  double tie_tolerance = 1e-12;
  /// Reuse subtree counts keyed on (dimension, log threshold rounded to 1e-9).
  /// A subtree is only cached when none of its indices lies within 1e-9 of the
  /// threshold, so reuse cannot move an index across the boundary.
  bool memoize = false;
};

/// |A(eps, s)| = #{k in Z^s : r(k) > eps^2}.
struct ComplexityResult {
  BigInt count;
  /// Indices that were within tie_tolerance of the threshold in log form. Each
  /// was settled by comparing the product r(k) against eps*eps directly.
  BigInt boundary_ties;
  /// 2 ln eps
  double log_threshold = 0.0;
};

/// Exact count by recursion over dimensions s, s-1, ..., 1 with thresholds
/// carried in log form. Throws DomainError unless 0 < eps < 1.
ComplexityResult count_A(const SpaceSpec& spec, std::size_t s, double eps,
                         const CountOptions& options = {});

/// Largest box brute_force_count will scan.
inline constexpr std::uint64_t kBruteForceBoxCap = 1'000'000'000;

/// Exhaustive count over the box |k_j| <= ceil((gamma_j / eps^2)^{1/alpha}).
/// Any index outside the box has some factor <= eps^2, and every other factor
/// is <= 1, so the box contains A(eps, s). Test oracle for count_A; s <= 4.
std::uint64_t brute_force_count(const SpaceSpec& spec, std::size_t s, double eps);

struct ErrorPoint {
  std::size_t n = 0;
  double error = 1.0;
};

/// e(n) = sqrt(lambda_{n+1}) for n = 0..n_max.
struct ErrorCurve {
  std::vector<ErrorPoint> points;
};

ErrorCurve nth_minimal_error(const SpaceSpec& spec, std::size_t s, std::size_t n_max,
                             std::size_t cap = kDefaultSpectrumCap);

/// min{n : e(n) <= eps}, walking the spectrum until lambda_{n+1} <= eps^2.
std::uint64_t info_complexity_via_errors(const SpaceSpec& spec, std::size_t s, double eps,
                                         std::size_t cap = kDefaultSpectrumCap);

enum class KEpsilonCase {
  Found,              // prod_{j<=k} > eps^2 >= prod_{j<=k+1} for some k in 1..s
  AllProductsLarge,   // prod_{j<=s+1} gamma_j > eps^2
  FirstFactorSmall,   // gamma_1 <= eps^2
};

struct KEpsilon {
  std::size_t k = 0;
  KEpsilonCase kind = KEpsilonCase::Found;
};

/// k(eps, s, gamma): the k in {1..s} where the cumulative weight product drops
/// to eps^2 or below at k+1; s when no such k exists (both KEpsilonCase
/// fallbacks return s). Uses gamma_{s+1}.
KEpsilon k_epsilon(const WeightSequence& weights, std::size_t s, double eps);

}  // namespace korobov
