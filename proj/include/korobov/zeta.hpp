#pragma once

#include <cstdint>

namespace korobov {

/// Riemann zeta function for real x > 1, absolute error below 1e-12.
///
/// Partial sum up to N-1 plus an Euler-Maclaurin tail with three Bernoulli
/// corrections; N is the smallest power-of-two multiple of 10 for which the
/// first omitted correction drops under 1e-15. Throws DomainError for x <= 1.
double zeta(double x);

/// sum_{m > k} m^{-x}, the tail of the zeta series after k terms (x > 1).
double zeta_tail(double x, std::uint64_t k);

}  // namespace korobov
