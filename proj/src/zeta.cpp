#include "korobov/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "korobov/errors.hpp"

namespace korobov {

namespace {

constexpr double kTailTarget = 1e-15;

// Magnitude of the first Euler-Maclaurin correction left out (B_8 / 8! term).
double omitted_term(double x, double n) {
  double rising = 1.0;
  for (int i = 0; i < 7; ++i) rising *= x + i;
  return rising / 1209600.0 * std::exp(-(x + 7.0) * std::log(n));
}

double start_index(double x) {
  double n = 10.0;
  while (omitted_term(x, n) > kTailTarget) n *= 2.0;
  return n;
}

// sum_{k >= n} k^{-x}
double euler_maclaurin_tail(double x, double n) {
  const double ln_n = std::log(n);
  const double n_pow = std::exp(-x * ln_n);  // n^{-x}
  const double inv_n2 = 1.0 / (n * n);
  double tail = n * n_pow / (x - 1.0) + 0.5 * n_pow;
  double deriv = x * n_pow / n;  // x n^{-x-1}
  tail += deriv / 12.0;
  deriv *= (x + 1.0) * (x + 2.0) * inv_n2;
  tail -= deriv / 720.0;
  deriv *= (x + 3.0) * (x + 4.0) * inv_n2;
  tail += deriv / 30240.0;
  return tail;
}

double power_sum(double x, std::uint64_t from, std::uint64_t to) {
  double sum = 0.0;
  for (std::uint64_t k = to; k >= from && k > 0; --k) {
    sum += std::exp(-x * std::log(static_cast<double>(k)));
  }
  return sum;
}

void check_domain(double x) {
  if (!(x > 1.0) || std::isnan(x)) {
    throw DomainError("zeta(x) requires x > 1, got " + std::to_string(x));
  }
}

}  // namespace

double zeta(double x) {
  check_domain(x);
  if (std::isinf(x)) return 1.0;
  const double n = start_index(x);
  return power_sum(x, 1, static_cast<std::uint64_t>(n) - 1) + euler_maclaurin_tail(x, n);
}

double zeta_tail(double x, std::uint64_t k) {
  check_domain(x);
  if (std::isinf(x)) return 0.0;
  const double n = std::max(start_index(x), static_cast<double>(k) + 1.0);
  return power_sum(x, k + 1, static_cast<std::uint64_t>(n) - 1) + euler_maclaurin_tail(x, n);
}

}  // namespace korobov
