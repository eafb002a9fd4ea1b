#include <cmath>
#include <numbers>

#include "doctest.h"
#include "korobov/errors.hpp"
#include "korobov/zeta.hpp"

using korobov::zeta;

TEST_CASE("zeta classical values") {
  const double pi = std::numbers::pi;
  CHECK(std::abs(zeta(2.0) - pi * pi / 6.0) <= 1e-12);
  CHECK(std::abs(zeta(4.0) - std::pow(pi, 4) / 90.0) <= 1e-12);
  // frozen from mpmath.zeta at 30 digits
  CHECK(std::abs(zeta(1.5) - 2.61237534868549) <= 1e-12);
  CHECK(std::abs(zeta(1.01) - 100.577943338497) <= 1e-10);
  CHECK(std::abs(zeta(3.0) - 1.20205690315959) <= 1e-12);
  CHECK(std::abs(zeta(60.0) - 1.0) <= 1e-15);
}

TEST_CASE("zeta against partial sum plus integral tail bounds") {
  // sum_{m<=N} m^-x + int_{N+1}^inf <= zeta(x) <= sum_{m<=N} m^-x + int_N^inf
  for (double x : {1.1, 1.3, 2.0, 2.5, 3.7, 7.0}) {
    const int n = 200000;
    long double partial = 0;
    for (int m = n; m >= 1; --m) partial += std::pow(static_cast<long double>(m), -x);
    const double lo = static_cast<double>(partial) + std::pow(n + 1.0, 1 - x) / (x - 1);
    const double hi = static_cast<double>(partial) + std::pow(double(n), 1 - x) / (x - 1);
    CAPTURE(x);
    CHECK(zeta(x) >= lo - 1e-12);
    CHECK(zeta(x) <= hi + 1e-12);
  }
}

TEST_CASE("zeta bound 1 < zeta(x) <= 1 + 1/(x-1)") {
  for (double x = 1.001; x < 40; x *= 1.07) {
    CAPTURE(x);
    CHECK(zeta(x) > 1.0);
    CHECK(zeta(x) <= 1.0 + 1.0 / (x - 1.0));
  }
}

TEST_CASE("zeta domain") {
  CHECK_THROWS_AS(zeta(1.0), korobov::DomainError);
  CHECK_THROWS_AS(zeta(0.5), korobov::DomainError);
  CHECK_THROWS_AS(zeta(std::nan("")), korobov::DomainError);
}

TEST_CASE("zeta tail") {
  CHECK(korobov::zeta_tail(2.0, 0) == doctest::Approx(zeta(2.0)).epsilon(1e-14));
  long double head = 0;
  for (int m = 1; m <= 50; ++m) head += 1.0L / (static_cast<long double>(m) * m);
  CHECK(korobov::zeta_tail(2.0, 50) == doctest::Approx(zeta(2.0) - static_cast<double>(head)).epsilon(1e-10));
}
