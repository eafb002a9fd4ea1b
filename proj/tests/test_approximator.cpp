#include <cmath>
#include <random>

#include "doctest.h"
#include "korobov/approximator.hpp"
#include "korobov/complexity.hpp"
#include "korobov/errors.hpp"

using namespace korobov;

namespace {

FourierPolynomial single(std::size_t s, FreqIndex k, std::complex<double> v) {
  FourierPolynomial f(s);
  f.set(k, v);
  return f;
}

}  // namespace

TEST_CASE("korobov_norm") {
  const SpaceSpec spec(2, WeightSequence::constant(1));
  CHECK(korobov_norm(spec, single(1, {0}, 1.0)) == 1.0);
  CHECK(korobov_norm(spec, single(1, {2}, 1.0)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(korobov_norm(spec, FourierPolynomial(3)) == 0.0);

  FourierPolynomial f(2);
  f.set({1, 0}, {3, 4});
  f.set({0, -1}, 1.0);
  const SpaceSpec spec2(2, WeightSequence::explicit_values({1, 0.5}));
  CHECK(korobov_norm(spec2, f) == doctest::Approx(std::sqrt(25.0 + 2.0)).epsilon(1e-15));

  const SpaceSpec zero(2, WeightSequence::finite_support({1}));
  CHECK_THROWS_AS(korobov_norm(zero, single(2, {0, 1}, 1.0)), NotInSpaceError);
  CHECK(korobov_norm(zero, single(2, {0, 1}, 0.0)) == 0.0);
}

TEST_CASE("fourier polynomial storage") {
  FourierPolynomial f(2);
  f.set({1, 1}, 2.0);
  CHECK(f.at({1, 1}) == 2.0);
  CHECK(f.at({5, 5}) == 0.0);
  f.set({1, 1}, 0.0);
  CHECK(f.coefficients().empty());
  CHECK_THROWS_AS(f.set({1}, 1.0), DomainError);
}

TEST_CASE("truncate examples") {
  const SpaceSpec spec(2, WeightSequence::explicit_values({1, 0.5}));
  FourierPolynomial f(2);
  f.set({0, 0}, 1.0);
  f.set({1, 0}, 2.0);
  CHECK(truncate(spec, f, 3).result == f);

  f.set({0, 1}, 5.0);
  const auto one = truncate(spec, f, 1);
  CHECK(one.result.coefficients().size() == 1);
  CHECK(one.result.at({0, 0}) == 1.0);
  CHECK(one.retained.entries.size() == 1);

  const auto dropped = truncate(spec, single(2, {0, 1}, 1.0), 3);
  CHECK(dropped.result.coefficients().empty());
  CHECK(dropped.retained.entries.size() == 3);
}

TEST_CASE("l2_error examples") {
  const SpaceSpec spec(2, WeightSequence::constant(1));
  FourierPolynomial f(1);
  f.set({0}, 1.0);
  CHECK(l2_error(f, truncate(spec, f, 1)) == 0.0);
  f.set({5}, 3.0);
  f.set({-7}, {0, 4});
  CHECK(l2_error(f, truncate(spec, f, 3)) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK_THROWS_AS(l2_error(FourierPolynomial(2), truncate(spec, f, 3)), DomainError);
}

TEST_CASE("worst-case witness and upper bound") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0, 1);
  std::normal_distribution<double> gauss;
  const SpaceSpec specs[] = {SpaceSpec(2, WeightSequence::explicit_values({1, 0.5, 0.5})),
                             SpaceSpec(1.5, WeightSequence::polynomial_decay(1, 1)),
                             SpaceSpec(3, WeightSequence::geometric(0.9, 0.6)),
                             SpaceSpec(2.5, WeightSequence::constant(0.4))};
  for (const auto& spec : specs) {
    const std::size_t s = 3;
    const auto curve = nth_minimal_error(spec, s, 60);
    const auto spectrum = top_eigenvalues(spec, s, 61);
    for (std::size_t n = 1; n <= 50; ++n) {
      const auto& next = spectrum.entries[n];
      const auto w = single(s, next.index, std::sqrt(next.eigenvalue));
      CHECK(korobov_norm(spec, w) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(std::abs(l2_error(w, truncate(spec, w, n)) - curve.points[n].error) <= 1e-10);
    }
    std::uniform_int_distribution<int> kd(-4, 4);
    for (int t = 0; t < 30; ++t) {
      FourierPolynomial f(s);
      for (int m = 0; m < 12; ++m) f.set({kd(rng), kd(rng), kd(rng)}, {gauss(rng), gauss(rng)});
      const std::size_t n = 1 + static_cast<std::size_t>(u(rng) * 50);
      const auto a = truncate(spec, f, n);
      CHECK(l2_error(f, a) <= curve.points[n].error * korobov_norm(spec, f) + 1e-10);
      CHECK(truncate(spec, a.result, n).result == a.result);
      if (n < 50) CHECK(l2_error(f, truncate(spec, f, n + 1)) <= l2_error(f, a));
    }
  }
}
