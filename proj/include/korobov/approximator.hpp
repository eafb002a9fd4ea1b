#pragma once

#include <complex>
#include <cstddef>
#include <map>

#include "korobov/spectrum.hpp"
#include "korobov/weights.hpp"

namespace korobov {

/// Finitely supported Fourier data: f = sum_k c_k exp(2 pi i k.x).
class FourierPolynomial {
 public:
  using Coefficients = std::map<FreqIndex, std::complex<double>>;

  explicit FourierPolynomial(std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  const Coefficients& coefficients() const noexcept { return coefficients_; }

  /// Sets f^(k); throws DomainError when k has the wrong length.
  void set(const FreqIndex& k, std::complex<double> value);
  /// f^(k), zero for unlisted indices.
  std::complex<double> at(const FreqIndex& k) const;

  bool operator==(const FourierPolynomial&) const = default;

 private:
  std::size_t dimension_;
  Coefficients coefficients_;
};

/// Output of the optimal Lambda^all algorithm with n information functionals.
struct Approximant {
  TopSpectrum retained;
  FourierPolynomial result;
};

/// sqrt(sum_k |f^(k)|^2 / r(k)); NotInSpaceError if a nonzero coefficient sits where r(k) = 0.
double korobov_norm(const SpaceSpec& spec, const FourierPolynomial& f);

/// Keeps f^(k) on the n indices with the largest eigenvalues (spectrum_before order).
Approximant truncate(const SpaceSpec& spec, const FourierPolynomial& f, std::size_t n);

/// ||f - A(f)||_{L2} by Parseval: the norm of the dropped coefficients.
double l2_error(const FourierPolynomial& f, const Approximant& a);

}  // namespace korobov
