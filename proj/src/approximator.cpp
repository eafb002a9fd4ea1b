#include "korobov/approximator.hpp"

#include <cmath>
#include <set>
#include <string>

#include "korobov/errors.hpp"

namespace korobov {

FourierPolynomial::FourierPolynomial(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw DomainError("Fourier polynomial needs dimension >= 1");
}

void FourierPolynomial::set(const FreqIndex& k, std::complex<double> value) {
  if (k.size() != dimension_) {
    throw DomainError("index of length " + std::to_string(k.size()) + " in a dimension-" +
                      std::to_string(dimension_) + " polynomial");
  }
  if (value == std::complex<double>(0.0, 0.0)) {
    coefficients_.erase(k);
  } else {
    coefficients_[k] = value;
  }
}

std::complex<double> FourierPolynomial::at(const FreqIndex& k) const {
  auto it = coefficients_.find(k);
  return it == coefficients_.end() ? std::complex<double>{} : it->second;
}

double korobov_norm(const SpaceSpec& spec, const FourierPolynomial& f) {
  const auto weights = spec.weights().first(f.dimension());
  double sum = 0.0;
  for (const auto& [k, c] : f.coefficients()) {
    const auto r = r_multivariate(spec.alpha(), weights, k);
    if (r.value == 0.0 && !r.log_domain) {
      throw NotInSpaceError("coefficient at an index with r(k) = 0; f is not in the space");
    }
    // |c|^2 / r computed as exp(log|c|^2 - log r) when r underflowed.
    sum += r.log_domain ? std::exp(std::log(std::norm(c)) - r.log_value) : std::norm(c) / r.value;
  }
  return std::sqrt(sum);
}

Approximant truncate(const SpaceSpec& spec, const FourierPolynomial& f, std::size_t n) {
  Approximant out{top_eigenvalues(spec, f.dimension(), n), FourierPolynomial(f.dimension())};
  for (const auto& entry : out.retained.entries) {
    const auto c = f.at(entry.index);
    if (c != std::complex<double>{}) out.result.set(entry.index, c);
  }
  return out;
}

double l2_error(const FourierPolynomial& f, const Approximant& a) {
  if (f.dimension() != a.result.dimension() || f.dimension() != a.retained.dimension) {
    throw DomainError("l2_error: dimension mismatch between f and the approximant");
  }
  std::set<FreqIndex> kept;
  for (const auto& entry : a.retained.entries) kept.insert(entry.index);
  double sum = 0.0;
  for (const auto& [k, c] : f.coefficients()) {
    if (!kept.contains(k)) sum += std::norm(c);
  }
  return std::sqrt(sum);
}

}  // namespace korobov
