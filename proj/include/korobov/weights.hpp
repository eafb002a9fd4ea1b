#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace korobov {

enum class WeightFamily { Constant, PolynomialDecay, Geometric, FiniteSupport, Explicit };

/// Canonical config name of a family: const, poly, geom, finite, explicit.
std::string_view family_name(WeightFamily family);
std::optional<WeightFamily> parse_family(std::string_view name);

/// Growth class of the partial sums S(s) = sum_{j<=s} gamma_j as s -> infinity.
enum class PartialSumGrowth {
  Bounded,      // S(s) -> finite limit
  Logarithmic,  // S(s) ~ coefficient * ln s
  Power,        // S(s) ~ coefficient * s^exponent, exponent in (0, 1]
};

struct PartialSumAsymptotics {
  PartialSumGrowth growth = PartialSumGrowth::Bounded;
  double exponent = 0.0;
  double coefficient = 0.0;
};

/// Nonincreasing product weights 1 >= gamma_1 >= gamma_2 >= ... >= 0.
///
/// Weights are a closed set of parametric families so that asymptotic
/// quantities (sum exponent, infimum, partial-sum growth) are known exactly.
/// Explicit sequences are finite lists and carry no asymptotics; querying
/// past their length throws OutOfRangeError.
///
/// Indices are 1-based throughout, matching gamma_1, gamma_2, ...
class WeightSequence {
 public:
  /// gamma_j = c
  static WeightSequence constant(double c);
  /// gamma_j = c * j^{-a}
  static WeightSequence polynomial_decay(double c, double a);
  /// gamma_j = c * q^j
  static WeightSequence geometric(double c, double q);
  /// gamma_j = values[j-1] for j <= values.size(), zero afterwards
  static WeightSequence finite_support(std::vector<double> values);
  /// gamma_j = values[j-1]; undefined beyond the list
  static WeightSequence explicit_values(std::vector<double> values);

  WeightFamily family() const noexcept { return family_; }

  double gamma(std::size_t j) const;
  /// First s weights, gamma_1..gamma_s.
  std::vector<double> first(std::size_t s) const;
  double prefix_sum(std::size_t s) const;
  double infimum() const noexcept;
  /// inf{kappa > 0 : sum_j gamma_j^kappa < infinity}; +infinity when the set is empty.
  double sum_exponent() const;
  PartialSumAsymptotics partial_sum_asymptotics() const;

  /// False for Explicit sequences, whose tail behaviour is unknown.
  bool has_asymptotics() const noexcept { return family_ != WeightFamily::Explicit; }
  /// Set when every gamma_j equals the same value.
  std::optional<double> constant_value() const noexcept;
  /// Number of stored values for finite/explicit families, nullopt for infinite ones.
  std::optional<std::size_t> stored_length() const noexcept;

  double c() const noexcept { return c_; }
  double a() const noexcept { return a_; }
  double q() const noexcept { return q_; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Parameter list without commas, e.g. "c=1;a=2", for CSV output.
  std::string describe_params() const;

 private:
  WeightSequence(WeightFamily family, double c, double a, double q, std::vector<double> values);

  WeightFamily family_;
  double c_ = 0.0;
  double a_ = 0.0;
  double q_ = 0.0;
  std::vector<double> values_;
};

/// Korobov space H_{s,alpha,gamma}: smoothness alpha > 1 plus product weights.
class SpaceSpec {
 public:
  SpaceSpec(double alpha, WeightSequence weights);

  double alpha() const noexcept { return alpha_; }
  const WeightSequence& weights() const noexcept { return weights_; }

 private:
  double alpha_;
  WeightSequence weights_;
};

}  // namespace korobov
