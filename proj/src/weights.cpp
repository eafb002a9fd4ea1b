#include "korobov/weights.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "korobov/errors.hpp"
#include "korobov/zeta.hpp"

namespace korobov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this many terms power sums are accumulated directly.
constexpr std::size_t kDirectSumLimit = 100000;
// Head of the Euler-Maclaurin split for long power sums.
constexpr std::size_t kEulerMaclaurinHead = 1000;

bool in_unit_interval(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("invalid weight sequence: " + what);
}

void validate_list(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(in_unit_interval(values[i]), "gamma_" + std::to_string(i + 1) + " not in [0,1]");
    if (i > 0) {
      require(values[i] <= values[i - 1],
              "weights must be nonincreasing (gamma_" + std::to_string(i + 1) + " > gamma_" +
                  std::to_string(i) + ")");
    }
  }
}

// Neumaier-compensated sum of j^{-a} for j = first..last, smallest terms first.
double direct_power_sum(std::size_t first, std::size_t last, double a) {
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t j = last; j >= first; --j) {
    const double term = std::pow(static_cast<double>(j), -a);
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
    if (j == first) break;
  }
  return sum + comp;
}

// sum_{j=n}^{s} j^{-a} by Euler-Maclaurin with three Bernoulli corrections.
double euler_maclaurin_power_sum(double n, double s, double a) {
  const double one_minus_a = 1.0 - a;
  double integral;
  if (std::fabs(one_minus_a) < 1e-12) {
    integral = std::log(s / n);
  } else {
    integral = std::pow(n, one_minus_a) * std::expm1(one_minus_a * std::log(s / n)) / one_minus_a;
  }
  auto f = [a](double x) { return std::pow(x, -a); };
  // Odd derivatives of x^{-a}.
  auto d1 = [a](double x) { return -a * std::pow(x, -a - 1.0); };
  auto d3 = [a](double x) { return -a * (a + 1.0) * (a + 2.0) * std::pow(x, -a - 3.0); };
  auto d5 = [a](double x) {
    return -a * (a + 1.0) * (a + 2.0) * (a + 3.0) * (a + 4.0) * std::pow(x, -a - 5.0);
  };
  return integral + 0.5 * (f(n) + f(s)) + (d1(s) - d1(n)) / 12.0 - (d3(s) - d3(n)) / 720.0 +
         (d5(s) - d5(n)) / 30240.0;
}

std::string shortest(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

}  // namespace

std::string_view family_name(WeightFamily family) {
  switch (family) {
    case WeightFamily::Constant: return "const";
    case WeightFamily::PolynomialDecay: return "poly";
    case WeightFamily::Geometric: return "geom";
    case WeightFamily::FiniteSupport: return "finite";
    case WeightFamily::Explicit: return "explicit";
  }
  return "unknown";
}

std::optional<WeightFamily> parse_family(std::string_view name) {
  if (name == "const") return WeightFamily::Constant;
  if (name == "poly") return WeightFamily::PolynomialDecay;
  if (name == "geom") return WeightFamily::Geometric;
  if (name == "finite") return WeightFamily::FiniteSupport;
  if (name == "explicit") return WeightFamily::Explicit;
  return std::nullopt;
}

WeightSequence::WeightSequence(WeightFamily family, double c, double a, double q,
                               std::vector<double> values)
    : family_(family), c_(c), a_(a), q_(q), values_(std::move(values)) {}

WeightSequence WeightSequence::constant(double c) {
  require(in_unit_interval(c), "constant c must lie in [0,1]");
  return WeightSequence(WeightFamily::Constant, c, 0.0, 1.0, {});
}

WeightSequence WeightSequence::polynomial_decay(double c, double a) {
  require(in_unit_interval(c), "poly c must lie in [0,1]");
  require(std::isfinite(a) && a >= 0.0, "poly exponent a must be finite and >= 0");
  return WeightSequence(WeightFamily::PolynomialDecay, c, a, 1.0, {});
}

WeightSequence WeightSequence::geometric(double c, double q) {
  require(in_unit_interval(c), "geom c must lie in [0,1]");
  require(in_unit_interval(q), "geom ratio q must lie in [0,1]");
  return WeightSequence(WeightFamily::Geometric, c, 0.0, q, {});
}

WeightSequence WeightSequence::finite_support(std::vector<double> values) {
  validate_list(values);
  return WeightSequence(WeightFamily::FiniteSupport, 0.0, 0.0, 1.0, std::move(values));
}

WeightSequence WeightSequence::explicit_values(std::vector<double> values) {
  require(!values.empty(), "explicit weight list must not be empty");
  validate_list(values);
  return WeightSequence(WeightFamily::Explicit, 0.0, 0.0, 1.0, std::move(values));
}

double WeightSequence::gamma(std::size_t j) const {
  if (j == 0) throw DomainError("weight index is 1-based, got j = 0");
  switch (family_) {
    case WeightFamily::Constant:
      return c_;
    case WeightFamily::PolynomialDecay:
      return c_ * std::pow(static_cast<double>(j), -a_);
    case WeightFamily::Geometric:
      return c_ * std::pow(q_, static_cast<double>(j));
    case WeightFamily::FiniteSupport:
      return j <= values_.size() ? values_[j - 1] : 0.0;
    case WeightFamily::Explicit:
      if (j > values_.size()) {
        throw OutOfRangeError("explicit weight sequence has " + std::to_string(values_.size()) +
                              " entries, gamma_" + std::to_string(j) + " requested");
      }
      return values_[j - 1];
  }
  return 0.0;
}

std::vector<double> WeightSequence::first(std::size_t s) const {
  std::vector<double> out;
  out.reserve(s);
  for (std::size_t j = 1; j <= s; ++j) out.push_back(gamma(j));
  return out;
}

double WeightSequence::prefix_sum(std::size_t s) const {
  if (s == 0) throw DomainError("prefix_sum needs s >= 1");
  const double sd = static_cast<double>(s);
  switch (family_) {
    case WeightFamily::Constant:
      return c_ * sd;
    case WeightFamily::Geometric:
      if (q_ == 1.0) return c_ * sd;
      if (q_ == 0.0) return 0.0;
      return c_ * q_ * -std::expm1(sd * std::log(q_)) / (1.0 - q_);
    case WeightFamily::PolynomialDecay: {
      if (c_ == 0.0) return 0.0;
      if (a_ == 0.0) return c_ * sd;
      if (s <= kDirectSumLimit) return c_ * direct_power_sum(1, s, a_);
      return c_ * (direct_power_sum(1, kEulerMaclaurinHead - 1, a_) +
                   euler_maclaurin_power_sum(static_cast<double>(kEulerMaclaurinHead), sd, a_));
    }
    case WeightFamily::FiniteSupport:
    case WeightFamily::Explicit: {
      if (family_ == WeightFamily::Explicit && s > values_.size()) gamma(s);  // throws
      double sum = 0.0;
      const std::size_t n = std::min(s, values_.size());
      for (std::size_t j = n; j-- > 0;) sum += values_[j];
      return sum;
    }
  }
  return 0.0;
}

double WeightSequence::infimum() const noexcept {
  switch (family_) {
    case WeightFamily::Constant:
      return c_;
    case WeightFamily::PolynomialDecay:
      return a_ > 0.0 ? 0.0 : c_;
    case WeightFamily::Geometric:
      return q_ < 1.0 ? 0.0 : c_;
    case WeightFamily::FiniteSupport:
      return 0.0;
    case WeightFamily::Explicit:
      return values_.back();
  }
  return 0.0;
}

std::optional<double> WeightSequence::constant_value() const noexcept {
  switch (family_) {
    case WeightFamily::Constant:
      return c_;
    case WeightFamily::PolynomialDecay:
      if (c_ == 0.0 || a_ == 0.0) return c_;
      return std::nullopt;
    case WeightFamily::Geometric:
      if (c_ == 0.0 || q_ == 0.0) return 0.0;
      if (q_ == 1.0) return c_;
      return std::nullopt;
    case WeightFamily::FiniteSupport:
      if (values_.empty() || values_.front() == 0.0) return 0.0;
      return std::nullopt;
    case WeightFamily::Explicit:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::size_t> WeightSequence::stored_length() const noexcept {
  if (family_ == WeightFamily::FiniteSupport || family_ == WeightFamily::Explicit) {
    return values_.size();
  }
  return std::nullopt;
}

double WeightSequence::sum_exponent() const {
  if (!has_asymptotics()) {
    throw MissingMetadataError("explicit weight sequences carry no sum exponent");
  }
  if (auto cst = constant_value()) return *cst > 0.0 ? kInf : 0.0;
  switch (family_) {
    case WeightFamily::PolynomialDecay:
      return 1.0 / a_;
    case WeightFamily::Geometric:
    case WeightFamily::FiniteSupport:
      return 0.0;
    default:
      return kInf;
  }
}

PartialSumAsymptotics WeightSequence::partial_sum_asymptotics() const {
  if (!has_asymptotics()) {
    throw MissingMetadataError("explicit weight sequences carry no partial-sum asymptotics");
  }
  if (auto cst = constant_value()) {
    if (*cst == 0.0) return {PartialSumGrowth::Bounded, 0.0, 0.0};
    return {PartialSumGrowth::Power, 1.0, *cst};
  }
  switch (family_) {
    case WeightFamily::PolynomialDecay:
      if (a_ > 1.0) return {PartialSumGrowth::Bounded, 0.0, c_ * zeta(a_)};
      if (a_ == 1.0) return {PartialSumGrowth::Logarithmic, 0.0, c_};
      return {PartialSumGrowth::Power, 1.0 - a_, c_ / (1.0 - a_)};
    case WeightFamily::Geometric:
      return {PartialSumGrowth::Bounded, 0.0, c_ * q_ / (1.0 - q_)};
    case WeightFamily::FiniteSupport: {
      double sum = 0.0;
      for (double v : values_) sum += v;
      return {PartialSumGrowth::Bounded, 0.0, sum};
    }
    default:
      return {};
  }
}

std::string WeightSequence::describe_params() const {
  switch (family_) {
    case WeightFamily::Constant:
      return "c=" + shortest(c_);
    case WeightFamily::PolynomialDecay:
      return "c=" + shortest(c_) + ";a=" + shortest(a_);
    case WeightFamily::Geometric:
      return "c=" + shortest(c_) + ";q=" + shortest(q_);
    case WeightFamily::FiniteSupport:
    case WeightFamily::Explicit: {
      std::string out = "values=";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ' ';
        out += shortest(values_[i]);
      }
      return out;
    }
  }
  return {};
}

SpaceSpec::SpaceSpec(double alpha, WeightSequence weights)
    : alpha_(alpha), weights_(std::move(weights)) {
  if (!(std::isfinite(alpha) && alpha > 1.0)) {
    throw DomainError("smoothness alpha must be > 1, got " + shortest(alpha));
  }
}

}  // namespace korobov
