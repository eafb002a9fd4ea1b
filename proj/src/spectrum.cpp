#include "korobov/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

#include "korobov/errors.hpp"
#include "korobov/zeta.hpp"

namespace korobov {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kKernelTermCap = 1e10;

std::uint64_t magnitude(std::int64_t k) {
  return k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
}

// Accumulates prod gamma_j / m_j^alpha over the nonzero coordinates in increasing order.
class ProductAccumulator {
 public:
  explicit ProductAccumulator(double alpha) : alpha_(alpha) {}

  void multiply(double gamma, std::uint64_t m) {
    if (m == 0 || zero_) return;
    if (gamma == 0.0) {
      zero_ = true;
      return;
    }
    const double md = static_cast<double>(m);
    const double factor = gamma / std::pow(md, alpha_);
    log_ += std::log(gamma) - alpha_ * std::log(md);
    if (factor < kUnderflowThreshold) log_domain_ = true;
    value_ *= factor;
    if (value_ < kUnderflowThreshold) log_domain_ = true;
  }

  Eigenvalue result() const {
    if (zero_) return {0.0, kNegInf, false};
    if (log_domain_) return {std::exp(log_), log_, true};
    return {value_, log_, false};
  }

 private:
  double alpha_;
  double value_ = 1.0;
  double log_ = 0.0;
  bool log_domain_ = false;
  bool zero_ = false;
};

// -1, 0, +1 comparison of |a| patterns, last coordinate most significant.
int compare_magnitudes_colex(const FreqIndex& a, const FreqIndex& b) {
  for (std::size_t j = a.size(); j-- > 0;) {
    const auto ma = magnitude(a[j]);
    const auto mb = magnitude(b[j]);
    if (ma != mb) return ma < mb ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool eigen_greater(const Eigenvalue& a, const Eigenvalue& b) noexcept {
  if (!a.log_domain && !b.log_domain) return a.value > b.value;
  return a.log_value > b.log_value;
}

bool exceeds_squared(const Eigenvalue& ev, double eps) noexcept {
  const double eps2 = eps * eps;
  if (!ev.log_domain && eps2 >= kUnderflowThreshold) return ev.value > eps2;
  return ev.log_value > 2.0 * std::log(eps);
}

double r_univariate(double alpha, double gamma, std::int64_t k) {
  if (k == 0) return 1.0;
  return gamma / std::pow(static_cast<double>(magnitude(k)), alpha);
}

Eigenvalue r_multivariate(double alpha, std::span<const double> weights,
                          std::span<const std::int64_t> k) {
  ProductAccumulator acc(alpha);
  for (std::size_t j = 0; j < k.size(); ++j) acc.multiply(weights[j], magnitude(k[j]));
  return acc.result();
}

Eigenvalue r_multivariate(const SpaceSpec& spec, std::span<const std::int64_t> k) {
  const auto weights = spec.weights().first(k.size());
  return r_multivariate(spec.alpha(), weights, k);
}

Trace trace(const SpaceSpec& spec, std::size_t s) {
  if (s == 0) throw DomainError("trace needs s >= 1");
  const double z = zeta(spec.alpha());
  Trace t;
  for (std::size_t j = 1; j <= s; ++j) {
    const double term = 2.0 * spec.weights().gamma(j) * z;
    t.value *= 1.0 + term;
    t.log_value += std::log1p(term);
  }
  return t;
}

bool spectrum_before(const SpectrumEntry& a, const SpectrumEntry& b) {
  const auto ea = a.as_eigenvalue();
  const auto eb = b.as_eigenvalue();
  if (eigen_greater(ea, eb)) return true;
  if (eigen_greater(eb, ea)) return false;
  if (const int c = compare_magnitudes_colex(a.index, b.index); c != 0) return c < 0;
  // Same magnitudes, so zeros coincide; + sorts before -.
  for (std::size_t j = 0; j < a.index.size(); ++j) {
    if (a.index[j] != b.index[j]) return a.index[j] > b.index[j];
  }
  return false;
}

bool SpectrumEnumerator::NodeAfter::operator()(const Node& a, const Node& b) const {
  // priority_queue keeps the maximum on top, so "a after b" means a has lower priority.
  if (eigen_greater(b.key, a.key)) return true;
  if (eigen_greater(a.key, b.key)) return false;
  // Colex on sparse patterns: compare from the highest coordinate down.
  auto ia = a.pattern.rbegin();
  auto ib = b.pattern.rbegin();
  for (; ia != a.pattern.rend() && ib != b.pattern.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
  }
  return ia != a.pattern.rend();
}

SpectrumEnumerator::SpectrumEnumerator(const SpaceSpec& spec, std::size_t s)
    : alpha_(spec.alpha()), weights_(spec.weights().first(s)) {
  if (s == 0) throw DomainError("spectrum enumeration needs s >= 1");
  heap_.push(make_node({}));
}

SpectrumEnumerator::Node SpectrumEnumerator::make_node(Pattern pattern) const {
  ProductAccumulator acc(alpha_);
  for (const auto& [coord, m] : pattern) acc.multiply(weights_[coord], m);
  return Node{acc.result(), std::move(pattern)};
}

void SpectrumEnumerator::push_successors(const Node& node) {
  const auto& p = node.pattern;
  const std::size_t s = weights_.size();
  if (p.empty()) {
    heap_.push(make_node({{0u, 1u}}));
    return;
  }
  const auto [last, m] = p.back();
  {
    Pattern inc = p;
    ++inc.back().second;
    heap_.push(make_node(std::move(inc)));
  }
  if (last + 1 < s) {
    Pattern append = p;
    append.emplace_back(last + 1, 1u);
    heap_.push(make_node(std::move(append)));
    if (m == 1) {
      Pattern shift = p;
      ++shift.back().first;
      heap_.push(make_node(std::move(shift)));
    }
  }
}

SpectrumEntry SpectrumEnumerator::next() {
  if (sign_mask_ == sign_count_) {
    current_ = heap_.top();
    heap_.pop();
    push_successors(current_);
    if (current_.pattern.size() >= 63) {
      throw ResourceError("pattern with " + std::to_string(current_.pattern.size()) +
                          " nonzero coordinates exceeds the sign-expansion limit");
    }
    sign_mask_ = 0;
    sign_count_ = std::uint64_t{1} << current_.pattern.size();
  }
  SpectrumEntry entry;
  entry.index.assign(weights_.size(), 0);
  const std::size_t z = current_.pattern.size();
  for (std::size_t i = 0; i < z; ++i) {
    const auto [coord, m] = current_.pattern[i];
    const bool negative = (sign_mask_ >> (z - 1 - i)) & 1u;
    const auto mk = static_cast<std::int64_t>(m);
    entry.index[coord] = negative ? -mk : mk;
  }
  entry.eigenvalue = current_.key.value;
  entry.log_eigenvalue = current_.key.log_value;
  entry.log_domain = current_.key.log_domain;
  ++sign_mask_;
  ++emitted_;
  return entry;
}

TopSpectrum top_eigenvalues(const SpaceSpec& spec, std::size_t s, std::size_t n, std::size_t cap) {
  if (n == 0) throw DomainError("top_eigenvalues needs n >= 1");
  if (n > cap) {
    throw ResourceError("requested " + std::to_string(n) + " eigenvalues, cap is " +
                        std::to_string(cap));
  }
  SpectrumEnumerator it(spec, s);
  TopSpectrum out;
  out.dimension = s;
  out.entries.reserve(n);
  while (out.entries.size() < n) out.entries.push_back(it.next());
  return out;
}

std::complex<double> kernel_eval(const SpaceSpec& spec, std::span<const double> x,
                                 std::span<const double> y, double tol) {
  if (x.size() != y.size() || x.empty()) {
    throw DomainError("kernel_eval needs two points of the same positive dimension");
  }
  if (!(tol > 0.0)) throw DomainError("kernel_eval needs tol > 0");
  const std::size_t s = x.size();
  const double alpha = spec.alpha();
  const double z = zeta(alpha);
  const auto weights = spec.weights().first(s);
  const double total = trace(spec, s).value;

  // |prod a_j - prod b_j| <= sum_j |a_j - b_j| prod_{i != j} (1 + 2 gamma_i zeta),
  // so each active coordinate gets tol / (active * trace) of absolute slack.
  const auto active = static_cast<double>(
      std::count_if(weights.begin(), weights.end(), [](double g) { return g > 0.0; }));
  const double budget = tol / (std::max(active, 1.0) * total);

  double result = 1.0;
  double work = 0.0;
  for (std::size_t j = 0; j < s; ++j) {
    const double g = weights[j];
    if (g == 0.0) continue;
    double t = x[j] - y[j];
    t -= std::floor(t);
    if (t == 0.0) {
      result *= 1.0 + 2.0 * g * z;
      continue;
    }
    // Tail of 2 g sum_{m>K} cos(m theta) m^-alpha: integral bound, or the
    // Abel-summation bound 2 g K^-alpha / |sin(theta/2)|, whichever is smaller.
    const double sin_half = std::sin(std::numbers::pi * t);
    const double k_int = std::pow(2.0 * g / ((alpha - 1.0) * budget), 1.0 / (alpha - 1.0));
    const double k_abel = std::pow(2.0 * g / (sin_half * budget), 1.0 / alpha);
    const double k = std::ceil(std::min(k_int, k_abel));
    work += k;
    if (work > kKernelTermCap) {
      throw ResourceError("kernel_eval tolerance needs more than 1e10 series terms");
    }
    const double theta = 2.0 * std::numbers::pi * t;
    const auto cut = static_cast<std::uint64_t>(k);
    // cos(m theta) by the three-term recurrence, resynchronised periodically.
    const double two_cos = 2.0 * std::cos(theta);
    double prev = 1.0;
    double cur = std::cos(theta);
    double sum = 0.0;
    double comp = 0.0;
    for (std::uint64_t m = 1; m <= cut; ++m) {
      if ((m & 1023) == 0) {
        prev = std::cos(theta * static_cast<double>(m - 1));
        cur = std::cos(theta * static_cast<double>(m));
      }
      const double term = cur * std::pow(static_cast<double>(m), -alpha);
      const double next_sum = sum + term;
      comp += std::abs(sum) >= std::abs(term) ? (sum - next_sum) + term : (term - next_sum) + sum;
      sum = next_sum;
      const double next = two_cos * cur - prev;
      prev = cur;
      cur = next;
    }
    result *= 1.0 + 2.0 * g * (sum + comp);
  }
  return {result, 0.0};
}

}  // namespace korobov
