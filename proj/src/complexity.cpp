#include "korobov/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <limits>
#include <string>
#include <unordered_map>

#include "korobov/errors.hpp"

namespace korobov {

namespace {

constexpr double kMemoQuantum = 1e-9;
// Beyond this the univariate closed form can no longer resolve single integers.
constexpr double kMaxClosedFormRadius = 1e15;

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw DomainError("eps must lie in (0,1), got " + std::to_string(eps));
  }
}

struct Tally {
  BigInt count;
  BigInt ties;
  bool near_boundary = false;

  Tally& operator+=(const Tally& other) {
    count += other.count;
    ties += other.ties;
    near_boundary = near_boundary || other.near_boundary;
    return *this;
  }
};

Tally doubled(Tally t) {
  t.count *= 2;
  t.ties *= 2;
  return t;
}

// Counts indices k with sum_j ln r_j(k_j) > L over the first `dims` coordinates,
// the remaining coordinates being fixed in path_.
class Counter {
 public:
  Counter(const SpaceSpec& spec, std::size_t s, double eps, const CountOptions& options)
      : alpha_(spec.alpha()),
        eps_(eps),
        tie_tol_(options.tie_tolerance),
        reach_(options.memoize ? std::max(options.tie_tolerance, kMemoQuantum)
                               : options.tie_tolerance),
        memoize_(options.memoize),
        weights_(spec.weights().first(s)),
        path_(s, 0) {
    log_weights_.reserve(s);
    for (double g : weights_) {
      log_weights_.push_back(g > 0.0 ? std::log(g) : -std::numeric_limits<double>::infinity());
    }
  }

  Tally run(double log_threshold) { return count(weights_.size(), log_threshold); }

 private:
  struct Key {
    std::size_t dims;
    long long bucket;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<long long>()(k.bucket) * 31u + k.dims;
    }
  };

  Tally count(std::size_t dims, double threshold) {
    // Every eigenvalue is <= 1, so nothing reaches a positive threshold.
    if (threshold > reach_) return {};
    if (dims == 0 || log_weights_[0] < threshold - reach_) return leaf(threshold);
    if (dims == 1) return univariate(threshold);

    std::optional<Key> key;
    if (memoize_) {
      key = Key{dims, std::llround(threshold / kMemoQuantum)};
      if (auto it = memo_.find(*key); it != memo_.end()) return it->second;
    }

    const std::size_t d = dims - 1;
    Tally total = count(d, threshold);
    const double lg = log_weights_[d];
    if (std::isfinite(lg)) {
      for (std::uint64_t m = 1;; ++m) {
        const double factor = lg - alpha_ * std::log(static_cast<double>(m));
        if (factor < threshold - reach_) break;
        path_[d] = static_cast<std::int64_t>(m);
        total += doubled(count(d, threshold - factor));
      }
      path_[d] = 0;
    }

    if (key && !total.near_boundary) memo_.emplace(*key, total);
    return total;
  }

  // All coordinates below `dims` are zero, so the index is path_ itself.
  Tally leaf(double threshold) { return classify(-threshold); }

  Tally classify(double margin) {
    Tally t;
    t.near_boundary = std::fabs(margin) <= kMemoQuantum;
    if (margin > tie_tol_) {
      t.count = 1;
    } else if (margin >= -tie_tol_) {
      t.ties = 1;
      if (exceeds_squared(r_multivariate(alpha_, weights_, path_), eps_)) t.count = 1;
    }
    return t;
  }

  // Closed form for the last free coordinate: margins alpha (x - ln m) fall with m.
  Tally univariate(double threshold) {
    Tally total = leaf(threshold);
    const double lg = log_weights_[0];
    if (!std::isfinite(lg)) return total;
    const double x = (lg - threshold) / alpha_;
    auto margin = [&](std::uint64_t m) {
      return lg - alpha_ * std::log(static_cast<double>(m)) - threshold;
    };
    const double estimate = std::floor(std::exp(x));
    if (estimate > kMaxClosedFormRadius) {
      throw ResourceError("univariate radius exceeds 1e15; eps too small for this space");
    }
    // strict: largest m with margin > reach (0 if none).
    auto strict = static_cast<std::uint64_t>(std::max(estimate, 0.0));
    while (strict >= 1 && margin(strict) <= reach_) --strict;
    while (margin(strict + 1) > reach_) ++strict;

    Tally band;
    band.count = strict;
    for (std::uint64_t m = strict + 1;; ++m) {
      const double mg = margin(m);
      if (mg < -reach_) break;
      path_[0] = static_cast<std::int64_t>(m);
      band += classify(mg);
    }
    path_[0] = 0;
    total += doubled(std::move(band));
    return total;
  }

  double alpha_;
  double eps_;
  double tie_tol_;
  double reach_;
  bool memoize_;
  std::vector<double> weights_;
  std::vector<double> log_weights_;
  std::vector<std::int64_t> path_;
  std::unordered_map<Key, Tally, KeyHash> memo_;
};

}  // namespace

ComplexityResult count_A(const SpaceSpec& spec, std::size_t s, double eps,
                         const CountOptions& options) {
  check_eps(eps);
  if (s == 0) throw DomainError("count_A needs s >= 1");
  const double log_threshold = 2.0 * std::log(eps);
  Counter counter(spec, s, eps, options);
  Tally t = counter.run(log_threshold);
  return {std::move(t.count), std::move(t.ties), log_threshold};
}

std::uint64_t brute_force_count(const SpaceSpec& spec, std::size_t s, double eps) {
  check_eps(eps);
  if (s == 0 || s > 4) throw DomainError("brute_force_count supports 1 <= s <= 4");
  const auto weights = spec.weights().first(s);
  const double eps2 = eps * eps;
  std::vector<std::int64_t> radius(s, 0);
  double box = 1.0;
  for (std::size_t j = 0; j < s; ++j) {
    if (weights[j] > 0.0) {
      radius[j] = static_cast<std::int64_t>(std::ceil(std::pow(weights[j] / eps2, 1.0 / spec.alpha())));
    }
    box *= 2.0 * static_cast<double>(radius[j]) + 1.0;
  }
  if (box > static_cast<double>(kBruteForceBoxCap)) {
    throw ResourceError("brute-force box has " + std::to_string(box) + " points, cap is 1e9");
  }

  std::vector<std::int64_t> k(s);
  for (std::size_t j = 0; j < s; ++j) k[j] = -radius[j];
  std::uint64_t count = 0;
  while (true) {
    if (exceeds_squared(r_multivariate(spec.alpha(), weights, k), eps)) ++count;
    std::size_t j = 0;
    while (j < s && k[j] == radius[j]) {
      k[j] = -radius[j];
      ++j;
    }
    if (j == s) break;
    ++k[j];
  }
  return count;
}

ErrorCurve nth_minimal_error(const SpaceSpec& spec, std::size_t s, std::size_t n_max,
                             std::size_t cap) {
  const auto top = top_eigenvalues(spec, s, n_max + 1, cap);
  ErrorCurve curve;
  curve.points.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    curve.points.push_back({n, std::sqrt(top.entries[n].eigenvalue)});
  }
  return curve;
}

std::uint64_t info_complexity_via_errors(const SpaceSpec& spec, std::size_t s, double eps,
                                         std::size_t cap) {
  check_eps(eps);
  SpectrumEnumerator it(spec, s);
  std::uint64_t n = 0;
  while (true) {
    if (n >= cap) {
      throw ResourceError("information complexity exceeds the spectrum cap of " +
                          std::to_string(cap));
    }
    const auto entry = it.next();
    // e(n) = sqrt(lambda_{n+1}) <= eps
    if (!exceeds_squared(entry.as_eigenvalue(), eps)) return n;
    ++n;
  }
}

KEpsilon k_epsilon(const WeightSequence& weights, std::size_t s, double eps) {
  check_eps(eps);
  if (s == 0) throw DomainError("k_epsilon needs s >= 1");
  const double threshold = 2.0 * std::log(eps);
  double log_product = 0.0;
  std::size_t large = 0;  // number of leading prefixes with product > eps^2
  for (std::size_t j = 1; j <= s + 1; ++j) {
    const double g = weights.gamma(j);
    log_product += g > 0.0 ? std::log(g) : -std::numeric_limits<double>::infinity();
    if (!(log_product > threshold)) break;
    large = j;
  }
  if (large == 0) return {s, KEpsilonCase::FirstFactorSmall};
  if (large == s + 1) return {s, KEpsilonCase::AllProductsLarge};
  return {large, KEpsilonCase::Found};
}

}  // namespace korobov
