#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "korobov/weights.hpp"

namespace korobov {

/// Frequency index k in Z^s.
using FreqIndex = std::vector<std::int64_t>;

/// Largest number of entries top_eigenvalues will produce unless told otherwise.
inline constexpr std::size_t kDefaultSpectrumCap = 100'000'000;

/// Products whose factors or running value fall below this are carried in log form.
inline constexpr double kUnderflowThreshold = 1e-300;

/// Value of r_{s,alpha,gamma}(k) together with its natural log.
///
/// `log_domain` is set when the product underflowed; `value` is then
/// exp(log_value) and only `log_value` is meaningful for ordering.
/// An exactly zero eigenvalue (some gamma_j = 0 with k_j != 0) has
/// value 0 and log_value = -inf with `log_domain` unset.
struct Eigenvalue {
  double value = 1.0;
  double log_value = 0.0;
  bool log_domain = false;
};

/// Strict "a is larger than b", using values when both are representable and logs otherwise.
bool eigen_greater(const Eigenvalue& a, const Eigenvalue& b) noexcept;

/// r(k) > eps^2 with the comparison done on the product itself whenever it did not underflow.
bool exceeds_squared(const Eigenvalue& ev, double eps) noexcept;

double r_univariate(double alpha, double gamma, std::int64_t k);

/// Product of univariate factors over the coordinates of k (dimension = k.size()).
Eigenvalue r_multivariate(const SpaceSpec& spec, std::span<const std::int64_t> k);

/// Same product from precomputed weights gamma_1..gamma_s (weights.size() >= k.size()).
Eigenvalue r_multivariate(double alpha, std::span<const double> weights,
                          std::span<const std::int64_t> k);

struct Trace {
  double value = 1.0;
  double log_value = 0.0;
};

/// trace(W_s) = prod_{j<=s} (1 + 2 gamma_j zeta(alpha)).
Trace trace(const SpaceSpec& spec, std::size_t s);

struct SpectrumEntry {
  FreqIndex index;
  double eigenvalue = 1.0;
  double log_eigenvalue = 0.0;
  bool log_domain = false;

  Eigenvalue as_eigenvalue() const noexcept { return {eigenvalue, log_eigenvalue, log_domain}; }
};

/// Ordering used by every spectrum listing: larger eigenvalue first; among
/// equal eigenvalues the magnitude pattern (|k_1|,...,|k_s|) in
/// colexicographic order (last coordinate most significant), then the sign
/// pattern lexicographically with + before -.
bool spectrum_before(const SpectrumEntry& a, const SpectrumEntry& b);

struct TopSpectrum {
  std::size_t dimension = 0;
  std::vector<SpectrumEntry> entries;
};

/// Lazy best-first enumeration of Z^s in spectrum_before order.
///
/// Heap nodes are magnitude patterns. Every pattern has a unique parent:
/// decrement the last nonzero coordinate if it is >= 2, otherwise drop it
/// (when the coordinate before it is nonzero or it is the first one) or
/// shift it one place left. Each of these moves can only raise the
/// eigenvalue because the weights are nonincreasing, so a pop emits
/// patterns in order while pushing at most three successors. Sign
/// variants of a popped pattern are emitted one per call.
class SpectrumEnumerator {
 public:
  SpectrumEnumerator(const SpaceSpec& spec, std::size_t s);

  SpectrumEntry next();
  std::size_t emitted() const noexcept { return emitted_; }
  std::size_t dimension() const noexcept { return weights_.size(); }

 private:
  // Sparse magnitude pattern: (coordinate, |k|) pairs, coordinates increasing.
  using Pattern = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

  struct Node {
    Eigenvalue key;
    Pattern pattern;
  };
  struct NodeAfter {
    bool operator()(const Node& a, const Node& b) const;
  };

  Node make_node(Pattern pattern) const;
  void push_successors(const Node& node);

  double alpha_;
  std::vector<double> weights_;
  std::priority_queue<Node, std::vector<Node>, NodeAfter> heap_;
  Node current_;
  std::uint64_t sign_mask_ = 0;
  std::uint64_t sign_count_ = 0;
  std::size_t emitted_ = 0;
};

/// The n largest eigenvalues of W_s with their indices; throws ResourceError when n > cap.
TopSpectrum top_eigenvalues(const SpaceSpec& spec, std::size_t s, std::size_t n,
                            std::size_t cap = kDefaultSpectrumCap);

/// Reproducing kernel K_{s,alpha,gamma}(x, y), truncated so the absolute error is at most tol.
///
/// The kernel factorises over coordinates into real cosine series. Each series
/// is cut where the smaller of the integral tail bound and the Abel-summation
/// bound (x_j != y_j) drops below tol / (active coordinates * trace); a
/// coordinate with x_j = y_j uses 1 + 2 gamma_j zeta(alpha) directly.
/// The imaginary part is identically zero.
std::complex<double> kernel_eval(const SpaceSpec& spec, std::span<const double> x,
                                 std::span<const double> y, double tol);

}  // namespace korobov
