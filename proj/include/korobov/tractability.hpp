#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "korobov/weights.hpp"

namespace korobov {

enum class Notion { SPT, PT, QPT, UWT, WT, SigmaTauWT };
enum class InfoClass { All, Std };

struct TractabilityQuery {
  Notion notion = Notion::WT;
  InfoClass info_class = InfoClass::All;
  /// Only used for SigmaTauWT; both must be > 0.
  double sigma = 1.0;
  double tau = 1.0;
};

enum class Verdict { Holds, Fails, Undecidable };

struct TractabilityReport {
  Verdict verdict = Verdict::Undecidable;
  /// Which condition was applied, e.g. "gamma_I < 1".
  std::string rule;
  /// tau* for SPT and t* for QPT under Lambda^all, when the notion holds.
  std::optional<double> exponent;
  /// Numeric probe values backing the analytic verdict, informational only.
  std::optional<std::string> evidence;
};

std::string notion_name(const TractabilityQuery& q);
std::string_view class_name(InfoClass c);
std::string_view verdict_name(Verdict v);

/// Verdict from the exact weight conditions; never from numeric limits.
TractabilityReport classify(const SpaceSpec& spec, const TractabilityQuery& query);

/// All rows of the overview table (SPT, PT, QPT, UWT, (sigma,tau)-WT per sigma, WT) for both classes.
std::vector<std::pair<TractabilityQuery, TractabilityReport>> classify_all(
    const SpaceSpec& spec, std::span<const double> sigmas, double tau = 1.0);

/// 2 max(s_gamma, 1/alpha); PreconditionError when SPT fails for the class.
double spt_exponent(const SpaceSpec& spec, InfoClass info_class);

/// 2 max(1/alpha, 1/ln(1/gamma_I)), with the second term 0 when gamma_I = 0.
/// PreconditionError when gamma_I = 1.
double qpt_exponent(const SpaceSpec& spec);

/// C_s(tau) = s^{-2} (prod_{j<=s} (1 + 2 zeta(alpha tau (1 + ln s)) gamma_j^{tau (1 + ln s)}))^{1/tau}.
struct CriterionValue {
  double value = 0.0;
  double log_value = 0.0;
};

/// Evaluated in log form. Requires tau > 1/alpha (DomainError otherwise).
CriterionValue qpt_criterion_value(const SpaceSpec& spec, std::uint64_t s, double tau);

/// Grid used by qpt_criterion_sup: 1, 2, 4, ... below s_max, then s_max.
std::vector<std::uint64_t> geometric_grid(std::uint64_t s_max);

struct CriterionSup {
  double sup = 0.0;
  std::uint64_t argmax = 1;
  std::vector<std::pair<std::uint64_t, double>> grid;
};

/// max of C_s(tau) over geometric_grid(s_max); a finite stand-in for sup over all s.
CriterionSup qpt_criterion_sup(const SpaceSpec& spec, double tau, std::uint64_t s_max);

/// (1/s^sigma) sum_{j<=s} gamma_j on each grid point; sigma in (0,1].
std::vector<std::pair<std::uint64_t, double>> std_condition_probe(
    const WeightSequence& weights, double sigma, std::span<const std::uint64_t> s_grid);

}  // namespace korobov
