#include "korobov/tractability.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "korobov/errors.hpp"
#include "korobov/zeta.hpp"

namespace korobov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kCriterionTermCap = 200'000'000;
constexpr std::uint64_t kProbePoints[] = {100, 10'000, 1'000'000};

std::string fmt(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 6);
  return std::string(buf, end);
}

TractabilityReport holds(std::string rule, bool ok) {
  return {ok ? Verdict::Holds : Verdict::Fails, std::move(rule), std::nullopt, std::nullopt};
}

// Partial sums sum_{j<=s} gamma_j scaled by `scale(s)` on the fixed probe grid.
template <class Scale>
std::string probe_summary(const WeightSequence& w, const char* label, Scale scale) {
  std::string out;
  for (std::uint64_t s : kProbePoints) {
    if (!out.empty()) out += ';';
    out += std::string(label) + "(s=" + std::to_string(s) + ")=" +
           fmt(w.prefix_sum(s) / scale(static_cast<double>(s)));
  }
  return out;
}

bool growth_below(const PartialSumAsymptotics& g, double sigma) {
  switch (g.growth) {
    case PartialSumGrowth::Bounded:
    case PartialSumGrowth::Logarithmic:
      return true;
    case PartialSumGrowth::Power:
      return g.exponent < sigma;
  }
  return false;
}

TractabilityReport classify_all_class(const SpaceSpec& spec, const TractabilityQuery& q) {
  const auto& w = spec.weights();
  const double s_gamma = w.sum_exponent();
  const double gamma_inf = w.infimum();
  const bool qpt = gamma_inf < 1.0;
  switch (q.notion) {
    case Notion::SPT: {
      auto r = holds("s_gamma < inf", std::isfinite(s_gamma));
      if (r.verdict == Verdict::Holds) r.exponent = 2.0 * std::max(s_gamma, 1.0 / spec.alpha());
      r.evidence = "s_gamma=" + fmt(s_gamma);
      return r;
    }
    case Notion::PT: {
      auto r = holds("s_gamma < inf", std::isfinite(s_gamma));
      r.evidence = "s_gamma=" + fmt(s_gamma);
      return r;
    }
    case Notion::QPT: {
      auto r = holds("gamma_I < 1", qpt);
      if (qpt) r.exponent = qpt_exponent(spec);
      r.evidence = "gamma_I=" + fmt(gamma_inf);
      return r;
    }
    case Notion::UWT:
    case Notion::WT: {
      auto r = holds("gamma_I < 1", qpt);
      r.evidence = "gamma_I=" + fmt(gamma_inf);
      return r;
    }
    case Notion::SigmaTauWT: {
      auto r = holds("gamma_I < 1 (sigma <= 1)", qpt);
      r.evidence = "gamma_I=" + fmt(gamma_inf);
      return r;
    }
  }
  return {};
}

TractabilityReport classify_std_class(const SpaceSpec& spec, const TractabilityQuery& q) {
  const auto& w = spec.weights();
  const auto growth = w.partial_sum_asymptotics();
  auto identity = [](double) { return 1.0; };
  switch (q.notion) {
    case Notion::SPT: {
      auto r = holds("sum_j gamma_j < inf", growth.growth == PartialSumGrowth::Bounded);
      if (r.verdict == Verdict::Holds) {
        r.exponent = 2.0 * std::max(w.sum_exponent(), 1.0 / spec.alpha());
      }
      r.evidence = probe_summary(w, "S", identity);
      return r;
    }
    case Notion::PT:
    case Notion::QPT: {
      auto r = holds("limsup (1/ln s) sum_{j<=s} gamma_j < inf",
                     growth.growth != PartialSumGrowth::Power);
      r.evidence = probe_summary(w, "S/ln(s)", [](double s) { return std::log(s); });
      return r;
    }
    case Notion::UWT: {
      auto r = holds("lim s^-sigma sum_{j<=s} gamma_j = 0 for all sigma in (0;1]",
                     growth.growth != PartialSumGrowth::Power);
      r.evidence = probe_summary(w, "S/s^0.5", [](double s) { return std::sqrt(s); });
      return r;
    }
    case Notion::WT: {
      auto r = holds("lim (1/s) sum_{j<=s} gamma_j = 0", growth_below(growth, 1.0));
      r.evidence = probe_summary(w, "S/s", [](double s) { return s; });
      return r;
    }
    case Notion::SigmaTauWT: {
      auto r = holds("lim s^-sigma sum_{j<=s} gamma_j = 0 (sigma <= 1)",
                     growth_below(growth, q.sigma));
      const double sigma = q.sigma;
      r.evidence = probe_summary(w, ("S/s^" + fmt(sigma)).c_str(),
                                 [sigma](double s) { return std::pow(s, sigma); });
      return r;
    }
  }
  return {};
}

}  // namespace

std::string notion_name(const TractabilityQuery& q) {
  switch (q.notion) {
    case Notion::SPT: return "SPT";
    case Notion::PT: return "PT";
    case Notion::QPT: return "QPT";
    case Notion::UWT: return "UWT";
    case Notion::WT: return "WT";
    case Notion::SigmaTauWT: return "(" + fmt(q.sigma) + ";" + fmt(q.tau) + ")-WT";
  }
  return "?";
}

std::string_view class_name(InfoClass c) { return c == InfoClass::All ? "all" : "std"; }

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Undecidable: return "undecidable";
  }
  return "?";
}

TractabilityReport classify(const SpaceSpec& spec, const TractabilityQuery& query) {
  if (query.notion == Notion::SigmaTauWT) {
    if (!(query.sigma > 0.0 && query.tau > 0.0)) {
      throw DomainError("(sigma,tau)-WT needs sigma > 0 and tau > 0");
    }
    if (query.sigma > 1.0) return holds("sigma > 1: no condition on the weights", true);
  }
  if (!spec.weights().has_asymptotics()) {
    return {Verdict::Undecidable,
            "explicit weight list has no tail information; use a parametric family",
            std::nullopt, std::nullopt};
  }
  return query.info_class == InfoClass::All ? classify_all_class(spec, query)
                                            : classify_std_class(spec, query);
}

std::vector<std::pair<TractabilityQuery, TractabilityReport>> classify_all(
    const SpaceSpec& spec, std::span<const double> sigmas, double tau) {
  std::vector<TractabilityQuery> queries;
  for (InfoClass c : {InfoClass::All, InfoClass::Std}) {
    for (Notion n : {Notion::SPT, Notion::PT, Notion::QPT, Notion::UWT}) {
      queries.push_back({n, c, 1.0, tau});
    }
    for (double sigma : sigmas) queries.push_back({Notion::SigmaTauWT, c, sigma, tau});
    queries.push_back({Notion::WT, c, 1.0, tau});
  }
  std::vector<std::pair<TractabilityQuery, TractabilityReport>> out;
  out.reserve(queries.size());
  for (const auto& q : queries) out.emplace_back(q, classify(spec, q));
  return out;
}

double spt_exponent(const SpaceSpec& spec, InfoClass info_class) {
  const auto report = classify(spec, {Notion::SPT, info_class});
  if (report.verdict != Verdict::Holds) {
    throw PreconditionError("strong polynomial tractability does not hold for class " +
                            std::string(class_name(info_class)) + " (" + report.rule + ")");
  }
  return 2.0 * std::max(spec.weights().sum_exponent(), 1.0 / spec.alpha());
}

double qpt_exponent(const SpaceSpec& spec) {
  if (!spec.weights().has_asymptotics()) {
    throw MissingMetadataError("explicit weight list has no infimum metadata");
  }
  const double gamma_inf = spec.weights().infimum();
  if (!(gamma_inf < 1.0)) {
    throw PreconditionError("quasi-polynomial tractability needs gamma_I < 1");
  }
  const double inv_log = gamma_inf == 0.0 ? 0.0 : 1.0 / std::log(1.0 / gamma_inf);
  return 2.0 * std::max(1.0 / spec.alpha(), inv_log);
}

CriterionValue qpt_criterion_value(const SpaceSpec& spec, std::uint64_t s, double tau) {
  if (s == 0) throw DomainError("criterion needs s >= 1");
  if (!(tau > 1.0 / spec.alpha())) {
    throw DomainError("criterion needs tau > 1/alpha so that zeta(alpha tau (1 + ln s)) converges");
  }
  const double ln_s = std::log(static_cast<double>(s));
  const double power = tau * (1.0 + ln_s);
  const double z = zeta(spec.alpha() * power);
  const auto& w = spec.weights();
  auto term = [&](double g) { return g > 0.0 ? 2.0 * z * std::exp(power * std::log(g)) : 0.0; };

  double log_sum = 0.0;
  if (auto cst = w.constant_value()) {
    log_sum = static_cast<double>(s) * std::log1p(term(*cst));
  } else {
    // Terms are nonincreasing, so (s - j) * term_j bounds what is left.
    for (std::uint64_t j = 1; j <= s; ++j) {
      if (j > kCriterionTermCap) {
        throw ResourceError("criterion sum did not settle within 2e8 terms");
      }
      const double t = term(w.gamma(j));
      if (t == 0.0) break;
      log_sum += std::log1p(t);
      if (static_cast<double>(s - j) * t <= 1e-17 * log_sum) break;
    }
  }
  const double log_value = log_sum / tau - 2.0 * ln_s;
  return {std::exp(log_value), log_value};
}

std::vector<std::uint64_t> geometric_grid(std::uint64_t s_max) {
  if (s_max == 0) throw DomainError("grid needs s_max >= 1");
  std::vector<std::uint64_t> grid;
  for (std::uint64_t s = 1; s < s_max; s *= 2) {
    grid.push_back(s);
    if (s > s_max / 2) break;
  }
  grid.push_back(s_max);
  return grid;
}

CriterionSup qpt_criterion_sup(const SpaceSpec& spec, double tau, std::uint64_t s_max) {
  CriterionSup out;
  double best_log = -kInf;
  for (std::uint64_t s : geometric_grid(s_max)) {
    const auto c = qpt_criterion_value(spec, s, tau);
    out.grid.emplace_back(s, c.value);
    if (c.log_value > best_log) {
      best_log = c.log_value;
      out.sup = c.value;
      out.argmax = s;
    }
  }
  return out;
}

std::vector<std::pair<std::uint64_t, double>> std_condition_probe(
    const WeightSequence& weights, double sigma, std::span<const std::uint64_t> s_grid) {
  if (!(sigma > 0.0 && sigma <= 1.0)) throw DomainError("probe needs sigma in (0,1]");
  std::vector<std::pair<std::uint64_t, double>> out;
  out.reserve(s_grid.size());
  for (std::uint64_t s : s_grid) {
    out.emplace_back(s, weights.prefix_sum(s) / std::pow(static_cast<double>(s), sigma));
  }
  return out;
}

}  // namespace korobov
