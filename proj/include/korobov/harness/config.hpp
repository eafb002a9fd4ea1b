#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "korobov/weights.hpp"

namespace korobov::harness {

enum class Mode { Complexity, Spectrum, Classify, Criterion, Approx, ExponentFit };

std::string_view mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

/// Invalid experiment configuration. `line` is 0 when the problem is a missing key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string source, std::size_t line, const std::string& message);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// Parsed experiment file.
///
///     [space]
///     alpha  = 2
///     family = poly        # const | poly | geom | finite | explicit
///     c = 1
///     a = 3
///     [grids]
///     eps_grid   = 0.25, 0.125
///     s_grid     = 1, 2, 50
///     tau_grid   = 1.5
///     sigma_grid = 0.5, 2
///     [run]
///     mode    = complexity
///     outputs = out
///
/// `values` (comma list) replaces c/a/q for the finite and explicit families.
/// [run] also accepts n (spectrum/approx), input (approx CSV), threads and memoize.
struct ExperimentConfig {
  SpaceSpec spec{2.0, WeightSequence::constant(1.0)};
  std::vector<double> eps_grid;
  std::vector<std::uint64_t> s_grid;
  std::vector<double> tau_grid;
  std::vector<double> sigma_grid;
  std::filesystem::path outputs = ".";
  std::optional<Mode> mode;
  std::optional<std::size_t> n;
  std::optional<std::filesystem::path> input;
  std::optional<unsigned> threads;
  bool memoize = false;
  /// Line on which each key was set, for error messages.
  std::map<std::string, std::size_t> lines;
};

ExperimentConfig parse_config(std::string_view text, const std::string& source = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Throws ConfigError when the grids needed by `mode` are missing or out of range.
void validate_for_mode(const ExperimentConfig& config, Mode mode, const std::string& source);

}  // namespace korobov::harness
