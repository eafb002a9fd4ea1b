#pragma once

#include <cstddef>
#include <exception>
#include <filesystem>
#include <functional>
#include <vector>

#include "korobov/harness/config.hpp"

namespace korobov::harness {

/// Runs fn(i) for i in [0, count) on up to `threads` workers and returns the
/// results in index order. The first exception (by index) is rethrown.
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned threads,
                            const std::function<T(std::size_t)>& fn);

/// Executes one mode over the config's grids and writes its CSV files into
/// out_dir (created if needed). Returns the written paths in a fixed order.
///
///   complexity    complexity.csv
///   spectrum      spectrum_s<S>.csv per s in s_grid
///   classify      classify.csv
///   criterion     criterion.csv
///   approx        approx.csv, approx_summary.csv
///   exponent-fit  fit.csv (one row per s), fit_points.csv
std::vector<std::filesystem::path> run(const ExperimentConfig& config, Mode mode,
                                       const std::filesystem::path& out_dir, unsigned threads);

}  // namespace korobov::harness

#include "korobov/harness/parallel.ipp"
