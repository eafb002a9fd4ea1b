#include "korobov/harness/runner.hpp"

#include <fstream>
#include <stdexcept>

#include "korobov/approximator.hpp"
#include "korobov/complexity.hpp"
#include "korobov/harness/csv.hpp"
#include "korobov/harness/fit.hpp"
#include "korobov/spectrum.hpp"
#include "korobov/tractability.hpp"

namespace korobov::harness {

namespace {

namespace fs = std::filesystem;

fs::path write_file(const fs::path& dir, const std::string& name, const CsvTable& table) {
  const auto path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_csv(out, table);
  return path;
}

struct Cell {
  std::uint64_t s;
  double eps;
};

std::vector<Cell> cells(const ExperimentConfig& cfg) {
  std::vector<Cell> out;
  for (auto s : cfg.s_grid) {
    for (double eps : cfg.eps_grid) out.push_back({s, eps});
  }
  return out;
}

std::vector<ComplexityResult> count_cells(const ExperimentConfig& cfg,
                                          const std::vector<Cell>& grid, unsigned threads) {
  CountOptions options;
  options.memoize = cfg.memoize;
  return parallel_map<ComplexityResult>(grid.size(), threads, [&](std::size_t i) {
    return count_A(cfg.spec, grid[i].s, grid[i].eps, options);
  });
}

std::vector<fs::path> run_complexity(const ExperimentConfig& cfg, const fs::path& dir,
                                     unsigned threads) {
  const auto grid = cells(cfg);
  auto results = count_cells(cfg, grid, threads);
  std::vector<ComplexityRow> rows;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    rows.push_back({cfg.spec.alpha(), std::string(family_name(cfg.spec.weights().family())),
                    cfg.spec.weights().describe_params(), grid[i].s, grid[i].eps,
                    std::move(results[i])});
  }
  return {write_file(dir, "complexity.csv", complexity_table(rows))};
}

std::vector<fs::path> run_spectrum(const ExperimentConfig& cfg, const fs::path& dir,
                                   unsigned threads) {
  const auto spectra = parallel_map<TopSpectrum>(cfg.s_grid.size(), threads, [&](std::size_t i) {
    return top_eigenvalues(cfg.spec, cfg.s_grid[i], *cfg.n);
  });
  std::vector<fs::path> files;
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    files.push_back(write_file(dir, "spectrum_s" + std::to_string(cfg.s_grid[i]) + ".csv",
                               spectrum_table(spectra[i])));
  }
  return files;
}

std::vector<fs::path> run_classify(const ExperimentConfig& cfg, const fs::path& dir) {
  const std::vector<double> default_sigmas{0.5, 2.0};
  const auto& sigmas = cfg.sigma_grid.empty() ? default_sigmas : cfg.sigma_grid;
  const double tau = cfg.tau_grid.empty() ? 1.0 : cfg.tau_grid.front();
  return {write_file(dir, "classify.csv", classify_table(classify_all(cfg.spec, sigmas, tau)))};
}

std::vector<fs::path> run_criterion(const ExperimentConfig& cfg, const fs::path& dir,
                                    unsigned threads) {
  struct Point {
    double tau;
    std::uint64_t s;
  };
  std::vector<Point> grid;
  for (double tau : cfg.tau_grid) {
    for (auto s : cfg.s_grid) grid.push_back({tau, s});
  }
  const auto values = parallel_map<double>(grid.size(), threads, [&](std::size_t i) {
    return qpt_criterion_value(cfg.spec, grid[i].s, grid[i].tau).value;
  });
  CsvTable t;
  t.header = {"tau", "s", "C_s"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    t.rows.push_back({format_double(grid[i].tau), std::to_string(grid[i].s),
                      format_double(values[i])});
  }
  return {write_file(dir, "criterion.csv", t)};
}

std::vector<fs::path> run_approx(const ExperimentConfig& cfg, const fs::path& dir) {
  std::ifstream in(*cfg.input);
  if (!in) throw std::runtime_error("cannot open input " + cfg.input->string());
  const auto f = read_fourier(read_csv(in));
  const auto approx = truncate(cfg.spec, f, *cfg.n);
  const double err = l2_error(f, approx);
  const double norm = korobov_norm(cfg.spec, f);
  const auto curve = nth_minimal_error(cfg.spec, f.dimension(), *cfg.n);

  CsvTable summary;
  summary.header = {"n", "l2_error", "korobov_norm", "e_n"};
  summary.rows.push_back({std::to_string(*cfg.n), format_double(err), format_double(norm),
                          format_double(curve.points.back().error)});
  return {write_file(dir, "approx.csv", fourier_table(approx.result)),
          write_file(dir, "approx_summary.csv", summary)};
}

std::vector<fs::path> run_fit(const ExperimentConfig& cfg, const fs::path& dir,
                              unsigned threads) {
  const auto grid = cells(cfg);
  const auto results = count_cells(cfg, grid, threads);
  CsvTable fits;
  fits.header = {"slope", "intercept", "r2", "n_points"};
  CsvTable points;
  points.header = {"s", "eps", "count"};
  const std::size_t per_s = cfg.eps_grid.size();
  for (std::size_t si = 0; si < cfg.s_grid.size(); ++si) {
    std::vector<std::pair<double, double>> pairs;
    for (std::size_t e = 0; e < per_s; ++e) {
      const auto& r = results[si * per_s + e];
      pairs.emplace_back(cfg.eps_grid[e], r.count.convert_to<double>());
      points.rows.push_back({std::to_string(cfg.s_grid[si]), format_double(cfg.eps_grid[e]),
                             r.count.str()});
    }
    const auto fit = fit_exponent(pairs);
    fits.rows.push_back({format_double(fit.slope), format_double(fit.intercept),
                         format_double(fit.r_squared), std::to_string(fit.points_used)});
  }
  return {write_file(dir, "fit.csv", fits), write_file(dir, "fit_points.csv", points)};
}

}  // namespace

std::vector<std::filesystem::path> run(const ExperimentConfig& config, Mode mode,
                                       const std::filesystem::path& out_dir, unsigned threads) {
  fs::create_directories(out_dir);
  switch (mode) {
    case Mode::Complexity: return run_complexity(config, out_dir, threads);
    case Mode::Spectrum: return run_spectrum(config, out_dir, threads);
    case Mode::Classify: return run_classify(config, out_dir);
    case Mode::Criterion: return run_criterion(config, out_dir, threads);
    case Mode::Approx: return run_approx(config, out_dir);
    case Mode::ExponentFit: return run_fit(config, out_dir, threads);
  }
  return {};
}

}  // namespace korobov::harness
