// korobov-ibc <mode> --config <path> [--out <dir>] [--threads N]

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "korobov/errors.hpp"
#include "korobov/harness/config.hpp"
#include "korobov/harness/csv.hpp"
#include "korobov/harness/runner.hpp"
#include "korobov/tractability.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

unsigned resolve_threads(const korobov::harness::ExperimentConfig& cfg, int cli_threads) {
  if (const char* env = std::getenv("KOROBOV_IBC_THREADS"); env && *env) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw korobov::harness::ConfigError("KOROBOV_IBC_THREADS", 0,
                                        std::string("not a positive integer: ") + env);
  }
  if (cli_threads > 0) return static_cast<unsigned>(cli_threads);
  if (cfg.threads) return *cfg.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

int main(int argc, char** argv) {
  namespace h = korobov::harness;

  CLI::App app{"Information complexity and tractability in weighted Korobov spaces", "korobov-ibc"};
  std::string mode_text;
  std::string config_path;
  std::string out_dir;
  int threads = 0;
  app.add_option("mode", mode_text,
                 "complexity | spectrum | classify | criterion | approx | exponent-fit")
      ->required();
  app.add_option("--config", config_path, "experiment INI file")->required();
  app.add_option("--out", out_dir, "output directory (overrides [run] outputs)");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    const auto mode = h::parse_mode(mode_text);
    if (!mode) throw h::ConfigError("<command line>", 0, "unknown mode '" + mode_text + "'");
    const auto cfg = h::load_config(config_path);
    if (cfg.mode && *cfg.mode != *mode) {
      throw h::ConfigError(config_path, cfg.lines.at("mode"),
                           "mode '" + std::string(h::mode_name(*cfg.mode)) +
                               "' conflicts with command line mode '" + mode_text + "'");
    }
    h::validate_for_mode(cfg, *mode, config_path);
    const auto dir = out_dir.empty() ? cfg.outputs : std::filesystem::path(out_dir);
    const auto files = h::run(cfg, *mode, dir, resolve_threads(cfg, threads));
    if (*mode == h::Mode::Classify) {
      std::ifstream in(files.front());
      std::cout << in.rdbuf();
    }
    for (const auto& f : files) std::cerr << "wrote " << f.string() << "\n";
    return 0;
  } catch (const h::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const korobov::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
