#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "korobov/errors.hpp"
#include "korobov/harness/config.hpp"
#include "korobov/harness/csv.hpp"
#include "korobov/harness/fit.hpp"
#include "korobov/harness/runner.hpp"

using namespace korobov;
using namespace korobov::harness;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("korobov_harness_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

int cli(const std::string& args) {
  const std::string cmd = std::string(KOROBOV_IBC_EXE) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

CsvTable read_back(const fs::path& p) {
  std::ifstream in(p);
  return read_csv(in);
}

const char* kBase = R"([space]
alpha = 2
family = const
c = 1
[grids]
eps_grid = 0.5, 0.25
s_grid = 1, 2
)";

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = parse_config(R"(# experiment
[space]
alpha = 3
family = poly
c = 0.5
a = 2
[grids]
eps_grid = 0.5, 0.1 ; trailing comment
s_grid = 1, 10
tau_grid = 1.5
[run]
mode = complexity
n = 7
memoize = true
)");
  CHECK(cfg.spec.alpha() == 3);
  CHECK(cfg.spec.weights().family() == WeightFamily::PolynomialDecay);
  CHECK(cfg.spec.weights().c() == 0.5);
  CHECK(cfg.eps_grid == std::vector<double>{0.5, 0.1});
  CHECK(cfg.s_grid == std::vector<std::uint64_t>{1, 10});
  CHECK(cfg.mode == Mode::Complexity);
  CHECK(cfg.n == 7u);
  CHECK(cfg.memoize);
  CHECK(cfg.lines.at("a") == 6);

  const auto fin = parse_config("[space]\nalpha=2\nfamily=finite\nvalues=1, 0.5, 0.25\n");
  CHECK(fin.spec.weights().gamma(3) == 0.25);
  CHECK(fin.spec.weights().gamma(4) == 0.0);
}

TEST_CASE("config errors name the offending line") {
  auto error_of = [](const std::string& text) -> std::string {
    try {
      parse_config(text, "x.ini");
    } catch (const ConfigError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(error_of("[space]\nalpha = 2\nfamily = const\nc = 1\nbogus = 3\n").rfind("x.ini:5:", 0) == 0);
  CHECK(error_of("[space]\nalpha = 0.5\nfamily = const\nc = 1\n").rfind("x.ini:2:", 0) == 0);
  CHECK(error_of("[space]\nalpha = 2\nfamily = const\nc = 1.5\n").rfind("x.ini:4:", 0) == 0);
  CHECK(error_of("[space]\nalpha = 2\nfamily = const\nc = 1\n[grids]\neps_grid = 0.5, 1.2\n")
            .rfind("x.ini:6:", 0) == 0);
  CHECK(error_of("[space]\nalpha = 2\nalpha = 3\n").rfind("x.ini:3:", 0) == 0);
  CHECK(error_of("[nowhere]\n").rfind("x.ini:1:", 0) == 0);
  CHECK(error_of("[space]\nalpha 2\n").rfind("x.ini:2:", 0) == 0);
  CHECK(error_of("[space]\nfamily = const\nc = 1\n").rfind("x.ini:", 0) == 0);
  CHECK(error_of("[space]\nalpha=2\nfamily=const\nc=1\n[grids]\ns_grid = 0\n").rfind("x.ini:6:", 0) == 0);
  CHECK(error_of("[space]\nalpha=2\nfamily=finite\nvalues = 0.2, 0.9\n").rfind("x.ini:4:", 0) == 0);

  const auto cfg = parse_config(kBase);
  CHECK_THROWS_AS(validate_for_mode(cfg, Mode::Criterion, "x.ini"), ConfigError);
  CHECK_THROWS_AS(validate_for_mode(cfg, Mode::Spectrum, "x.ini"), ConfigError);
  CHECK_THROWS_AS(validate_for_mode(cfg, Mode::ExponentFit, "x.ini"), ConfigError);
  CHECK_THROWS_AS(validate_for_mode(cfg, Mode::Approx, "x.ini"), ConfigError);
  CHECK_NOTHROW(validate_for_mode(cfg, Mode::Complexity, "x.ini"));
  CHECK_NOTHROW(validate_for_mode(cfg, Mode::Classify, "x.ini"));
}

TEST_CASE("mode names") {
  for (auto m : {Mode::Complexity, Mode::Spectrum, Mode::Classify, Mode::Criterion, Mode::Approx,
                 Mode::ExponentFit}) {
    CHECK(parse_mode(mode_name(m)) == m);
  }
  CHECK(mode_name(Mode::ExponentFit) == "exponent-fit");
}

TEST_CASE("csv formatting and reading") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
  CsvTable t{{"a", "b"}, {{"1", "x"}, {"2", "y"}}};
  std::stringstream ss;
  write_csv(ss, t);
  CHECK(ss.str() == "a,b\n1,x\n2,y\n");
  const auto back = read_csv(ss);
  CHECK(back.header == t.header);
  CHECK(back.rows == t.rows);
  std::stringstream ragged("a,b\n1\n");
  CHECK_THROWS(read_csv(ragged));
  std::stringstream sink;
  CHECK_THROWS(write_csv(sink, CsvTable{{"a"}, {{"x,y"}}}));
}

TEST_CASE("fourier csv round trip") {
  FourierPolynomial f(2);
  f.set({0, 0}, {1, 0});
  f.set({-3, 2}, {0.1, -2.5});
  std::stringstream ss;
  write_csv(ss, fourier_table(f));
  CHECK(read_fourier(read_csv(ss)) == f);
}

TEST_CASE("fit_exponent") {
  std::vector<std::pair<double, double>> exact;
  for (int i = 1; i <= 8; ++i) {
    const double eps = std::pow(0.5, i);
    exact.emplace_back(eps, 3.0 * std::pow(eps, -2.0));
  }
  const auto fit = fit_exponent(exact);
  CHECK(std::abs(fit.slope - 2.0) < 1e-9);
  CHECK(std::abs(fit.intercept - std::log(3.0)) < 1e-9);
  CHECK(fit.r_squared == doctest::Approx(1.0));
  CHECK(fit.points_used == 8);

  std::vector<std::pair<double, double>> odd;
  for (double eps : {0.9, 0.3, 0.07, 0.01}) odd.emplace_back(eps, 2.5 * std::pow(eps, -1.37));
  CHECK(std::abs(fit_exponent(odd).slope - 1.37) < 1e-9);

  const std::vector<std::pair<double, double>> flat{{0.5, 1}, {0.25, 1}, {0.1, 1}};
  CHECK(fit_exponent(flat).slope == 0.0);
  CHECK(fit_exponent(flat).r_squared == 1.0);

  const std::vector<std::pair<double, double>> same{{0.5, 1}, {0.5, 2}, {0.5, 3}};
  CHECK_THROWS_AS(fit_exponent(same), DomainError);
  const std::vector<std::pair<double, double>> two{{0.5, 1}, {0.25, 2}};
  CHECK_THROWS_AS(fit_exponent(two), DomainError);
}

TEST_CASE("univariate fit approaches slope 1") {
  auto cfg = parse_config(std::string(kBase));
  cfg.s_grid = {1};
  cfg.eps_grid.clear();
  for (int i = 1; i <= 10; ++i) cfg.eps_grid.push_back(std::pow(0.5, i));
  const auto dir = scratch("fit1");
  run(cfg, Mode::ExponentFit, dir, 2);
  const auto t = read_back(dir / "fit.csv");
  CHECK(t.header == std::vector<std::string>{"slope", "intercept", "r2", "n_points"});
  REQUIRE(t.rows.size() == 1);
  CHECK(std::abs(std::stod(t.rows[0][0]) - 1.0) < 0.05);
  CHECK(t.rows[0][3] == "10");
}

TEST_CASE("runner outputs") {
  const auto dir = scratch("modes");
  auto cfg = parse_config(std::string(kBase) + "tau_grid = 1.2\n[run]\nn = 4\n");
  cfg.s_grid = {1};
  cfg.eps_grid = {0.5};
  run(cfg, Mode::Complexity, dir, 1);
  const auto c = read_back(dir / "complexity.csv");
  CHECK(c.header == std::vector<std::string>{"alpha", "family", "params", "s", "eps", "count",
                                             "boundary_ties"});
  REQUIRE(c.rows.size() == 1);
  CHECK(c.rows[0][5] == "3");

  run(cfg, Mode::Classify, dir, 1);
  const auto k = read_back(dir / "classify.csv");
  bool saw_wt_fails = false;
  for (const auto& row : k.rows) saw_wt_fails |= (row[0] == "WT" && row[1] == "all" && row[2] == "fails");
  CHECK(saw_wt_fails);

  run(cfg, Mode::Spectrum, dir, 1);
  const auto sp = read_back(dir / "spectrum_s1.csv");
  CHECK(sp.header == std::vector<std::string>{"rank", "eigenvalue", "k_1"});
  CHECK(sp.rows.size() == 4);

  run(cfg, Mode::Criterion, dir, 1);
  const auto cr = read_back(dir / "criterion.csv");
  CHECK(cr.header == std::vector<std::string>{"tau", "s", "C_s"});

  FourierPolynomial f(1);
  f.set({0}, 1.0);
  f.set({3}, 2.0);
  std::ofstream(dir / "f.csv") << [&] {
    std::stringstream ss;
    write_csv(ss, fourier_table(f));
    return ss.str();
  }();
  cfg.input = dir / "f.csv";
  run(cfg, Mode::Approx, dir, 1);
  const auto sum = read_back(dir / "approx_summary.csv");
  CHECK(sum.header == std::vector<std::string>{"n", "l2_error", "korobov_norm", "e_n"});
  CHECK(std::stod(sum.rows[0][1]) == doctest::Approx(2.0));
  const auto approx = read_fourier(read_back(dir / "approx.csv"));
  CHECK(approx.coefficients().size() == 1);
}

TEST_CASE("output is byte identical across runs and thread counts") {
  auto cfg = parse_config(std::string(kBase));
  cfg.s_grid = {1, 2, 3, 5, 8};
  cfg.eps_grid = {0.6, 0.3, 0.15, 0.07};
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  for (auto mode : {Mode::Complexity, Mode::ExponentFit}) {
    const auto fa = run(cfg, mode, a, 1);
    const auto fb = run(cfg, mode, b, 8);
    REQUIRE(fa.size() == fb.size());
    for (std::size_t i = 0; i < fa.size(); ++i) CHECK(slurp(fa[i]) == slurp(fb[i]));
  }
}

TEST_CASE("parallel_map preserves order and rethrows the first failure") {
  const auto v = parallel_map<int>(100, 7, [](std::size_t i) { return static_cast<int>(i * i); });
  for (int i = 0; i < 100; ++i) CHECK(v[i] == i * i);
  CHECK_THROWS_WITH(parallel_map<int>(50, 4,
                                      [](std::size_t i) -> int {
                                        if (i == 13 || i == 40) throw std::runtime_error(std::to_string(i));
                                        return 0;
                                      }),
                    "13");
}

TEST_CASE("cli exit codes") {
  const auto dir = scratch("cli");
  spit(dir / "ok.ini", std::string(kBase));
  CHECK(cli("complexity --config " + (dir / "ok.ini").string() + " --out " + (dir / "out").string()) == 0);
  CHECK(fs::exists(dir / "out" / "complexity.csv"));

  spit(dir / "bad.ini", std::string(kBase) + "eps_grid = 3\n");
  CHECK(cli("complexity --config " + (dir / "bad.ini").string()) == 2);
  CHECK(cli("criterion --config " + (dir / "ok.ini").string()) == 2);
  CHECK(cli("nonsense --config " + (dir / "ok.ini").string()) == 2);
  CHECK(cli("complexity") == 2);
  CHECK(cli("complexity --config " + (dir / "missing.ini").string()) == 2);

  spit(dir / "huge.ini", "[space]\nalpha = 2\nfamily = const\nc = 1\n[grids]\ns_grid = 1\n[run]\nn = 1000000000\n");
  CHECK(cli("spectrum --config " + (dir / "huge.ini").string() + " --out " + (dir / "o2").string()) == 3);

  // the environment variable takes precedence over --threads
  const std::string env = "KOROBOV_IBC_THREADS=3 ";
  const std::string cmd = env + KOROBOV_IBC_EXE + " complexity --config " + (dir / "ok.ini").string() +
                          " --threads 1 --out " + (dir / "o3").string() + " >/dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp(dir / "o3" / "complexity.csv") == slurp(dir / "out" / "complexity.csv"));
  const std::string bad_env = "KOROBOV_IBC_THREADS=zero " + std::string(KOROBOV_IBC_EXE) +
                              " complexity --config " + (dir / "ok.ini").string() + " >/dev/null 2>&1";
  const int st = std::system(bad_env.c_str());
  CHECK(WEXITSTATUS(st) == 2);
}

TEST_CASE("shipped example config is valid for every mode it names") {
  const fs::path example = fs::path(KOROBOV_SOURCE_DIR) / "configs" / "example.ini";
  const auto cfg = load_config(example);
  REQUIRE(cfg.mode.has_value());
  CHECK_NOTHROW(validate_for_mode(cfg, *cfg.mode, example.string()));
}
