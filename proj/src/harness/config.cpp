#include "korobov/harness/config.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "korobov/errors.hpp"

namespace korobov::harness {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string format_number(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("?");
}

struct Entry {
  std::string value;
  std::size_t line = 0;
};

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"space", {"alpha", "family", "c", "a", "q", "values"}},
      {"grids", {"eps_grid", "s_grid", "tau_grid", "sigma_grid"}},
      {"run", {"mode", "outputs", "n", "input", "threads", "memoize"}},
  };
  return keys;
}

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(std::size_t line, const std::string& message) const {
    throw ConfigError(source_, line, message);
  }

  std::map<std::string, Entry> read(std::string_view text) {
    std::map<std::string, Entry> entries;
    std::string section;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto end = text.find('\n', pos);
      std::string_view raw =
          text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
      ++line_no;

      if (const auto hash = raw.find_first_of("#;"); hash != std::string_view::npos) {
        raw = raw.substr(0, hash);
      }
      const auto line = trim(raw);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') fail(line_no, "unterminated section header");
        section = std::string(trim(line.substr(1, line.size() - 2)));
        if (!allowed_keys().contains(section)) fail(line_no, "unknown section [" + section + "]");
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
      const std::string key(trim(line.substr(0, eq)));
      const std::string value(trim(line.substr(eq + 1)));
      if (section.empty()) fail(line_no, "key '" + key + "' appears before any [section]");
      if (!allowed_keys().at(section).contains(key)) {
        fail(line_no, "unknown key '" + key + "' in [" + section + "]");
      }
      if (value.empty()) fail(line_no, "empty value for '" + key + "'");
      if (entries.contains(key)) {
        fail(line_no, "duplicate key '" + key + "' (first set on line " +
                          std::to_string(entries[key].line) + ")");
      }
      entries[key] = {value, line_no};
    }
    return entries;
  }

  double number(const Entry& e, std::string_view text) const {
    text = trim(text);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      fail(e.line, "not a number: '" + std::string(text) + "'");
    }
    return v;
  }

  std::uint64_t integer(const Entry& e, std::string_view text) const {
    text = trim(text);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      fail(e.line, "not a nonnegative integer: '" + std::string(text) + "'");
    }
    return v;
  }

  template <class T, class F>
  std::vector<T> list(const Entry& e, F&& convert) const {
    std::vector<T> out;
    std::string_view rest = e.value;
    while (true) {
      const auto comma = rest.find(',');
      out.push_back(convert(e, rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return out;
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
};

}  // namespace

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::Complexity: return "complexity";
    case Mode::Spectrum: return "spectrum";
    case Mode::Classify: return "classify";
    case Mode::Criterion: return "criterion";
    case Mode::Approx: return "approx";
    case Mode::ExponentFit: return "exponent-fit";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
  for (Mode m : {Mode::Complexity, Mode::Spectrum, Mode::Classify, Mode::Criterion, Mode::Approx,
                 Mode::ExponentFit}) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

ConfigError::ConfigError(std::string source, std::size_t line, const std::string& message)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " +
                         message),
      source_(std::move(source)),
      line_(line) {}

ExperimentConfig parse_config(std::string_view text, const std::string& source) {
  Parser p(source);
  auto entries = p.read(text);
  ExperimentConfig cfg;
  for (const auto& [key, e] : entries) cfg.lines[key] = e.line;

  auto require = [&](const std::string& key) -> const Entry& {
    auto it = entries.find(key);
    if (it == entries.end()) p.fail(0, "missing required key '" + key + "'");
    return it->second;
  };
  auto number = [&p](const Entry& e, std::string_view t) { return p.number(e, t); };
  auto integer = [&p](const Entry& e, std::string_view t) { return p.integer(e, t); };

  // [space]
  const Entry& alpha_e = require("alpha");
  const double alpha = p.number(alpha_e, alpha_e.value);
  const Entry& family_e = require("family");
  const auto family = parse_family(family_e.value);
  if (!family) {
    p.fail(family_e.line, "unknown weight family '" + family_e.value +
                              "' (expected const, poly, geom, finite or explicit)");
  }
  // Range errors point at the offending parameter rather than the family line.
  auto param = [&](const std::string& key, double lo, double hi) {
    const Entry& e = require(key);
    const double v = p.number(e, e.value);
    if (!(v >= lo && v <= hi)) {
      p.fail(e.line, key + " must lie in [" + format_number(lo) + "," + format_number(hi) + "]");
    }
    return v;
  };
  const double inf = std::numeric_limits<double>::infinity();
  try {
    std::optional<WeightSequence> weights;
    switch (*family) {
      case WeightFamily::Constant:
        weights = WeightSequence::constant(param("c", 0, 1));
        break;
      case WeightFamily::PolynomialDecay:
        weights = WeightSequence::polynomial_decay(param("c", 0, 1), param("a", 0, inf));
        break;
      case WeightFamily::Geometric:
        weights = WeightSequence::geometric(param("c", 0, 1), param("q", 0, 1));
        break;
      case WeightFamily::FiniteSupport:
      case WeightFamily::Explicit: {
        const Entry& e = require("values");
        auto values = p.list<double>(e, number);
        try {
          weights = *family == WeightFamily::Explicit
                        ? WeightSequence::explicit_values(std::move(values))
                        : WeightSequence::finite_support(std::move(values));
        } catch (const DomainError& err) {
          p.fail(e.line, err.what());
        }
        break;
      }
    }
    try {
      cfg.spec = SpaceSpec(alpha, *weights);
    } catch (const DomainError& err) {
      p.fail(alpha_e.line, err.what());
    }
  } catch (const DomainError& err) {
    p.fail(family_e.line, err.what());
  }

  // [grids]
  if (auto it = entries.find("eps_grid"); it != entries.end()) {
    cfg.eps_grid = p.list<double>(it->second, number);
    for (double eps : cfg.eps_grid) {
      if (!(eps > 0.0 && eps < 1.0)) p.fail(it->second.line, "eps values must lie in (0,1)");
    }
  }
  if (auto it = entries.find("s_grid"); it != entries.end()) {
    cfg.s_grid = p.list<std::uint64_t>(it->second, integer);
    for (auto s : cfg.s_grid) {
      if (s == 0) p.fail(it->second.line, "s values must be >= 1");
    }
  }
  if (auto it = entries.find("tau_grid"); it != entries.end()) {
    cfg.tau_grid = p.list<double>(it->second, number);
    for (double t : cfg.tau_grid) {
      if (!(t > 0.0)) p.fail(it->second.line, "tau values must be > 0");
    }
  }
  if (auto it = entries.find("sigma_grid"); it != entries.end()) {
    cfg.sigma_grid = p.list<double>(it->second, number);
    for (double sg : cfg.sigma_grid) {
      if (!(sg > 0.0)) p.fail(it->second.line, "sigma values must be > 0");
    }
  }

  // [run]
  if (auto it = entries.find("mode"); it != entries.end()) {
    cfg.mode = parse_mode(it->second.value);
    if (!cfg.mode) p.fail(it->second.line, "unknown mode '" + it->second.value + "'");
  }
  if (auto it = entries.find("outputs"); it != entries.end()) cfg.outputs = it->second.value;
  if (auto it = entries.find("input"); it != entries.end()) cfg.input = it->second.value;
  if (auto it = entries.find("n"); it != entries.end()) {
    cfg.n = p.integer(it->second, it->second.value);
    if (*cfg.n == 0) p.fail(it->second.line, "n must be >= 1");
  }
  if (auto it = entries.find("threads"); it != entries.end()) {
    const auto t = p.integer(it->second, it->second.value);
    if (t == 0 || t > 1024) p.fail(it->second.line, "threads must be in 1..1024");
    cfg.threads = static_cast<unsigned>(t);
  }
  if (auto it = entries.find("memoize"); it != entries.end()) {
    if (it->second.value == "true") {
      cfg.memoize = true;
    } else if (it->second.value != "false") {
      p.fail(it->second.line, "memoize must be true or false");
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), 0, "cannot open config file");
  std::stringstream buf;
  buf << in.rdbuf();
  auto cfg = parse_config(buf.str(), path.string());
  if (cfg.input && cfg.input->is_relative()) cfg.input = path.parent_path() / *cfg.input;
  return cfg;
}

void validate_for_mode(const ExperimentConfig& config, Mode mode, const std::string& source) {
  auto line_of = [&](const std::string& key) {
    auto it = config.lines.find(key);
    return it == config.lines.end() ? std::size_t{0} : it->second;
  };
  auto need = [&](bool ok, const std::string& key, const std::string& why) {
    if (!ok) throw ConfigError(source, line_of(key), why);
  };
  const std::string m(mode_name(mode));
  switch (mode) {
    case Mode::Complexity:
      need(!config.eps_grid.empty(), "eps_grid", "mode " + m + " needs eps_grid");
      need(!config.s_grid.empty(), "s_grid", "mode " + m + " needs s_grid");
      break;
    case Mode::Spectrum:
      need(!config.s_grid.empty(), "s_grid", "mode " + m + " needs s_grid");
      need(config.n.has_value(), "n", "mode " + m + " needs n in [run]");
      break;
    case Mode::Classify:
      break;
    case Mode::Criterion:
      need(!config.tau_grid.empty(), "tau_grid", "mode " + m + " needs tau_grid");
      need(!config.s_grid.empty(), "s_grid", "mode " + m + " needs s_grid");
      for (double t : config.tau_grid) {
        need(t > 1.0 / config.spec.alpha(), "tau_grid", "criterion needs every tau > 1/alpha");
      }
      break;
    case Mode::Approx:
      need(config.input.has_value(), "input", "mode " + m + " needs input in [run]");
      need(config.n.has_value(), "n", "mode " + m + " needs n in [run]");
      break;
    case Mode::ExponentFit:
      need(config.eps_grid.size() >= 3, "eps_grid", "mode " + m + " needs at least 3 eps values");
      need(!config.s_grid.empty(), "s_grid", "mode " + m + " needs s_grid");
      break;
  }
}

}  // namespace korobov::harness
