#include "korobov/harness/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace korobov::harness {

namespace {

void check_field(const std::string& field) {
  if (field.find_first_of(",\n\r") != std::string::npos) {
    throw std::logic_error("CSV field contains a separator: '" + field + "'");
  }
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_double(const std::string& text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::runtime_error("CSV: not a number: '" + text + "'");
  }
  return v;
}

std::int64_t parse_int(const std::string& text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::runtime_error("CSV: not an integer: '" + text + "'");
  }
  return v;
}

std::vector<std::string> index_columns(std::size_t s) {
  std::vector<std::string> cols;
  for (std::size_t j = 1; j <= s; ++j) cols.push_back("k_" + std::to_string(j));
  return cols;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_csv(std::ostream& out, const CsvTable& table) {
  auto write_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      check_field(row[i]);
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  };
  write_row(table.header);
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) throw std::logic_error("CSV row width mismatch");
    write_row(row);
  }
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split(line);
    if (table.header.empty()) {
      table.header = std::move(fields);
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw std::runtime_error("CSV line " + std::to_string(line_no) + ": expected " +
                               std::to_string(table.header.size()) + " fields, got " +
                               std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (table.header.empty()) throw std::runtime_error("CSV: empty input");
  return table;
}

CsvTable spectrum_table(const TopSpectrum& spectrum) {
  CsvTable t;
  t.header = {"rank", "eigenvalue"};
  for (auto& c : index_columns(spectrum.dimension)) t.header.push_back(std::move(c));
  std::size_t rank = 1;
  for (const auto& e : spectrum.entries) {
    std::vector<std::string> row{std::to_string(rank++), format_double(e.eigenvalue)};
    for (auto k : e.index) row.push_back(std::to_string(k));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable complexity_table(const std::vector<ComplexityRow>& rows) {
  CsvTable t;
  t.header = {"alpha", "family", "params", "s", "eps", "count", "boundary_ties"};
  for (const auto& r : rows) {
    t.rows.push_back({format_double(r.alpha), r.family, r.params, std::to_string(r.s),
                      format_double(r.eps), r.result.count.str(), r.result.boundary_ties.str()});
  }
  return t;
}

CsvTable classify_table(
    const std::vector<std::pair<TractabilityQuery, TractabilityReport>>& rows) {
  CsvTable t;
  t.header = {"notion", "class", "verdict", "rule", "exponent", "probe_summary"};
  for (const auto& [q, r] : rows) {
    t.rows.push_back({notion_name(q), std::string(class_name(q.info_class)),
                      std::string(verdict_name(r.verdict)), r.rule,
                      r.exponent ? format_double(*r.exponent) : std::string(),
                      r.evidence.value_or("")});
  }
  return t;
}

FourierPolynomial read_fourier(const CsvTable& table) {
  if (table.header.size() < 3) {
    throw std::runtime_error("Fourier CSV needs columns k_1..k_s, re, im");
  }
  const std::size_t s = table.header.size() - 2;
  FourierPolynomial f(s);
  for (const auto& row : table.rows) {
    FreqIndex k(s);
    for (std::size_t j = 0; j < s; ++j) k[j] = parse_int(row[j]);
    f.set(k, {parse_double(row[s]), parse_double(row[s + 1])});
  }
  return f;
}

CsvTable fourier_table(const FourierPolynomial& f) {
  CsvTable t;
  t.header = index_columns(f.dimension());
  t.header.push_back("re");
  t.header.push_back("im");
  for (const auto& [k, c] : f.coefficients()) {
    std::vector<std::string> row;
    for (auto kj : k) row.push_back(std::to_string(kj));
    row.push_back(format_double(c.real()));
    row.push_back(format_double(c.imag()));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace korobov::harness
