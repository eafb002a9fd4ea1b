#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "korobov/approximator.hpp"
#include "korobov/complexity.hpp"
#include "korobov/spectrum.hpp"
#include "korobov/tractability.hpp"

namespace korobov::harness {

/// Header plus rows of unquoted fields. Fields never contain commas or newlines.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// %.17g, so a double survives a write/read cycle exactly.
std::string format_double(double x);

void write_csv(std::ostream& out, const CsvTable& table);
/// Throws std::runtime_error on ragged rows.
CsvTable read_csv(std::istream& in);

CsvTable spectrum_table(const TopSpectrum& spectrum);

struct ComplexityRow {
  double alpha = 2.0;
  std::string family;
  std::string params;
  std::uint64_t s = 1;
  double eps = 0.5;
  ComplexityResult result;
};
CsvTable complexity_table(const std::vector<ComplexityRow>& rows);

CsvTable classify_table(
    const std::vector<std::pair<TractabilityQuery, TractabilityReport>>& rows);

FourierPolynomial read_fourier(const CsvTable& table);
CsvTable fourier_table(const FourierPolynomial& f);

}  // namespace korobov::harness
