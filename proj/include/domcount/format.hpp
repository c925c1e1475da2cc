#pragma once

// Rendering of polynomials and tables in the CLI output formats.

#include <string>
#include <vector>

#include "domcount/ring.hpp"
#include "domcount/transfer.hpp"
#include "json.hpp"

namespace domcount {

enum class OutputFormat { Text, Json, Csv, Bfile };

OutputFormat parse_format(const std::string& name);

/// "10z^3 + 57z^4 + ... + z^9"; unit coefficients and exponents are
/// omitted, the zero polynomial prints as "0".
std::string polynomial_text(const ExactPolynomial& p);

/// {"minDegree": d, "coefficients": ["c_d", ..., "c_max"]}; the zero
/// polynomial has minDegree -1 and no coefficients.
nlohmann::json polynomial_json(const ExactPolynomial& p);
ExactPolynomial polynomial_from_json(const nlohmann::json& j);

std::string render_polynomial(const ExactPolynomial& p, OutputFormat format);

/// Rectangular table, one row per n and one column per m.
struct Table {
  std::string quantity;
  Family family = Family::Grid;
  std::vector<int> rows;  // n values
  std::vector<int> cols;  // m values
  std::vector<std::vector<std::string>> cells;
};

std::string render_table(const Table& table, OutputFormat format);

/// "index value" lines.
std::string bfile_lines(int first_index, const std::vector<std::string>& values);

}  // namespace domcount
