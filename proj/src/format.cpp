#include "domcount/format.hpp"

#include <sstream>
#include <stdexcept>

namespace domcount {

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "bfile") return OutputFormat::Bfile;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string polynomial_text(const ExactPolynomial& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const BigInt& c = p.coefficients()[k];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || k == 0) out += c.str();
    if (k >= 1) out += "z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

nlohmann::json polynomial_json(const ExactPolynomial& p) {
  const int low = p.min_degree();
  nlohmann::json coeffs = nlohmann::json::array();
  if (low >= 0) {
    for (int k = low; k <= p.degree(); ++k) coeffs.push_back(p[k].str());
  }
  return {{"minDegree", low}, {"coefficients", coeffs}};
}

ExactPolynomial polynomial_from_json(const nlohmann::json& j) {
  const int low = j.at("minDegree").get<int>();
  std::vector<BigInt> coeffs;
  if (low >= 0) {
    coeffs.assign(static_cast<std::size_t>(low), 0);
    for (const auto& c : j.at("coefficients")) coeffs.emplace_back(c.get<std::string>());
  }
  ExactPolynomial p(ExactRing{}, std::move(coeffs));
  return p.trim();
}

std::string render_polynomial(const ExactPolynomial& p, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Text:
      out << polynomial_text(p) << '\n';
      break;
    case OutputFormat::Json:
      out << polynomial_json(p).dump() << '\n';
      break;
    case OutputFormat::Csv:
      out << "degree,coefficient\n";
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] != 0) out << k << ',' << p[k] << '\n';
      }
      break;
    case OutputFormat::Bfile:
      for (int k = std::max(p.min_degree(), 0); k <= p.degree(); ++k) out << k << ' ' << p[k] << '\n';
      break;
  }
  return out.str();
}

std::string render_table(const Table& t, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json j = {{"quantity", t.quantity},
                          {"family", family_name(t.family)},
                          {"n", t.rows},
                          {"m", t.cols},
                          {"values", t.cells}};
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
    case OutputFormat::Text: {
      const char sep = format == OutputFormat::Csv ? ',' : ' ';
      out << "n\\m";
      for (int m : t.cols) out << sep << m;
      out << '\n';
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out << t.rows[r];
        for (const auto& cell : t.cells[r]) out << sep << cell;
        out << '\n';
      }
      break;
    }
    case OutputFormat::Bfile:
      throw std::invalid_argument("tables have no b-file form; use the oeis command");
  }
  return out.str();
}

std::string bfile_lines(int first_index, const std::vector<std::string>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << first_index + static_cast<int>(i) << ' ' << values[i] << '\n';
  return out.str();
}

}  // namespace domcount
