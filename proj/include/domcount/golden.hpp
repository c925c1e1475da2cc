#pragma once

// Reference fixtures shipped under tests/data: published square
// polynomials, minimum-set counts, totals and the cylinder gamma table.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "domcount/ring.hpp"
#include "domcount/transfer.hpp"

namespace domcount {

struct GoldenErratum {
  Family family;
  int m = 0;
  int n = 0;
  int degree = 0;
  BigInt printed;
  BigInt corrected;
};

/// Correction to one N_gamma entry of the minimum-set table.
struct TableErratum {
  Family family;
  int n = 0;
  BigInt printed;
  BigInt corrected;
};

struct GoldenPolynomial {
  Family family;
  int m = 0;
  int n = 0;
  ExactPolynomial poly;         // with errata applied
  ExactPolynomial printed;      // as published
  bool has_erratum = false;
};

struct GoldenData {
  std::vector<GoldenPolynomial> polynomials;
  std::vector<GoldenErratum> errata;
  std::vector<std::vector<int>> cylinder_gamma;             // [n-1][m-1]
  std::map<Family, std::map<int, BigInt>> min_dominating;  // family -> n -> N_gamma of the n x n graph, corrected
  std::vector<TableErratum> table_errata;
  std::map<int, BigInt> grid_square_totals;

  const GoldenPolynomial* find(Family family, int m, int n) const;
};

/// Directory baked in at build time; DOMCOUNT_DATA_DIR in the environment wins.
std::filesystem::path default_data_dir();

GoldenData load_golden(const std::filesystem::path& dir = default_data_dir());

}  // namespace domcount
