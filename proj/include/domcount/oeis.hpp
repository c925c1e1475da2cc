#pragma once

// Local table of the integer sequences this engine can regenerate, with
// the index convention used for each.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domcount/sweep.hpp"

namespace domcount {

enum class SequenceShape {
  Width,       // one value per width m = 1, 2, ...
  Diagonal,    // n x n graphs, n = 1, 2, ...
  Antidiagonal // m x n table read by antidiagonals d = m + n, m ascending
};

enum class SequenceQuantity {
  Signatures,
  CyclicSignatures,
  ReflectionSignatures,
  CyclicOrbitSignatures,
  Total,
  Gamma,
  MinCount
};

struct SequenceInfo {
  std::string_view id;
  std::string_view description;
  SequenceShape shape;
  SequenceQuantity quantity;
  Family family;
  int first_index;  // index of the first emitted term (m = 1 or n = 1 or (1,1))
};

const std::vector<SequenceInfo>& sequence_table();
const SequenceInfo& find_sequence(std::string_view id);  // throws std::invalid_argument

/// First `count` terms as decimal strings.
std::vector<std::string> sequence_terms(const SequenceInfo& seq, int count, const RunOptions& options = {});

/// Position k (0-based) of an antidiagonal walk -> (m, n).
std::pair<int, int> antidiagonal_cell(int k);

}  // namespace domcount
