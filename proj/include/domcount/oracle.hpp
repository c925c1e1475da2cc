#pragma once

// Brute-force reference: builds the graph explicitly and enumerates every
// vertex subset.

#include <cstdint>
#include <set>
#include <vector>

#include "domcount/ring.hpp"
#include "domcount/sweep.hpp"

namespace domcount {

/// Vertex (row r, column c) has id r*m + c. Neighbour sets never contain
/// the vertex itself or duplicates, so wraps on width 1 or 2 collapse.
struct AdjacencyGraph {
  int vertex_count = 0;
  std::vector<std::set<int>> neighbors;

  std::size_t edge_count() const;
};

AdjacencyGraph build_graph(const GraphSpec& spec);

bool is_dominating(const AdjacencyGraph& graph, std::uint64_t subset);

inline constexpr int kOracleHardCap = 24;
inline constexpr int kOracleDefaultGuard = 20;

/// Coefficient k counts dominating sets of size k. Throws GuardExceeded
/// above `guard` vertices (never more than kOracleHardCap).
ExactPolynomial brute_force_polynomial(const GraphSpec& spec, int guard = kOracleDefaultGuard);

}  // namespace domcount
