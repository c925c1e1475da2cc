#include "domcount/oracle.hpp"

#include <bit>

namespace domcount {

std::size_t AdjacencyGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& s : neighbors) twice += s.size();
  return twice / 2;
}

AdjacencyGraph build_graph(const GraphSpec& spec) {
  validate(spec);
  const int m = spec.m, n = spec.n;
  const bool wrap_cols = spec.family == Family::Cylinder || spec.family == Family::Torus;
  const bool wrap_rows = spec.family == Family::Torus;
  const bool diagonals = spec.family == Family::King;

  AdjacencyGraph g;
  g.vertex_count = m * n;
  g.neighbors.resize(g.vertex_count);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < m; ++c) {
      const int v = r * m + c;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          if (dr != 0 && dc != 0 && !diagonals) continue;
          int rr = r + dr, cc = c + dc;
          if (wrap_rows) rr = (rr + n) % n;
          if (wrap_cols) cc = (cc + m) % m;
          if (rr < 0 || rr >= n || cc < 0 || cc >= m) continue;
          const int u = rr * m + cc;
          if (u != v) g.neighbors[v].insert(u);
        }
      }
    }
  }
  return g;
}

bool is_dominating(const AdjacencyGraph& graph, std::uint64_t subset) {
  for (int v = 0; v < graph.vertex_count; ++v) {
    if (subset >> v & 1) continue;
    bool covered = false;
    for (int u : graph.neighbors[v]) {
      if (subset >> u & 1) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

ExactPolynomial brute_force_polynomial(const GraphSpec& spec, int guard) {
  validate(spec);
  const int cap = std::min(guard, kOracleHardCap);
  if (spec.vertices() > cap) {
    throw GuardExceeded("brute force limited to " + std::to_string(cap) + " vertices");
  }
  const auto g = build_graph(spec);
  const int nv = g.vertex_count;

  // Closed neighbourhood masks; S dominates iff it meets every one of them.
  std::vector<std::uint32_t> closed(nv);
  for (int v = 0; v < nv; ++v) {
    closed[v] = 1u << v;
    for (int u : g.neighbors[v]) closed[v] |= 1u << u;
  }
  std::vector<std::uint64_t> counts(nv + 1, 0);
  const std::uint32_t end = nv == 32 ? 0 : (1u << nv);
  std::uint32_t s = 0;
  do {
    bool ok = true;
    for (int v = 0; v < nv && ok; ++v) ok = (s & closed[v]) != 0;
    if (ok) ++counts[std::popcount(s)];
  } while (++s != end);

  std::vector<BigInt> coeffs(counts.begin(), counts.end());
  ExactPolynomial p(ExactRing{}, std::move(coeffs));
  return p.trim();
}

}  // namespace domcount
