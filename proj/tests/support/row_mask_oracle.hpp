#pragma once

// Second reference implementation for test code: a plain row-by-row DP over
// whole-row vertex masks. State = (occupied mask of the last row, which of its
// vertices are already dominated). Shares nothing with the signature engine.
// Torus is not covered (rows would need to wrap).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "domcount/sweep.hpp"

namespace domcount::testing {

struct RowMaskTables {
  std::uint32_t full;
  std::vector<std::uint32_t> same_row;  // closed cover within the row
  std::vector<std::uint32_t> next_row;  // cover into an adjacent row
};

inline RowMaskTables row_mask_tables(Family family, int m) {
  if (family == Family::Torus) throw std::invalid_argument("row-mask oracle has no torus");
  if (m > 12) throw std::invalid_argument("row-mask oracle limited to width 12");
  RowMaskTables t;
  t.full = (1u << m) - 1;
  const bool wrap = family == Family::Cylinder && m > 1;
  for (std::uint32_t s = 0; s <= t.full; ++s) {
    std::uint32_t l = (s << 1) & t.full, r = s >> 1;
    if (wrap) {
      l |= (s >> (m - 1)) & 1u;
      r |= (s & 1u) << (m - 1);
    }
    t.same_row.push_back(s | l | r);
    t.next_row.push_back(family == Family::King ? (s | ((s << 1) & t.full) | (s >> 1)) : s);
  }
  return t;
}

/// Dense coefficients (index = set size); uint64 is enough for m*n <= 62.
inline std::vector<std::uint64_t> row_mask_polynomial(Family family, int m, int n) {
  if (m * n > 62) throw std::invalid_argument("row-mask polynomial limited to 62 vertices");
  const auto t = row_mask_tables(family, m);
  const std::size_t len = static_cast<std::size_t>(m * n) + 1;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint64_t>> cur, nxt;
  for (std::uint32_t s = 0; s <= t.full; ++s) {
    auto& p = cur[{s, t.same_row[s]}];
    p.resize(len);
    p[__builtin_popcount(s)] += 1;
  }
  for (int row = 1; row < n; ++row) {
    nxt.clear();
    for (const auto& [key, poly] : cur) {
      const auto [prev, dom] = key;
      for (std::uint32_t s = 0; s <= t.full; ++s) {
        if ((dom | t.next_row[s]) != t.full) continue;
        auto& p = nxt[{s, t.same_row[s] | t.next_row[prev]}];
        p.resize(len);
        const int k = __builtin_popcount(s);
        for (std::size_t d = 0; d + k < len; ++d) p[d + k] += poly[d];
      }
    }
    cur.swap(nxt);
  }
  std::vector<std::uint64_t> out(len);
  for (const auto& [key, poly] : cur) {
    if (key.second != t.full) continue;
    for (std::size_t d = 0; d < len; ++d) out[d] += poly[d];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// (gamma, number of minimum dominating sets).
inline std::pair<int, BigInt> row_mask_minimum(Family family, int m, int n) {
  const auto t = row_mask_tables(family, m);
  struct Term {
    int degree;
    BigInt count;
  };
  auto add = [](std::map<std::pair<std::uint32_t, std::uint32_t>, Term>& st, std::pair<std::uint32_t, std::uint32_t> k,
                int d, const BigInt& c) {
    auto it = st.find(k);
    if (it == st.end()) {
      st.emplace(k, Term{d, c});
    } else if (d < it->second.degree) {
      it->second = Term{d, c};
    } else if (d == it->second.degree) {
      it->second.count += c;
    }
  };
  std::map<std::pair<std::uint32_t, std::uint32_t>, Term> cur, nxt;
  for (std::uint32_t s = 0; s <= t.full; ++s) add(cur, {s, t.same_row[s]}, __builtin_popcount(s), 1);
  for (int row = 1; row < n; ++row) {
    nxt.clear();
    for (const auto& [key, term] : cur) {
      for (std::uint32_t s = 0; s <= t.full; ++s) {
        if ((key.second | t.next_row[s]) != t.full) continue;
        add(nxt, {s, t.same_row[s] | t.next_row[key.first]}, term.degree + __builtin_popcount(s), term.count);
      }
    }
    cur.swap(nxt);
  }
  std::pair<int, BigInt> best{-1, 0};
  for (const auto& [key, term] : cur) {
    if (key.second != t.full) continue;
    if (best.first < 0 || term.degree < best.first) {
      best = {term.degree, term.count};
    } else if (term.degree == best.first) {
      best.second += term.count;
    }
  }
  return best;
}

}  // namespace domcount::testing
