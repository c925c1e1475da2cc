#include "domcount/transfer.hpp"

#include <algorithm>
#include <stdexcept>

namespace domcount {

namespace {

constexpr int kU = 0, kC = 1, kO = 2;

int digit(SignatureCode w, int i) { return static_cast<int>((w / pow3(i)) % 3); }

SignatureCode with_digit(SignatureCode w, int i, int old_value, int new_value) {
  return w - static_cast<SignatureCode>(old_value) * pow3(i) +
         static_cast<SignatureCode>(new_value) * pow3(i);
}

void trim(std::vector<std::uint64_t>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, int shift) {
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
  for (std::size_t k = 0; k < src.size(); ++k) dst[k + shift] += src[k];
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Grid: return "grid";
    case Family::Cylinder: return "cylinder";
    case Family::Torus: return "torus";
    case Family::King: return "king";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "grid") return Family::Grid;
  if (name == "cylinder") return Family::Cylinder;
  if (name == "torus") return Family::Torus;
  if (name == "king") return Family::King;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

bool is_cyclic(Family f) { return f == Family::Cylinder || f == Family::Torus; }

bool compatible(const Signature& sigma, const Signature& tau, bool cyclic) {
  if (sigma.width() != tau.width()) throw std::invalid_argument("signature width mismatch");
  const int m = tau.width();
  auto occupied_at = [&](int j) {
    if (cyclic) j = (j + m) % m;
    else if (j < 0 || j >= m) return false;
    return tau[j] == CellState::Occupied;
  };
  for (int i = 0; i < m; ++i) {
    if (sigma[i] == CellState::Uncovered && tau[i] != CellState::Occupied) return false;
    if (sigma[i] == CellState::Occupied && tau[i] == CellState::Uncovered) return false;
    if (tau[i] == CellState::Covered && sigma[i] != CellState::Occupied && !occupied_at(i - 1) &&
        !occupied_at(i + 1)) {
      return false;
    }
  }
  return true;
}

TransferMatrix::TransferMatrix(int width, bool cyclic, std::vector<Signature> states,
                               std::vector<TransferEntry> entries)
    : width_(width), cyclic_(cyclic), states_(std::move(states)), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const TransferEntry& a, const TransferEntry& b) {
    return a.tau != b.tau ? a.tau < b.tau : a.sigma < b.sigma;
  });
}

std::optional<int> TransferMatrix::at(SignatureCode tau, SignatureCode sigma) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{tau, sigma},
                             [](const TransferEntry& e, const std::pair<SignatureCode, SignatureCode>& k) {
                               return e.tau != k.first ? e.tau < k.first : e.sigma < k.second;
                             });
  if (it == entries_.end() || it->tau != tau || it->sigma != sigma) return std::nullopt;
  return it->exponent;
}

nlohmann::json TransferMatrix::to_json() const {
  nlohmann::json j;
  j["width"] = width_;
  j["cyclic"] = cyclic_;
  auto& states = j["states"] = nlohmann::json::array();
  for (const auto& s : states_) states.push_back({{"code", s.code()}, {"text", s.to_string()}});
  auto& entries = j["entries"] = nlohmann::json::array();
  for (const auto& e : entries_) {
    entries.push_back({{"tau", e.tau}, {"sigma", e.sigma}, {"exponent", e.exponent}});
  }
  return j;
}

TransferMatrix build_transfer_matrix(int m, bool cyclic) {
  const auto expected = count_signatures(m, cyclic ? SignatureVariant::Cyclic : SignatureVariant::Plain);
  if (expected > kMaxMaterializedStates) {
    throw std::length_error("transfer matrix of width " + std::to_string(m) + " exceeds the size guard");
  }
  auto states = enumerate_signatures(m, cyclic);
  std::vector<TransferEntry> entries;

  std::vector<CellState> sigma(m);
  for (const auto& tau : states) {
    const int exponent = occupied_count(tau);
    auto neighbour_occupied = [&](int i) {
      auto occ = [&](int j) {
        if (cyclic) j = (j + m) % m;
        else if (j < 0 || j >= m) return false;
        return tau[j] == CellState::Occupied;
      };
      return occ(i - 1) || occ(i + 1);
    };
    // Per-position admissible predecessor cells, then a DFS over valid strings.
    std::vector<std::vector<CellState>> allowed(m);
    for (int i = 0; i < m; ++i) {
      for (auto s : {CellState::Uncovered, CellState::Covered, CellState::Occupied}) {
        if (s == CellState::Uncovered && tau[i] != CellState::Occupied) continue;
        if (s == CellState::Occupied && tau[i] == CellState::Uncovered) continue;
        if (tau[i] == CellState::Covered && s != CellState::Occupied && !neighbour_occupied(i)) continue;
        allowed[i].push_back(s);
      }
    }
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos < 0) {
        Signature s(sigma);
        if (!cyclic || is_valid(s, true)) entries.push_back({tau.code(), s.code(), exponent});
        return;
      }
      for (auto st : allowed[pos]) {
        if (pos + 1 < m) {
          auto nb = sigma[pos + 1];
          if ((st == CellState::Uncovered && nb == CellState::Occupied) ||
              (st == CellState::Occupied && nb == CellState::Uncovered)) {
            continue;
          }
        }
        sigma[pos] = st;
        self(self, pos - 1);
      }
    };
    rec(rec, m - 1);
  }
  return TransferMatrix(m, cyclic, std::move(states), std::move(entries));
}

ExtendKernel::ExtendKernel(Family family, int width)
    : family_(family), width_(width), wrap_(is_cyclic(family) && width >= 2) {
  const int limit = family == Family::King ? kMaxWidth - 1 : kMaxWidth;
  if (width < 1 || width > limit) {
    throw std::out_of_range("width " + std::to_string(width) + " outside 1.." + std::to_string(limit) +
                            " for " + std::string(family_name(family)));
  }
}

std::optional<SignatureCode> ExtendKernel::extend(SignatureCode window, int column, bool occupy) const {
  return family_ == Family::King ? extend_king(window, column, occupy)
                                 : extend_plain(window, column, occupy);
}

std::optional<SignatureCode> ExtendKernel::extend_plain(SignatureCode w, int c, bool occupy) const {
  const int m = width_;
  const int at = c - 1;
  const int above = digit(w, at);
  const bool has_left = c >= 2;
  const bool closes_ring = wrap_ && c == m;

  if (occupy) {
    w = with_digit(w, at, above, kO);
    if (has_left) {
      const int left = digit(w, at - 1);
      if (left == kU) w = with_digit(w, at - 1, kU, kC);
    }
    if (closes_ring) {
      const int first = digit(w, 0);
      if (first == kU) w = with_digit(w, 0, kU, kC);
    }
    return w;
  }

  if (above == kU) return std::nullopt;
  bool covered = above == kO;
  if (has_left && digit(w, at - 1) == kO) covered = true;
  if (closes_ring && digit(w, 0) == kO) covered = true;
  return with_digit(w, at, above, covered ? kC : kU);
}

std::optional<SignatureCode> ExtendKernel::extend_king(SignatureCode w, int c, bool occupy) const {
  const int m = width_;
  const int at = c - 1;  // remembered north-west slot, overwritten by the new cell
  const int nw = digit(w, at);
  const int north = digit(w, at + 1);
  const bool has_left = c >= 2;
  const bool has_ne = c < m;

  if (occupy) {
    w = with_digit(w, at, nw, kO);
    if (has_left && digit(w, at - 1) == kU) w = with_digit(w, at - 1, kU, kC);
    if (north == kU) w = with_digit(w, at + 1, kU, kC);
    if (has_ne && digit(w, at + 2) == kU) w = with_digit(w, at + 2, kU, kC);
  } else {
    if (nw == kU) return std::nullopt;
    bool covered = nw == kO || north == kO;
    if (has_left && digit(w, at - 1) == kO) covered = true;
    if (has_ne && digit(w, at + 2) == kO) covered = true;
    w = with_digit(w, at, nw, covered ? kC : kU);
  }

  if (c == m) {
    // The cell above column m has no further neighbours in this row.
    if (digit(w, m) == kU) return std::nullopt;
    return row_to_window(w % pow3(m));
  }
  return w;
}

SignatureCode ExtendKernel::row_to_window(SignatureCode row) const {
  return family_ == Family::King ? 1 + 3 * row : row;
}

SignatureCode ExtendKernel::window_to_row(SignatureCode window) const {
  return family_ == Family::King ? window / 3 : window;
}

int ExtendKernel::row_uncovered(SignatureCode window) const {
  SignatureCode row = window_to_row(window);
  int n = 0;
  for (int i = 0; i < width_; ++i, row /= 3) n += (row % 3) == kU;
  return n;
}

KinkedState start_state(Family family, const Signature& row) {
  ExtendKernel kernel(family, row.width());
  return {family, row.width(), 1, decode(kernel.row_to_window(row.code()), kernel.window_width())};
}

std::optional<KinkedState> extend(const KinkedState& state, bool occupy) {
  ExtendKernel kernel(state.family, state.width);
  if (state.column < 1 || state.column > state.width) throw std::out_of_range("kink column outside 1..m");
  if (state.window.width() != kernel.window_width()) throw std::invalid_argument("window width mismatch");
  auto next = kernel.extend(state.window.code(), state.column, occupy);
  if (!next) return std::nullopt;
  const int column = state.column == state.width ? 1 : state.column + 1;
  return KinkedState{state.family, state.width, column, decode(*next, kernel.window_width())};
}

RowVector apply_transfer(const TransferMatrix& a, const RowVector& v) {
  RowVector out;
  for (const auto& e : a.entries()) {
    auto it = v.find(e.sigma);
    if (it == v.end()) continue;
    add_shifted(out[e.tau], it->second, e.exponent);
  }
  for (auto it = out.begin(); it != out.end();) {
    trim(it->second);
    it = it->second.empty() ? out.erase(it) : std::next(it);
  }
  return out;
}

RowVector sweep_one_row(int m, bool cyclic, const RowVector& v) {
  ExtendKernel kernel(cyclic ? Family::Cylinder : Family::Grid, m);
  RowVector cur = v;
  for (int c = 1; c <= m; ++c) {
    RowVector next;
    for (const auto& [code, poly] : cur) {
      if (auto s0 = kernel.extend(code, c, false)) add_shifted(next[*s0], poly, 0);
      if (auto s1 = kernel.extend(code, c, true)) add_shifted(next[*s1], poly, 1);
    }
    cur = std::move(next);
  }
  for (auto it = cur.begin(); it != cur.end();) {
    trim(it->second);
    it = it->second.empty() ? cur.erase(it) : std::next(it);
  }
  return cur;
}

bool row_step_equivalence_check(int m, bool cyclic, const RowVector& v) {
  const auto matrix = build_transfer_matrix(m, cyclic);
  if (matrix.states().size() > 10000) throw std::length_error("equivalence check size guard");
  RowVector clean;
  for (const auto& [code, poly] : v) {
    auto p = poly;
    trim(p);
    if (!p.empty()) clean.emplace(code, std::move(p));
  }
  return apply_transfer(matrix, clean) == sweep_one_row(m, cyclic, clean);
}

}  // namespace domcount
