#pragma once

// Row compatibility, explicit transfer matrices, and the single-vertex
// extension step that the sweep engine is built on.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "domcount/signature.hpp"

namespace domcount {

enum class Family { Grid, Cylinder, Torus, King };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);
/// Cylinder and torus rows wrap around.
bool is_cyclic(Family f);

/// True iff `tau` may follow `sigma` as the next row.
bool compatible(const Signature& sigma, const Signature& tau, bool cyclic);

struct TransferEntry {
  SignatureCode tau;
  SignatureCode sigma;
  int exponent;
};

/// Sparse storage of the monomial matrix A (or its cyclic variant). Entries
/// are sorted by (tau, sigma); a missing entry is a zero.
class TransferMatrix {
 public:
  TransferMatrix(int width, bool cyclic, std::vector<Signature> states,
                 std::vector<TransferEntry> entries);

  int width() const { return width_; }
  bool cyclic() const { return cyclic_; }
  const std::vector<Signature>& states() const { return states_; }
  const std::vector<TransferEntry>& entries() const { return entries_; }

  std::optional<int> at(SignatureCode tau, SignatureCode sigma) const;

  nlohmann::json to_json() const;

 private:
  int width_;
  bool cyclic_;
  std::vector<Signature> states_;
  std::vector<TransferEntry> entries_;
};

inline constexpr std::uint64_t kMaxMaterializedStates = 100000;

TransferMatrix build_transfer_matrix(int m, bool cyclic);

/// Vertex-by-vertex extension on packed window codes.
///
/// Grid and cylinder windows have m cells: positions < c hold the current
/// row, positions >= c the previous row. King windows have m+1 cells: the
/// current row 1..c-1, then the remembered previous-row cell at column c-1
/// (a virtual covered cell when c = 1), then the previous row c..m.
class ExtendKernel {
 public:
  ExtendKernel(Family family, int width);

  Family family() const { return family_; }
  int width() const { return width_; }
  int window_width() const { return family_ == Family::King ? width_ + 1 : width_; }

  /// Places the vertex at `column` (1-based). Returns the successor window,
  /// or nullopt when the placement leaves a departing cell uncovered. After
  /// column m the window is returned in full-row form.
  std::optional<SignatureCode> extend(SignatureCode window, int column, bool occupy) const;

  /// Full-row signature code (m cells) <-> window code at column 1.
  SignatureCode row_to_window(SignatureCode row) const;
  SignatureCode window_to_row(SignatureCode window) const;

  int row_uncovered(SignatureCode window) const;

 private:
  std::optional<SignatureCode> extend_plain(SignatureCode window, int column, bool occupy) const;
  std::optional<SignatureCode> extend_king(SignatureCode window, int column, bool occupy) const;

  Family family_;
  int width_;
  bool wrap_;
};

/// Mixed-row profile with its kink position.
struct KinkedState {
  Family family = Family::Grid;
  int width = 1;
  int column = 1;
  Signature window;
};

/// Fresh-row state for a full row signature.
KinkedState start_state(Family family, const Signature& row);

std::optional<KinkedState> extend(const KinkedState& state, bool occupy);

/// Sparse row vector: full-row signature code -> polynomial coefficients
/// (index = degree). Used by the small-width equivalence harness only.
using RowVector = std::map<SignatureCode, std::vector<std::uint64_t>>;

RowVector apply_transfer(const TransferMatrix& a, const RowVector& v);
/// One full row of `extend` steps (grid or cylinder kernel).
RowVector sweep_one_row(int m, bool cyclic, const RowVector& v);

/// True iff sweeping one row via `extend` equals multiplying `v` by the
/// explicit transfer matrix.
bool row_step_equivalence_check(int m, bool cyclic, const RowVector& v);

}  // namespace domcount
