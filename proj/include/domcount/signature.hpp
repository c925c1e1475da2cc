#pragma once

// Row signatures: ternary strings over {uncovered, covered, occupied} that
// describe the frontier row of a partially built dominating set.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace domcount {

/// Digit values are part of the external encoding (codes in JSON and
/// checkpoints), so they must never be reordered.
enum class CellState : std::uint8_t { Uncovered = 0, Covered = 1, Occupied = 2 };

using SignatureCode = std::uint64_t;

inline constexpr int kMaxWidth = 40;

/// 3^k for 0 <= k <= 40.
SignatureCode pow3(int k);

char cell_char(CellState s);
CellState cell_from_char(char ch);

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<CellState> cells);

  static Signature from_code(SignatureCode code, int width);
  /// Parses the textual form "o"/"c"/"x" (uncovered/covered/occupied).
  static Signature parse(std::string_view text);
  static Signature all_covered(int width);

  int width() const { return static_cast<int>(cells_.size()); }
  SignatureCode code() const;
  std::span<const CellState> cells() const { return cells_; }
  CellState operator[](std::size_t i) const { return cells_[i]; }
  CellState& operator[](std::size_t i) { return cells_[i]; }

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<CellState> cells_;
};

/// Position of the first not-yet-filled cell of the current row (1-based).
/// The adjacency rule is suspended between columns column-1 and column.
struct KinkSpec {
  int column = 1;
};

SignatureCode encode(std::span<const CellState> cells);
Signature decode(SignatureCode code, int width);

bool is_valid(const Signature& sig, bool cyclic, std::optional<KinkSpec> kink = std::nullopt);

/// All valid signatures of width m in ascending code order.
std::vector<Signature> enumerate_signatures(int m, bool cyclic);

enum class SignatureVariant { Plain, Cyclic, Kinked, ReflectionReduced };

/// Exact signature counts from the integer recurrences. `kink_column` is
/// only read for SignatureVariant::Kinked.
std::uint64_t count_signatures(int m, SignatureVariant variant, int kink_column = 1);

Signature reflect(const Signature& sig);
/// Cyclic left shift by k positions. Requires a cyclic-valid input.
Signature rotate(const Signature& sig, int k);

int uncovered_count(const Signature& sig);
int occupied_count(const Signature& sig);

/// Closed-form coefficients of the signature-count recurrences. Evaluated
/// in extended precision; only ever used as a cross-check.
struct CountingFormulas {
  static double lambda();
  /// Rounded closed form of the plain count a(m).
  static std::uint64_t plain_closed_form(int m);
  /// Rounded closed form of the cyclic count.
  static std::uint64_t cyclic_closed_form(int m);
  /// A-, A+ fixed by a(0), a(1); C1, C-, C+ fixed by the cyclic base cases.
  struct Coefficients {
    double a_minus, a_plus, c_one, c_minus, c_plus;
  };
  static Coefficients coefficients();
};

}  // namespace domcount
