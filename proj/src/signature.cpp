#include "domcount/signature.hpp"

#include <array>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace domcount {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

constexpr std::array<SignatureCode, kMaxWidth + 1> make_pow3() {
  std::array<SignatureCode, kMaxWidth + 1> p{};
  p[0] = 1;
  for (int i = 1; i <= kMaxWidth; ++i) p[i] = p[i - 1] * 3;
  return p;
}

constexpr auto kPow3 = make_pow3();

void check_width(int m) {
  if (m < 1 || m > kMaxWidth) {
    throw std::out_of_range("signature width " + std::to_string(m) + " outside 1.." +
                            std::to_string(kMaxWidth));
  }
}

bool forbidden(CellState a, CellState b) {
  return (a == CellState::Uncovered && b == CellState::Occupied) ||
         (a == CellState::Occupied && b == CellState::Uncovered);
}

std::uint64_t plain_count(int m) {
  // a(-1) = 1, a(0) = 1 reproduce a(1) = 3.
  std::uint64_t prev = 1, cur = 1;
  for (int i = 1; i <= m; ++i) {
    std::uint64_t next = 2 * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::uint64_t cyclic_count(int m) {
  std::array<std::uint64_t, 3> base{3, 3, 7};
  if (m < 3) return base[m];
  std::uint64_t a0 = 3, a1 = 3, a2 = 7;
  for (int i = 3; i <= m; ++i) {
    std::uint64_t next = 3 * a2 - a1 - a0;
    a0 = a1;
    a1 = a2;
    a2 = next;
  }
  return a2;
}

std::uint64_t kinked_count(int m, int c) {
  if (c < 1 || c > m) throw std::out_of_range("kink column outside 1..m");
  std::uint64_t prev = 1, cur = 1;
  for (int i = 1; i <= m; ++i) {
    std::uint64_t next = (i == c) ? 3 * cur : 2 * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Real sqrt2() { return boost::multiprecision::sqrt(Real(2)); }

std::uint64_t round_to_u64(const Real& x) {
  return static_cast<std::uint64_t>(boost::multiprecision::round(x));
}

}  // namespace

SignatureCode pow3(int k) {
  if (k < 0 || k > kMaxWidth) throw std::out_of_range("pow3 exponent");
  return kPow3[k];
}

char cell_char(CellState s) {
  switch (s) {
    case CellState::Uncovered: return 'o';
    case CellState::Covered: return 'c';
    case CellState::Occupied: return 'x';
  }
  return '?';
}

CellState cell_from_char(char ch) {
  switch (ch) {
    case 'o': return CellState::Uncovered;
    case 'c': return CellState::Covered;
    case 'x': return CellState::Occupied;
    default: throw std::invalid_argument(std::string("bad signature character '") + ch + "'");
  }
}

Signature::Signature(std::vector<CellState> cells) : cells_(std::move(cells)) {
  check_width(width());
}

Signature Signature::from_code(SignatureCode code, int width) { return decode(code, width); }

Signature Signature::parse(std::string_view text) {
  std::vector<CellState> cells;
  cells.reserve(text.size());
  for (char ch : text) cells.push_back(cell_from_char(ch));
  return Signature(std::move(cells));
}

Signature Signature::all_covered(int width) {
  check_width(width);
  return Signature(std::vector<CellState>(width, CellState::Covered));
}

SignatureCode Signature::code() const { return encode(cells_); }

std::string Signature::to_string() const {
  std::string s;
  s.reserve(cells_.size());
  for (auto c : cells_) s.push_back(cell_char(c));
  return s;
}

SignatureCode encode(std::span<const CellState> cells) {
  check_width(static_cast<int>(cells.size()));
  SignatureCode code = 0;
  for (std::size_t i = cells.size(); i-- > 0;) code = code * 3 + static_cast<SignatureCode>(cells[i]);
  return code;
}

Signature decode(SignatureCode code, int width) {
  check_width(width);
  if (code >= kPow3[width]) throw std::out_of_range("signature code exceeds 3^width");
  std::vector<CellState> cells(width);
  for (int i = 0; i < width; ++i) {
    cells[i] = static_cast<CellState>(code % 3);
    code /= 3;
  }
  return Signature(std::move(cells));
}

bool is_valid(const Signature& sig, bool cyclic, std::optional<KinkSpec> kink) {
  const int m = sig.width();
  // A kink at column c (2..m) splits the string between c-1 and c, and on a
  // cylinder also between m and 1.
  const bool split = kink && kink->column >= 2;
  for (int i = 0; i + 1 < m; ++i) {
    if (split && i + 2 == kink->column) continue;
    if (forbidden(sig[i], sig[i + 1])) return false;
  }
  if (cyclic && m >= 2 && !split && forbidden(sig[m - 1], sig[0])) return false;
  return true;
}

std::vector<Signature> enumerate_signatures(int m, bool cyclic) {
  check_width(m);
  // Depth-first over positions; codes are little-endian so we build the
  // most significant digit (last cell) first to emit in ascending order.
  std::vector<Signature> out;
  std::vector<CellState> cells(m);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos < 0) {
      Signature s(cells);
      if (!cyclic || is_valid(s, true)) out.push_back(std::move(s));
      return;
    }
    for (int d = 0; d < 3; ++d) {
      auto st = static_cast<CellState>(d);
      if (pos + 1 < m && forbidden(st, cells[pos + 1])) continue;
      cells[pos] = st;
      self(self, pos - 1);
    }
  };
  rec(rec, m - 1);
  return out;
}

std::uint64_t count_signatures(int m, SignatureVariant variant, int kink_column) {
  if (m < 1) throw std::out_of_range("signature width must be positive");
  switch (variant) {
    case SignatureVariant::Plain: return plain_count(m);
    case SignatureVariant::Cyclic: return cyclic_count(m);
    case SignatureVariant::Kinked: return kinked_count(m, kink_column);
    case SignatureVariant::ReflectionReduced: return (plain_count(m) + plain_count((m + 1) / 2)) / 2;
  }
  return 0;
}

Signature reflect(const Signature& sig) {
  std::vector<CellState> cells(sig.cells().rbegin(), sig.cells().rend());
  return Signature(std::move(cells));
}

Signature rotate(const Signature& sig, int k) {
  if (!is_valid(sig, true)) throw std::invalid_argument("rotate requires a cyclic-valid signature");
  const int m = sig.width();
  k = ((k % m) + m) % m;
  std::vector<CellState> cells(m);
  for (int i = 0; i < m; ++i) cells[(i + k) % m] = sig[i];
  return Signature(std::move(cells));
}

int uncovered_count(const Signature& sig) {
  int n = 0;
  for (auto c : sig.cells()) n += c == CellState::Uncovered;
  return n;
}

int occupied_count(const Signature& sig) {
  int n = 0;
  for (auto c : sig.cells()) n += c == CellState::Occupied;
  return n;
}

double CountingFormulas::lambda() { return static_cast<double>(1 + sqrt2()); }

CountingFormulas::Coefficients CountingFormulas::coefficients() {
  const Real s = sqrt2();
  const Real a0 = 1, a1 = 3;
  const Real c0 = 3, c1 = 3, c2 = 7;
  Coefficients k{};
  k.a_minus = static_cast<double>(((1 + s) * a0 - a1) / (2 * s));
  k.a_plus = static_cast<double>((a1 - (1 - s) * a0) / (2 * s));
  k.c_one = static_cast<double>(c0 / 2 + c1 - c2 / 2);
  k.c_minus = static_cast<double>((2 + s) / (4 * s) * c0 - (2 + 2 * s) / (4 * s) * c1 + c2 / 4);
  k.c_plus = static_cast<double>(-(2 - s) / (4 * s) * c0 + (2 - 2 * s) / (4 * s) * c1 + c2 / 4);
  return k;
}

std::uint64_t CountingFormulas::plain_closed_form(int m) {
  const Real s = sqrt2();
  const Real a0 = 1, a1 = 3;
  const Real a_minus = ((1 + s) * a0 - a1) / (2 * s);
  const Real a_plus = (a1 - (1 - s) * a0) / (2 * s);
  return round_to_u64(a_minus * pow(1 - s, m) + a_plus * pow(1 + s, m));
}

std::uint64_t CountingFormulas::cyclic_closed_form(int m) {
  const Real s = sqrt2();
  const Real c0 = 3, c1 = 3, c2 = 7;
  const Real c_one = c0 / 2 + c1 - c2 / 2;
  const Real c_minus = (2 + s) / (4 * s) * c0 - (2 + 2 * s) / (4 * s) * c1 + c2 / 4;
  const Real c_plus = -(2 - s) / (4 * s) * c0 + (2 - 2 * s) / (4 * s) * c1 + c2 / 4;
  return round_to_u64(c_one + c_minus * pow(1 - s, m) + c_plus * pow(1 + s, m));
}

}  // namespace domcount
