#pragma once

// Row-by-row, vertex-by-vertex transfer sweep over ordered configuration
// lists. The engine is generic over the per-signature weight: dense
// polynomials, plain counts (z = 1), or the lowest-order term only.

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "domcount/ring.hpp"
#include "domcount/signature.hpp"
#include "domcount/transfer.hpp"

namespace domcount {

struct GraphSpec {
  Family family = Family::Grid;
  int m = 1;  // row width; cyclic for cylinder and torus
  int n = 1;  // number of rows; cyclic for torus

  int vertices() const { return m * n; }
  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

void validate(const GraphSpec& spec);

/// Raised when a run would exceed its configured signature or memory cap.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepLimits {
  std::uint64_t max_signatures = 0;    // 0 = unlimited
  std::uint64_t max_memory_bytes = 0;  // 0 = unlimited
};

/// Reads DOMCOUNT_MAX_MEM (bytes, optional K/M/G suffix) if set.
std::optional<std::uint64_t> max_memory_from_env();
std::uint64_t parse_byte_size(const std::string& text);

// --- weight policies -------------------------------------------------------

template <class Ring>
struct PolynomialWeights {
  using value_type = typename Ring::value_type;

  Ring ring;
  std::size_t max_degree = 0;

  std::size_t stride() const { return max_degree + 1; }
  value_type zero() const { return ring.zero(); }
  void set_one(value_type* dst) const {
    std::fill(dst, dst + stride(), ring.zero());
    dst[0] = ring.one();
  }
  /// Adds src (or z*src) into dst; only the first `active` coefficients of
  /// src can be nonzero.
  void accumulate(value_type* dst, const value_type* src, bool occupied, std::size_t active) const {
    const std::size_t n = std::min(active, stride() - (occupied ? 1 : 0));
    value_type* out = dst + (occupied ? 1 : 0);
    for (std::size_t k = 0; k < n; ++k) ring.add_to(out[k], src[k]);
  }
};

template <class Ring>
struct CountWeights {
  using value_type = typename Ring::value_type;

  Ring ring;

  std::size_t stride() const { return 1; }
  value_type zero() const { return ring.zero(); }
  void set_one(value_type* dst) const { dst[0] = ring.one(); }
  void accumulate(value_type* dst, const value_type* src, bool, std::size_t) const {
    ring.add_to(dst[0], src[0]);
  }
};

/// Lowest nonzero term c*z^d of a polynomial; count 0 means the zero
/// polynomial.
struct MinTerm {
  int degree = INT_MAX;
  BigInt count = 0;

  friend bool operator==(const MinTerm&, const MinTerm&) = default;
};

struct MinTermWeights {
  using value_type = MinTerm;

  std::size_t stride() const { return 1; }
  value_type zero() const { return {}; }
  void set_one(value_type* dst) const { *dst = MinTerm{0, 1}; }
  void accumulate(value_type* dst, const value_type* src, bool occupied, std::size_t) const {
    if (src->count == 0) return;
    const int d = src->degree + (occupied ? 1 : 0);
    if (dst->count == 0 || d < dst->degree) {
      dst->degree = d;
      dst->count = src->count;
    } else if (d == dst->degree) {
      dst->count += src->count;
    }
  }
};

// --- configuration list ----------------------------------------------------

/// Signature code -> weight, iterated in ascending code order. Weights are
/// stored contiguously, `stride` values per entry.
template <class Value>
class ConfigurationList {
 public:
  ConfigurationList() = default;
  explicit ConfigurationList(std::size_t stride) : stride_(stride) {}

  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  std::size_t stride() const { return stride_; }
  const std::vector<SignatureCode>& codes() const { return codes_; }
  SignatureCode code(std::size_t i) const { return codes_[i]; }

  std::span<const Value> weight(std::size_t i) const {
    return {values_.data() + i * stride_, stride_};
  }

  std::optional<std::size_t> find(SignatureCode code) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) return std::nullopt;
    return static_cast<std::size_t>(it - codes_.begin());
  }

  std::vector<SignatureCode>& mutable_codes() { return codes_; }
  std::vector<Value>& mutable_values() { return values_; }

  void swap(ConfigurationList& other) noexcept {
    codes_.swap(other.codes_);
    values_.swap(other.values_);
    std::swap(stride_, other.stride_);
  }

 private:
  std::size_t stride_ = 1;
  std::vector<SignatureCode> codes_;
  std::vector<Value> values_;
};

/// Canonical representative of a full-row code under mirror reflection
/// (and rotation when `cyclic`).
SignatureCode canonical_row(SignatureCode row, int width, bool cyclic);

struct SweepOptions {
  SweepLimits limits;
  /// Merge mirror images (and rotations on a cylinder) after each row.
  /// Only valid when the seed is invariant under those maps.
  bool symmetric_rows = false;
  std::function<void(int row, std::size_t live)> on_row;
};

template <class Weights>
class Sweep {
 public:
  using value_type = typename Weights::value_type;
  using List = ConfigurationList<value_type>;

  Sweep(Family family, int width, Weights weights, SweepOptions options = {})
      : kernel_(family == Family::Torus ? Family::Cylinder : family, width),
        weights_(std::move(weights)),
        options_(std::move(options)),
        list_(weights_.stride()),
        next_(weights_.stride()) {}

  const ExtendKernel& kernel() const { return kernel_; }
  const Weights& weights() const { return weights_; }
  int width() const { return kernel_.width(); }
  int rows_done() const { return rows_done_; }
  int column() const { return column_; }
  std::size_t vertices_placed() const { return placed_; }
  const List& configurations() const { return list_; }

  /// Starts from a single full-row signature with weight one.
  void seed(SignatureCode row) {
    list_ = List(weights_.stride());
    list_.mutable_codes().push_back(kernel_.row_to_window(row));
    list_.mutable_values().assign(weights_.stride(), weights_.zero());
    weights_.set_one(list_.mutable_values().data());
    rows_done_ = 0;
    column_ = 1;
    placed_ = 0;
  }

  /// Resumes from a stored full-row list.
  void restore(List list, int rows_done) {
    list_ = std::move(list);
    rows_done_ = rows_done;
    column_ = 1;
    placed_ = static_cast<std::size_t>(rows_done) * width();
  }

  void advance_cell() {
    const int c = column_;
    const bool row_end = c == width();
    const bool fold = options_.symmetric_rows && row_end;
    const bool cyclic = kernel_.family() == Family::Cylinder;

    successors_.clear();
    successors_.reserve(2 * list_.size());
    const auto& codes = list_.codes();
    for (std::uint32_t i = 0; i < codes.size(); ++i) {
      for (bool occ : {false, true}) {
        auto s = kernel_.extend(codes[i], c, occ);
        if (!s) continue;
        SignatureCode code = *s;
        if (fold) {
          code = kernel_.row_to_window(canonical_row(kernel_.window_to_row(code), width(), cyclic));
        }
        successors_.push_back({code, i, occ});
      }
    }
    std::sort(successors_.begin(), successors_.end(),
              [](const Successor& a, const Successor& b) { return a.code < b.code; });

    std::size_t unique = 0;
    for (std::size_t i = 0; i < successors_.size(); ++i) {
      if (i == 0 || successors_[i].code != successors_[i - 1].code) ++unique;
    }
    check_limits(unique);

    const std::size_t stride = weights_.stride();
    auto& out_codes = next_.mutable_codes();
    auto& out_values = next_.mutable_values();
    out_codes.clear();
    out_codes.reserve(unique);
    out_values.assign(unique * stride, weights_.zero());
    const std::size_t active = std::min(placed_ + 1, stride);
    const value_type* src = list_.mutable_values().data();
    for (const auto& s : successors_) {
      if (out_codes.empty() || out_codes.back() != s.code) out_codes.push_back(s.code);
      value_type* dst = out_values.data() + (out_codes.size() - 1) * stride;
      weights_.accumulate(dst, src + static_cast<std::size_t>(s.source) * stride, s.occupied, active);
    }
    list_.swap(next_);

    ++placed_;
    if (row_end) {
      column_ = 1;
      ++rows_done_;
      if (options_.on_row) options_.on_row(rows_done_, list_.size());
    } else {
      ++column_;
    }
  }

  void advance_row() {
    do {
      advance_cell();
    } while (column_ != 1);
  }

  /// Weight stored for a full-row signature, if present. Full rows only.
  std::optional<std::vector<value_type>> entry(SignatureCode row) const {
    require_full_row();
    auto i = list_.find(kernel_.row_to_window(row));
    if (!i) return std::nullopt;
    auto w = list_.weight(*i);
    return std::vector<value_type>(w.begin(), w.end());
  }

  /// Sum of weights over full-row signatures with no uncovered cell.
  std::vector<value_type> dominating_sum() const {
    require_full_row();
    std::vector<value_type> total(weights_.stride(), weights_.zero());
    const std::size_t active = std::min(placed_ + 1, weights_.stride());
    for (std::size_t i = 0; i < list_.size(); ++i) {
      if (kernel_.row_uncovered(list_.code(i)) != 0) continue;
      weights_.accumulate(total.data(), list_.weight(i).data(), false, active);
    }
    return total;
  }

 private:
  void require_full_row() const {
    if (column_ != 1) throw std::logic_error("sweep is in the middle of a row");
  }

  void check_limits(std::size_t unique) const {
    const auto& lim = options_.limits;
    if (lim.max_signatures && unique > lim.max_signatures) {
      throw GuardExceeded("live signatures " + std::to_string(unique) + " exceed the cap of " +
                          std::to_string(lim.max_signatures));
    }
    if (lim.max_memory_bytes) {
      const std::uint64_t per_entry = sizeof(SignatureCode) + weights_.stride() * sizeof(value_type);
      const std::uint64_t estimate = per_entry * (unique + list_.size()) + successors_.size() * 16;
      if (estimate > lim.max_memory_bytes) {
        throw GuardExceeded("estimated memory " + std::to_string(estimate) + " bytes exceeds the cap of " +
                            std::to_string(lim.max_memory_bytes));
      }
    }
  }

  ExtendKernel kernel_;
  Weights weights_;
  SweepOptions options_;
  List list_;
  List next_;
  int rows_done_ = 0;
  int column_ = 1;
  std::size_t placed_ = 0;

  struct Successor {
    SignatureCode code;
    std::uint32_t source;
    bool occupied;
  };
  std::vector<Successor> successors_;  // reused across steps
};

// --- high-level runs -------------------------------------------------------

struct RunOptions {
  SweepLimits limits;
  /// Worker threads for the outer loops (torus start signatures, moduli).
  unsigned workers = 1;
  /// Fold mirror/rotation-equivalent rows (grid, cylinder, king) and torus
  /// start signatures into orbit representatives.
  bool symmetry = false;
  /// Sweep along the shorter side when the family allows it.
  bool transpose = true;
  std::string checkpoint_dir;
  std::function<void(int row, std::size_t live)> on_row;
};

/// Weighted sum over all cyclic start signatures of the diagonal entry
/// reached after `n` rows.
template <class Weights>
std::vector<typename Weights::value_type> torus_trace(int m, int n, const Weights& weights,
                                                      const RunOptions& options);

/// Width and row count actually swept for `spec` under `options`.
GraphSpec sweep_orientation(const GraphSpec& spec, const RunOptions& options);

template <class Ring>
Polynomial<Ring> domination_polynomial(const GraphSpec& spec, Ring ring, const RunOptions& options = {});

template <class Ring>
Polynomial<Ring> torus_polynomial(int m, int n, Ring ring, const RunOptions& options = {});

/// Any family; dispatches to the torus trace when needed.
template <class Ring>
Polynomial<Ring> compute_polynomial(const GraphSpec& spec, Ring ring, const RunOptions& options = {});

/// One run per prime of `select_moduli(mn + 1, bits)`, then CRT.
ExactPolynomial compute_polynomial_crt(const GraphSpec& spec, int bits, const RunOptions& options = {});

/// Total number of dominating sets, with big-integer counts per signature.
BigInt count_dominating(const GraphSpec& spec, const RunOptions& options = {});

/// Domination number and number of minimum dominating sets without the
/// full polynomial.
MinTerm minimum_term(const GraphSpec& spec, const RunOptions& options = {});

/// Totals G(m, r, 1) for r = 1..n from a single sweep (not torus).
std::vector<BigInt> row_totals(Family family, int m, int n, const RunOptions& options = {});

/// Lowest terms for r = 1..n from a single sweep (not torus).
std::vector<MinTerm> row_minimum_terms(Family family, int m, int n, const RunOptions& options = {});

// --- template implementations ----------------------------------------------

namespace detail {

/// Cyclic start signatures grouped into symmetry orbits; returns
/// (representative, multiplicity) pairs in ascending code order.
std::vector<std::pair<SignatureCode, int>> torus_starts(int m, bool symmetry);

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

template <class Weights>
std::vector<typename Weights::value_type> torus_trace(int m, int n, const Weights& weights,
                                                      const RunOptions& options) {
  using value_type = typename Weights::value_type;
  const auto starts = detail::torus_starts(m, options.symmetry);
  std::vector<std::vector<value_type>> partial(starts.size());
  SweepOptions sweep_options;
  sweep_options.limits = options.limits;
  detail::parallel_for(starts.size(), options.workers, [&](std::size_t i) {
    Sweep<Weights> sweep(Family::Cylinder, m, weights, sweep_options);
    sweep.seed(starts[i].first);
    for (int r = 0; r < n; ++r) sweep.advance_row();
    auto e = sweep.entry(starts[i].first);
    partial[i] = e ? std::move(*e) : std::vector<value_type>(weights.stride(), weights.zero());
  });
  std::vector<value_type> total(weights.stride(), weights.zero());
  const std::size_t active = weights.stride();
  for (std::size_t i = 0; i < starts.size(); ++i) {
    for (int k = 0; k < starts[i].second; ++k) weights.accumulate(total.data(), partial[i].data(), false, active);
  }
  return total;
}

}  // namespace domcount
