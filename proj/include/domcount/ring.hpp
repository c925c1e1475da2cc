#pragma once

// Dense univariate polynomials over two interchangeable coefficient rings:
// exact big integers and residues modulo a word-sized prime. Also prime
// selection and Chinese-Remainder reconstruction for the multi-modular path.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace domcount {

using BigInt = boost::multiprecision::cpp_int;

struct ExactRing {
  using value_type = BigInt;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from(const BigInt& x) const { return x; }
  void add_to(value_type& acc, const value_type& x) const { acc += x; }
  std::string name() const { return "exact"; }

  friend bool operator==(const ExactRing&, const ExactRing&) = default;
};

/// Residues modulo an odd prime below 2^31. Values always lie in [0, p).
struct ModRing {
  using value_type = std::uint32_t;

  std::uint32_t modulus = 2147483647u;

  value_type zero() const { return 0; }
  value_type one() const { return 1 % modulus; }
  value_type from(const BigInt& x) const {
    BigInt r = x % modulus;
    if (r < 0) r += modulus;
    return static_cast<value_type>(r);
  }
  void add_to(value_type& acc, value_type x) const {
    acc += x;
    acc = acc >= modulus ? acc - modulus : acc;
  }
  std::string name() const { return "mod " + std::to_string(modulus); }

  friend bool operator==(const ModRing&, const ModRing&) = default;
};

template <class Ring>
class Polynomial {
 public:
  using value_type = typename Ring::value_type;

  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(ring) {}
  Polynomial(Ring ring, std::vector<value_type> coefficients)
      : ring_(ring), coeffs_(std::move(coefficients)) {
    if constexpr (std::is_same_v<Ring, ModRing>) {
      for (auto& c : coeffs_) c %= ring_.modulus;
    }
  }

  const Ring& ring() const { return ring_; }
  const std::vector<value_type>& coefficients() const { return coeffs_; }
  std::vector<value_type>& coefficients() { return coeffs_; }

  std::size_t size() const { return coeffs_.size(); }
  value_type operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : ring_.zero(); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  /// Highest degree with a nonzero coefficient, or -1 for the zero polynomial.
  int degree() const {
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (coeffs_[k] != 0) return static_cast<int>(k);
    }
    return -1;
  }

  /// Lowest degree with a nonzero coefficient, or -1 for the zero polynomial.
  int min_degree() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] != 0) return static_cast<int>(k);
    }
    return -1;
  }

  Polynomial& trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    return *this;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.ring_ == b.ring_)) return false;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k] != b[k]) return false;
    }
    return true;
  }

 private:
  Ring ring_{};
  std::vector<value_type> coeffs_;
};

using ExactPolynomial = Polynomial<ExactRing>;
using ModPolynomial = Polynomial<ModRing>;

template <class Ring>
void require_same_ring(const Polynomial<Ring>& a, const Polynomial<Ring>& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("polynomial ring mismatch");
}

template <class Ring>
Polynomial<Ring> poly_add(const Polynomial<Ring>& a, const Polynomial<Ring>& b) {
  require_same_ring(a, b);
  std::vector<typename Ring::value_type> out(std::max(a.size(), b.size()), a.ring().zero());
  for (std::size_t k = 0; k < a.size(); ++k) a.ring().add_to(out[k], a[k]);
  for (std::size_t k = 0; k < b.size(); ++k) a.ring().add_to(out[k], b[k]);
  return Polynomial<Ring>(a.ring(), std::move(out));
}

/// Multiplies by z.
template <class Ring>
Polynomial<Ring> poly_shift(const Polynomial<Ring>& a) {
  std::vector<typename Ring::value_type> out(a.size() + 1, a.ring().zero());
  for (std::size_t k = 0; k < a.size(); ++k) out[k + 1] = a[k];
  return Polynomial<Ring>(a.ring(), std::move(out));
}

/// acc + src, or acc + z*src when `occupy` is set.
template <class Ring>
Polynomial<Ring> poly_scale_shift_add(const Polynomial<Ring>& acc, const Polynomial<Ring>& src, bool occupy) {
  return poly_add(acc, occupy ? poly_shift(src) : src);
}

BigInt eval_at_one(const ExactPolynomial& a);
std::uint32_t eval_at_one(const ModPolynomial& a);

ModPolynomial reduce(const ExactPolynomial& a, ModRing ring);

/// Deterministic primality for 64-bit inputs.
bool is_prime(std::uint64_t n);

struct ModulusSet {
  int bits = 16;
  std::vector<std::uint32_t> primes;  // strictly descending

  BigInt product() const;
};

/// The largest primes below 2^bits whose product exceeds 2^bit_bound.
ModulusSet select_moduli(std::uint64_t bit_bound, int bits = 16);

struct Residues {
  std::uint32_t prime;
  std::vector<std::uint32_t> coefficients;
};

/// Garner-style incremental CRT; each output coefficient is the unique
/// non-negative representative below the product of the primes.
ExactPolynomial crt_reconstruct(std::span<const Residues> residues);

}  // namespace domcount
