#include "domcount/ring.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace domcount {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

bool exceeds_power_of_two(const BigInt& x, std::uint64_t exponent) {
  if (x <= 0) return false;
  const auto top = boost::multiprecision::msb(x);
  if (top != exponent) return top > exponent;
  return boost::multiprecision::lsb(x) != top;  // equal to 2^exponent exactly otherwise
}

}  // namespace

BigInt eval_at_one(const ExactPolynomial& a) {
  BigInt s = 0;
  for (const auto& c : a.coefficients()) s += c;
  return s;
}

std::uint32_t eval_at_one(const ModPolynomial& a) {
  std::uint32_t s = 0;
  for (auto c : a.coefficients()) a.ring().add_to(s, c);
  return s;
}

ModPolynomial reduce(const ExactPolynomial& a, ModRing ring) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  for (const auto& c : a.coefficients()) out.push_back(ring.from(c));
  return ModPolynomial(ring, std::move(out));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

BigInt ModulusSet::product() const {
  BigInt p = 1;
  for (auto q : primes) p *= q;
  return p;
}

ModulusSet select_moduli(std::uint64_t bit_bound, int bits) {
  if (bits < 8 || bits > 31) throw std::invalid_argument("modulus bit width must be in 8..31");
  // theta(x) < 1.01624 x bounds the total log of all primes below x.
  const double available = 1.01624 * std::ldexp(1.0, bits) / std::log(2.0);
  if (static_cast<double>(bit_bound) >= available) {
    throw std::domain_error("not enough primes below 2^" + std::to_string(bits) + " for a " +
                            std::to_string(bit_bound) + "-bit bound");
  }
  ModulusSet set;
  set.bits = bits;
  BigInt product = 1;
  for (std::uint64_t p = (std::uint64_t{1} << bits) - 1; p >= 2; --p) {
    if (!is_prime(p)) continue;
    set.primes.push_back(static_cast<std::uint32_t>(p));
    product *= p;
    if (exceeds_power_of_two(product, bit_bound)) return set;
  }
  throw std::domain_error("not enough primes below 2^" + std::to_string(bits) + " for a " +
                          std::to_string(bit_bound) + "-bit bound");
}

ExactPolynomial crt_reconstruct(std::span<const Residues> residues) {
  if (residues.empty()) throw std::invalid_argument("crt_reconstruct needs at least one modulus");
  std::vector<const Residues*> order;
  for (const auto& r : residues) order.push_back(&r);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->prime > b->prime; });

  const std::size_t len = order.front()->coefficients.size();
  std::set<std::uint32_t> seen;
  for (auto* r : order) {
    if (r->coefficients.size() != len) throw std::invalid_argument("residue vectors differ in length");
    if (!seen.insert(r->prime).second) throw std::invalid_argument("duplicate CRT modulus");
  }

  std::vector<BigInt> out(len);
  for (std::size_t k = 0; k < len; ++k) {
    BigInt x = order.front()->coefficients[k] % order.front()->prime;
    BigInt modulus = order.front()->prime;
    for (std::size_t i = 1; i < order.size(); ++i) {
      const std::uint64_t p = order[i]->prime;
      const std::uint64_t r = order[i]->coefficients[k] % p;
      const std::uint64_t x_mod = static_cast<std::uint64_t>(x % p);
      const std::uint64_t m_mod = static_cast<std::uint64_t>(modulus % p);
      const std::uint64_t inv = pow_mod(m_mod, p - 2, p);
      const std::uint64_t t = mul_mod((r + p - x_mod) % p, inv, p);
      x += modulus * t;
      modulus *= p;
    }
    out[k] = std::move(x);
  }
  return ExactPolynomial(ExactRing{}, std::move(out));
}

}  // namespace domcount
