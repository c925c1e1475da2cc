#include <random>

#include "doctest.h"
#include "domcount/ring.hpp"

using namespace domcount;

namespace {

ExactPolynomial exact(std::vector<BigInt> c) { return ExactPolynomial(ExactRing{}, std::move(c)); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK(poly_add(exact({1, 2}), exact({0, 3})) == exact({1, 5}));

  const auto shifted = poly_shift(exact({0, 0, 6, 4, 1}));
  CHECK(shifted.min_degree() == 3);
  CHECK(shifted.degree() == 5);
  CHECK(shifted[3] == 6);

  const ModRing r7{7};
  CHECK(poly_add(ModPolynomial(r7, {6}), ModPolynomial(r7, {5})) == ModPolynomial(r7, {4}));
  CHECK_THROWS_AS(poly_add(ModPolynomial(r7, {1}), ModPolynomial(ModRing{11}, {1})), std::invalid_argument);

  CHECK(poly_scale_shift_add(exact({1}), exact({1}), true) == exact({1, 1}));
  CHECK(poly_scale_shift_add(exact({1}), exact({1}), false) == exact({2}));
}

TEST_CASE("mod-p coefficients are reduced on construction") {
  const ModPolynomial p(ModRing{7}, {13, 7, 6});
  CHECK(p.coefficients() == std::vector<std::uint32_t>{6, 0, 6});
  CHECK(ModRing{7}.from(BigInt(-1)) == 6);
}

TEST_CASE("degrees and trimming") {
  ExactPolynomial p = exact({0, 0, 3, 0, 0});
  CHECK(p.min_degree() == 2);
  CHECK(p.degree() == 2);
  CHECK(p.trim().size() == 3);
  CHECK(exact({}).degree() == -1);
  CHECK(exact({0, 0}).min_degree() == -1);
  CHECK(exact({0, 0}).is_zero());
  CHECK(exact({1, 2}) == exact({1, 2, 0}));
}

TEST_CASE("evaluation at one") {
  CHECK(eval_at_one(exact({0, 0, 6, 4, 1})) == 11);
  CHECK(eval_at_one(exact({0, 0, 0, 10, 57, 98, 80, 36, 9, 1})) == 291);
  CHECK(eval_at_one(exact({})) == 0);
  CHECK(eval_at_one(ModPolynomial(ModRing{7}, {6, 6})) == 5);
  const auto p = exact({3, 1, 4, 1, 5});
  CHECK(eval_at_one(poly_shift(p)) == eval_at_one(p));
}

TEST_CASE("primality") {
  CHECK(is_prime(65521));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(65535));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("modulus selection") {
  CHECK(select_moduli(25, 16).primes == std::vector<std::uint32_t>{65521, 65519});
  CHECK(select_moduli(1, 16).primes == std::vector<std::uint32_t>{65521});
  CHECK_THROWS_AS(select_moduli(1000000000, 16), std::domain_error);
  CHECK_THROWS_AS(select_moduli(10, 7), std::invalid_argument);
  CHECK_THROWS_AS(select_moduli(10, 32), std::invalid_argument);

  for (std::uint64_t bound : {1, 31, 32, 33, 100, 257, 1000}) {
    for (int bits : {8, 16, 31}) {
      if (bits == 8 && bound > 200) continue;
      const auto set = select_moduli(bound, bits);
      CHECK(set.product() > BigInt(1) << bound);
      // Dropping the smallest prime must break the bound (the set is minimal).
      BigInt without = set.product() / set.primes.back();
      CHECK(without <= BigInt(1) << bound);
      for (std::size_t i = 0; i < set.primes.size(); ++i) {
        CHECK(is_prime(set.primes[i]));
        CHECK(set.primes[i] < (1ull << bits));
        if (i) CHECK(set.primes[i] < set.primes[i - 1]);
      }
    }
  }
}

TEST_CASE("CRT reconstruction examples") {
  std::vector<Residues> r = {{7, {3}}, {11, {10}}};
  CHECK(crt_reconstruct(r) == exact({10}));

  const BigInt total("10982565");
  std::vector<Residues> r2 = {{65521, {static_cast<std::uint32_t>(total % 65521)}},
                              {65519, {static_cast<std::uint32_t>(total % 65519)}}};
  CHECK(crt_reconstruct(r2) == exact({total}));

  std::vector<Residues> single = {{65521, {1234}}};
  CHECK(crt_reconstruct(single) == exact({1234}));

  std::vector<Residues> bad = {{7, {1, 2}}, {11, {1}}};
  CHECK_THROWS_AS(crt_reconstruct(bad), std::invalid_argument);
  std::vector<Residues> dup = {{7, {1}}, {7, {1}}};
  CHECK_THROWS_AS(crt_reconstruct(dup), std::invalid_argument);
  CHECK_THROWS_AS(crt_reconstruct({}), std::invalid_argument);
}

TEST_CASE("residues then CRT is the identity for coefficients below 2^60") {
  std::mt19937_64 rng(3);
  const auto moduli = select_moduli(61, 16);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> coeffs(1 + rng() % 12);
    for (auto& c : coeffs) c = BigInt(rng() >> 4);
    const auto p = exact(coeffs);
    std::vector<Residues> res;
    for (auto q : moduli.primes) res.push_back({q, reduce(p, ModRing{q}).coefficients()});
    REQUIRE(crt_reconstruct(res) == p);
  }
}
