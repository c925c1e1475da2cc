#include <random>
#include <set>

#include "doctest.h"
#include "domcount/signature.hpp"
#include "fixtures.hpp"

using namespace domcount;

namespace {

Signature sig(const char* text) { return Signature::parse(text); }

std::uint64_t pell(int m) {
  std::uint64_t a = 1, b = 1;  // a(-1), a(0)
  for (int i = 1; i <= m; ++i) {
    const std::uint64_t c = 2 * b + a;
    a = b;
    b = c;
  }
  return b;
}

}  // namespace

TEST_CASE("encode uses little-endian base 3 with o=0 c=1 x=2") {
  CHECK(encode(sig("c").cells()) == 1);
  CHECK(encode(sig("xc").cells()) == 5);
  CHECK(encode(sig("ooo").cells()) == 0);
  CHECK(sig("xc").code() == 5);
  CHECK(decode(5, 2) == sig("xc"));
  CHECK_THROWS_AS(decode(9, 2), std::out_of_range);
  CHECK_THROWS_AS(decode(0, 41), std::out_of_range);
  CHECK_THROWS_AS(decode(0, 0), std::out_of_range);
}

TEST_CASE("encode/decode round-trips random cell strings at every width") {
  std::mt19937_64 rng(7);
  for (int m = 1; m <= kMaxWidth; ++m) {
    for (int trial = 0; trial < 10000; ++trial) {
      std::vector<CellState> cells(m);
      for (auto& c : cells) c = static_cast<CellState>(rng() % 3);
      const auto code = encode(cells);
      REQUIRE(code < pow3(m));
      REQUIRE(decode(code, m).cells().size() == cells.size());
      REQUIRE(std::equal(cells.begin(), cells.end(), decode(code, m).cells().begin()));
    }
  }
}

TEST_CASE("validity honours the cyclic wrap and kink suspension") {
  CHECK_FALSE(is_valid(sig("ox"), false));
  CHECK_FALSE(is_valid(sig("xo"), false));
  CHECK_FALSE(is_valid(sig("xco"), true));
  CHECK(is_valid(sig("xco"), false));
  CHECK(is_valid(sig("ox"), false, KinkSpec{2}));
  CHECK_FALSE(is_valid(sig("ox"), false, KinkSpec{1}));
  CHECK(is_valid(sig("cc"), true));
}

TEST_CASE("enumeration matches the transfer-matrix state labels") {
  const auto m1 = enumerate_signatures(1, false);
  CHECK(m1.size() == 3);

  const auto fx = load_fixture("transfer_matrices.json");
  auto labels = [](const nlohmann::json& t) {
    std::set<std::string> s;
    for (const auto& x : t.at("sigma")) s.insert(x.get<std::string>());
    return s;
  };
  std::set<std::string> got2, got3;
  for (const auto& s : enumerate_signatures(2, false)) got2.insert(s.to_string());
  for (const auto& s : enumerate_signatures(3, true)) got3.insert(s.to_string());
  CHECK(got2 == labels(fx.at("grid_width2")));
  CHECK(got3 == labels(fx.at("cylinder_width3")));
}

TEST_CASE("enumeration is ascending and exactly the valid strings") {
  for (int m = 1; m <= 7; ++m) {
    for (bool cyclic : {false, true}) {
      std::vector<SignatureCode> expected;
      for (SignatureCode code = 0; code < pow3(m); ++code) {
        if (is_valid(decode(code, m), cyclic)) expected.push_back(code);
      }
      std::vector<SignatureCode> got;
      for (const auto& s : enumerate_signatures(m, cyclic)) got.push_back(s.code());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("signature counts") {
  CHECK(count_signatures(5, SignatureVariant::Plain) == 99);
  CHECK(count_signatures(5, SignatureVariant::Cyclic) == 83);
  CHECK(count_signatures(3, SignatureVariant::Kinked, 2) == 21);
  CHECK(count_signatures(3, SignatureVariant::ReflectionReduced) == 12);

  const std::vector<std::uint64_t> plain = {3, 7, 17, 41, 99};
  const std::vector<std::uint64_t> cyclic = {3, 7, 15, 35, 83};
  for (int m = 1; m <= 5; ++m) {
    CHECK(count_signatures(m, SignatureVariant::Plain) == plain[m - 1]);
    CHECK(count_signatures(m, SignatureVariant::Cyclic) == cyclic[m - 1]);
  }
}

TEST_CASE("plain count follows the Pell recurrence") {
  for (int m = 1; m <= 40; ++m) CHECK(count_signatures(m, SignatureVariant::Plain) == pell(m));
}

TEST_CASE("enumeration sizes equal the recurrences up to width 12") {
  for (int m = 1; m <= 12; ++m) {
    CHECK(enumerate_signatures(m, false).size() == count_signatures(m, SignatureVariant::Plain));
    CHECK(enumerate_signatures(m, true).size() == count_signatures(m, SignatureVariant::Cyclic));
  }
}

TEST_CASE("recurrences equal the rounded closed forms") {
  for (int m = 1; m <= 40; ++m) {
    CHECK(CountingFormulas::plain_closed_form(m) == count_signatures(m, SignatureVariant::Plain));
    CHECK(CountingFormulas::cyclic_closed_form(m) == count_signatures(m, SignatureVariant::Cyclic));
  }
  CHECK(CountingFormulas::lambda() == doctest::Approx(1 + std::sqrt(2.0)));
}

TEST_CASE("kinked counts match direct enumeration") {
  for (int m = 1; m <= 12; ++m) {
    std::vector<std::uint64_t> counts(m + 1, 0);
    for (SignatureCode code = 0; code < pow3(m); ++code) {
      const auto s = decode(code, m);
      for (int c = 1; c <= m; ++c) counts[c] += is_valid(s, false, KinkSpec{c}) ? 1 : 0;
    }
    for (int c = 1; c <= m; ++c) {
      INFO("m=" << m << " c=" << c);
      CHECK(counts[c] == count_signatures(m, SignatureVariant::Kinked, c));
    }
  }
}

TEST_CASE("reflection-reduced count equals the number of mirror classes") {
  for (int m = 1; m <= 12; ++m) {
    std::set<SignatureCode> classes;
    for (const auto& s : enumerate_signatures(m, false)) classes.insert(std::min(s.code(), reflect(s).code()));
    CHECK(classes.size() == count_signatures(m, SignatureVariant::ReflectionReduced));
  }
}

TEST_CASE("reflect and rotate") {
  CHECK(reflect(sig("ocx")) == sig("xco"));
  CHECK(rotate(sig("cxc"), 1) == sig("ccx"));
  CHECK(reflect(sig("cc")) == sig("cc"));
  CHECK_THROWS(rotate(sig("xco"), 1));

  for (int m = 1; m <= 8; ++m) {
    for (const auto& s : enumerate_signatures(m, false)) {
      REQUIRE(reflect(reflect(s)) == s);
      REQUIRE(is_valid(reflect(s), false));
    }
    for (const auto& s : enumerate_signatures(m, true)) {
      REQUIRE(rotate(s, m) == s);
      for (int k = 0; k < m; ++k) REQUIRE(is_valid(rotate(s, k), true));
      REQUIRE(is_valid(reflect(s), true));
    }
  }
}

TEST_CASE("state counts") {
  CHECK(uncovered_count(sig("ocx")) == 1);
  CHECK(occupied_count(sig("ocx")) == 1);
  CHECK(uncovered_count(Signature::all_covered(5)) == 0);
  CHECK(occupied_count(Signature::all_covered(5)) == 0);
  CHECK(occupied_count(sig("xx")) == 2);
}

TEST_CASE("text form rejects unknown symbols") {
  CHECK(sig("oxc").to_string() == "oxc");
  CHECK_THROWS(Signature::parse("oqc"));
  CHECK(cell_char(CellState::Occupied) == 'x');
  CHECK(cell_from_char('c') == CellState::Covered);
}
