#include "doctest.h"
#include "domcount/format.hpp"
#include "domcount/golden.hpp"
#include "domcount/oeis.hpp"
#include "domcount/oracle.hpp"

using namespace domcount;

namespace {

ExactPolynomial exact(std::vector<BigInt> c) { return ExactPolynomial(ExactRing{}, std::move(c)); }

std::vector<std::string> terms(const char* id, int count) { return sequence_terms(find_sequence(id), count); }

}  // namespace

TEST_CASE("text rendering") {
  CHECK(polynomial_text(exact({0, 0, 0, 10, 57, 98, 80, 36, 9, 1})) ==
        "10z^3 + 57z^4 + 98z^5 + 80z^6 + 36z^7 + 9z^8 + z^9");
  CHECK(polynomial_text(exact({0, 1})) == "z");
  CHECK(polynomial_text(exact({0, 0, 6, 4, 1})) == "6z^2 + 4z^3 + z^4");
  CHECK(polynomial_text(exact({1, 2})) == "1 + 2z");
  CHECK(polynomial_text(exact({})) == "0");
}

TEST_CASE("JSON polynomials round-trip") {
  const auto p = exact({0, 0, 6, 4, 1});
  const auto j = polynomial_json(p);
  CHECK(j.at("minDegree") == 2);
  CHECK(j.at("coefficients") == nlohmann::json::array({"6", "4", "1"}));
  CHECK(polynomial_from_json(j) == p);
  CHECK(polynomial_from_json(nlohmann::json::parse(j.dump())) == p);
  const auto big = exact({0, BigInt("123456789012345678901234567890")});
  CHECK(polynomial_from_json(polynomial_json(big)) == big);
  CHECK(polynomial_from_json(polynomial_json(exact({}))) == exact({}));
}

TEST_CASE("CSV and b-file rendering") {
  const auto p = exact({0, 0, 6, 4, 1});
  CHECK(render_polynomial(p, OutputFormat::Csv) == "degree,coefficient\n2,6\n3,4\n4,1\n");
  CHECK(render_polynomial(p, OutputFormat::Bfile) == "2 6\n3 4\n4 1\n");
  CHECK(bfile_lines(1, {"1", "11"}) == "1 1\n2 11\n");
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("table rendering") {
  Table t{"gamma", Family::Cylinder, {1, 2}, {1, 2}, {{"1", "1"}, {"1", "2"}}};
  CHECK(render_table(t, OutputFormat::Csv) == "n\\m,1,2\n1,1,1\n2,1,2\n");
  const auto j = nlohmann::json::parse(render_table(t, OutputFormat::Json));
  CHECK(j.at("values")[1][1] == "2");
  CHECK_THROWS(render_table(t, OutputFormat::Bfile));
}

TEST_CASE("sequence table") {
  CHECK(terms("A001333", 5) == std::vector<std::string>{"3", "7", "17", "41", "99"});
  CHECK(find_sequence("A001333").first_index == 2);
  CHECK(terms("A133515", 4) == std::vector<std::string>{"1", "11", "291", "28661"});
  CHECK(terms("A124696", 5) == std::vector<std::string>{"3", "7", "15", "35", "83"});
  CHECK(terms("A030270", 3) == std::vector<std::string>{"3", "5", "12"});
  CHECK(terms("A075561", 6) == std::vector<std::string>{"1", "1", "1", "1", "1", "1"});
  CHECK(terms("A347554", 5) == std::vector<std::string>{"1", "4", "1", "256", "79"});
  CHECK_THROWS_AS(find_sequence("A000045"), std::invalid_argument);
  for (const auto& s : sequence_table()) CHECK_NOTHROW(sequence_terms(s, 3));
}

TEST_CASE("antidiagonal order") {
  const std::vector<std::pair<int, int>> expected = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2}, {3, 1}, {1, 4}};
  for (int k = 0; k < 7; ++k) CHECK(antidiagonal_cell(k) == expected[k]);
  // The cylinder table is not symmetric, so the order is observable.
  const auto cyl = terms("A286514", 3);
  CHECK(cyl[1] == count_dominating({Family::Cylinder, 1, 2}).str());
  CHECK(cyl[2] == count_dominating({Family::Cylinder, 2, 1}).str());
}

TEST_CASE("golden data loads with errata applied") {
  const auto g = load_golden();
  CHECK(g.polynomials.size() == 32);
  const auto* grid4 = g.find(Family::Grid, 4, 4);
  REQUIRE(grid4);
  CHECK(grid4->has_erratum);
  CHECK(grid4->printed[4] == 20);
  CHECK(grid4->poly[4] == 2);
  CHECK(eval_at_one(grid4->poly) == 28661);
  CHECK(eval_at_one(grid4->printed) == 28679);
  CHECK(grid4->poly == brute_force_polynomial({Family::Grid, 4, 4}));
  CHECK(g.grid_square_totals.at(4) == 28661);

  CHECK(g.min_dominating.at(Family::Cylinder).at(8) == 5556);
  REQUIRE(g.table_errata.size() == 1);
  CHECK(g.table_errata[0].printed == 5565);
  // The corrected entry is the lowest coefficient of the published polynomial.
  CHECK(g.find(Family::Cylinder, 8, 8)->poly[16] == 5556);

  for (const auto& p : g.polynomials) {
    if (p.n < 2) continue;
    CHECK(g.min_dominating.at(p.family).at(p.n) == p.poly[p.poly.min_degree()]);
  }
  CHECK(g.cylinder_gamma.size() == 24);
  CHECK_THROWS(load_golden("/nonexistent"));
}
