#include "doctest.h"
#include "domcount/analysis.hpp"
#include "domcount/golden.hpp"

using namespace domcount;

namespace {

using Points = std::vector<std::pair<HighFloat, HighFloat>>;

double to_double(const HighFloat& x) { return x.convert_to<double>(); }

}  // namespace

TEST_CASE("statistics of published polynomials") {
  const auto golden = load_golden();
  const auto g6 = stats_from_polynomial(golden.find(Family::Grid, 6, 6)->poly);
  CHECK(g6.gamma == 10);
  CHECK(g6.n_gamma == 288);
  CHECK(g6.total == BigInt("16031828359"));
  const auto t8 = stats_from_polynomial(golden.find(Family::Torus, 8, 8)->poly);
  CHECK(t8.gamma == 16);
  CHECK(t8.n_gamma == 129224);
  const auto k7 = stats_from_polynomial(golden.find(Family::King, 7, 7)->poly);
  CHECK(k7.gamma == 9);
  CHECK(k7.n_gamma == 243856);
  CHECK_THROWS_AS(stats_from_polynomial(ExactPolynomial(ExactRing{}, {0, 0})), std::invalid_argument);
}

TEST_CASE("stats agree with the engine") {
  for (Family f : {Family::Grid, Family::Cylinder, Family::Torus, Family::King}) {
    const GraphSpec spec{f, 4, 5};
    const auto p = compute_polynomial(spec, ExactRing{});
    const auto s = stats_from_polynomial(p);
    CHECK(s.gamma == p.min_degree());
    CHECK(s.n_gamma == p[s.gamma]);
    CHECK(s.total == count_dominating(spec));
    CHECK(s.gamma <= spec.vertices());
  }
}

TEST_CASE("closed-form domination numbers") {
  CHECK(gamma_closed_form(Family::King, 4, 4) == 4);
  CHECK(gamma_closed_form(Family::King, 8, 8) == 9);
  CHECK(gamma_closed_form(Family::Grid, 16, 16) == 60);
  CHECK_FALSE(gamma_closed_form(Family::Grid, 15, 16).has_value());
  CHECK_THROWS_AS(gamma_closed_form(Family::Torus, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(gamma_closed_form(Family::Cylinder, 5, 5), std::invalid_argument);
}

TEST_CASE("king domination numbers equal the closed form up to 12x12") {
  for (int m = 1; m <= 12; ++m) {
    const auto terms = row_minimum_terms(Family::King, m, 12);
    for (int n = 1; n <= 12; ++n) CHECK(terms[n - 1].degree == *gamma_closed_form(Family::King, m, n));
  }
}

TEST_CASE("cylinder domination numbers match the published table up to 12") {
  const auto golden = load_golden();
  for (int m = 1; m <= 12; ++m) {
    const auto terms = row_minimum_terms(Family::Cylinder, m, 12);
    for (int n = 1; n <= 12; ++n) {
      INFO("m=" << m << " n=" << n);
      CHECK(terms[n - 1].degree == golden.cylinder_gamma[n - 1][m - 1]);
    }
  }
  CHECK(golden.cylinder_gamma[4][4] == 7);
}

TEST_CASE("extrapolation is exact on constants and low-order rational data") {
  Points constant;
  for (int m = 3; m <= 8; ++m) constant.emplace_back(HighFloat(1) / m, HighFloat(2.5));
  const auto c = bulirsch_stoer_extrapolate(constant);
  CHECK(c.limit == HighFloat(2.5));
  CHECK(c.error == 0);

  Points rational;
  for (int m = 4; m <= 10; ++m) {
    const HighFloat x = HighFloat(1) / m;
    rational.emplace_back(x, 1 / (1 + x));
  }
  const auto r = bulirsch_stoer_extrapolate(rational);
  CHECK_FALSE(r.fallback);
  CHECK(to_double(abs(r.limit - 1)) < 1e-8);

  Points mobius;
  for (int m = 3; m <= 9; ++m) {
    const HighFloat x = HighFloat(1) / m;
    mobius.emplace_back(x, (2 + 3 * x) / (1 - x / 2));
  }
  CHECK(to_double(abs(bulirsch_stoer_extrapolate(mobius).limit - 2)) < 1e-20);

  Points quadratic;
  for (int m = 3; m <= 9; ++m) {
    const HighFloat x = HighFloat(1) / m;
    quadratic.emplace_back(x, 1.5 - x + 4 * x * x);
  }
  CHECK(to_double(abs(polynomial_extrapolate(quadratic).limit - 1.5)) < 1e-40);
  CHECK(to_double(abs(bulirsch_stoer_extrapolate(quadratic).limit - 1.5)) < 1e-12);
}

TEST_CASE("extrapolation error bound covers the last corrections") {
  Points pts;
  for (int m = 3; m <= 10; ++m) {
    const HighFloat x = HighFloat(1) / m;
    pts.emplace_back(x, 2 - x + boost::multiprecision::exp(-1 / x));
  }
  const auto e = bulirsch_stoer_extrapolate(pts);
  CHECK(e.error > 0);
  CHECK(abs(e.limit - 2) <= e.error);
}

TEST_CASE("degenerate rational tableau falls back to polynomial extrapolation") {
  // A zero sample after a nonzero one leaves a zero gap in the first column.
  Points pts = {{HighFloat(1) / 3, HighFloat(1)}, {HighFloat(1) / 4, HighFloat(0)}, {HighFloat(1) / 5, HighFloat(1)}};
  const auto e = bulirsch_stoer_extrapolate(pts);
  CHECK(e.fallback);
  CHECK(e.limit == polynomial_extrapolate(pts).limit);
}

TEST_CASE("extrapolation input checks") {
  Points two = {{HighFloat(1), HighFloat(1)}, {HighFloat(0.5), HighFloat(1)}};
  CHECK_THROWS_AS(bulirsch_stoer_extrapolate(two), std::invalid_argument);
  Points ascending = {{HighFloat(0.1), HighFloat(1)}, {HighFloat(0.2), HighFloat(1)}, {HighFloat(0.3), HighFloat(1)}};
  CHECK_THROWS_AS(bulirsch_stoer_extrapolate(ascending), std::invalid_argument);
}

TEST_CASE("growth rate of width-1 strips") {
  const auto s = growth_rate_m(Family::Grid, 1, 40, 400);
  // G(1,n) satisfies G(n) = G(n-1) + G(n-2) + G(n-3); the ratio tends to
  // the real root of t^3 = t^2 + t + 1.
  const HighFloat t = s.mu_m;
  CHECK(to_double(abs(t * t * t - t * t - t - 1)) < 1e-35);
  CHECK(s.n_used > 10);
}

TEST_CASE("growth rates lie in (1, 2) and are stable under a larger row cap") {
  const auto k6 = growth_rate_m(Family::King, 6, 30, 200);
  CHECK(k6.mu_m > HighFloat(1.99));
  CHECK(k6.mu_m < HighFloat(2));

  const auto a = growth_rate_m(Family::Grid, 5, 25, 200);
  const auto b = growth_rate_m(Family::Grid, 5, 25, 400);
  CHECK(to_double(abs(a.mu_m - b.mu_m)) < 1e-20);
  CHECK(a.mu_m > 1);
  CHECK(a.mu_m < 2);

  CHECK_THROWS_AS(growth_rate_m(Family::Grid, 4, 30, 5), std::runtime_error);
  CHECK(growth_rate_m(Family::Torus, 4, 20).mu_m == growth_rate_m(Family::Cylinder, 4, 20).mu_m);
}

TEST_CASE("grid growth rates increase with width") {
  HighFloat prev = 0;
  for (int m = 2; m <= 7; ++m) {
    const auto s = growth_rate_m(Family::Grid, m, 20);
    CHECK(s.mu_m > prev);
    prev = s.mu_m;
  }
}

TEST_CASE("growth report layout") {
  const auto est = estimate_growth(Family::Grid, 3, 6, 20, 200);
  const auto j = growth_report(est, 20);
  CHECK(j.at("family") == "grid");
  CHECK(j.at("samples").size() == 4);
  CHECK(j.at("samples")[0].at("m") == 3);
  CHECK(j.at("samples")[0].at("mu_m").get<std::string>().rfind("1.92", 0) == 0);
  CHECK(j.contains("mu"));
  CHECK(j.contains("error"));
  CHECK_THROWS_AS(estimate_growth(Family::Grid, 3, 4), std::invalid_argument);
}
