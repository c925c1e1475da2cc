#include "domcount/golden.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#ifndef DOMCOUNT_DATA_DIR
#define DOMCOUNT_DATA_DIR "tests/data"
#endif

namespace domcount {

namespace {

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return nlohmann::json::parse(in);
}

ExactPolynomial parse_poly(const nlohmann::json& j) {
  const int low = j.at("minDegree").get<int>();
  std::vector<BigInt> coeffs(static_cast<std::size_t>(low), 0);
  for (const auto& c : j.at("coefficients")) coeffs.emplace_back(c.get<std::string>());
  ExactPolynomial p(ExactRing{}, std::move(coeffs));
  return p.trim();
}

}  // namespace

const GoldenPolynomial* GoldenData::find(Family family, int m, int n) const {
  for (const auto& p : polynomials) {
    if (p.family == family && p.m == m && p.n == n) return &p;
  }
  return nullptr;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("DOMCOUNT_DATA_DIR"); env && *env) return env;
  return DOMCOUNT_DATA_DIR;
}

GoldenData load_golden(const std::filesystem::path& dir) {
  GoldenData data;
  const auto polys = read_json(dir / "golden_polynomials.json");
  if (polys.at("version").get<int>() != 1) throw std::runtime_error("unsupported golden polynomial version");

  for (const auto& e : polys.at("errata")) {
    data.errata.push_back({parse_family(e.at("family").get<std::string>()), e.at("m").get<int>(),
                           e.at("n").get<int>(), e.at("degree").get<int>(),
                           BigInt(e.at("printed").get<std::string>()), BigInt(e.at("corrected").get<std::string>())});
  }
  for (const auto& j : polys.at("polynomials")) {
    GoldenPolynomial g{parse_family(j.at("family").get<std::string>()), j.at("m").get<int>(), j.at("n").get<int>(),
                       parse_poly(j), {}, false};
    g.printed = g.poly;
    for (const auto& e : data.errata) {
      if (e.family != g.family || e.m != g.m || e.n != g.n) continue;
      auto& c = g.poly.coefficients();
      if (static_cast<std::size_t>(e.degree) >= c.size() || c[e.degree] != e.printed) {
        throw std::runtime_error("erratum does not match the published coefficient");
      }
      c[e.degree] = e.corrected;
      g.has_erratum = true;
    }
    data.polynomials.push_back(std::move(g));
  }

  const auto tables = read_json(dir / "golden_tables.json");
  if (tables.at("version").get<int>() != 1) throw std::runtime_error("unsupported golden table version");
  data.cylinder_gamma = tables.at("cylinder_gamma").at("values").get<std::vector<std::vector<int>>>();
  for (const auto& [family, rows] : tables.at("min_dominating_counts").items()) {
    auto& dst = data.min_dominating[parse_family(family)];
    for (const auto& [n, v] : rows.items()) dst[std::stoi(n)] = BigInt(v.get<std::string>());
  }
  if (tables.contains("errata")) {
    for (const auto& e : tables.at("errata")) {
      if (e.at("table").get<std::string>() != "min_dominating_counts") throw std::runtime_error("unknown erratum table");
      TableErratum t{parse_family(e.at("family").get<std::string>()), e.at("n").get<int>(),
                     BigInt(e.at("printed").get<std::string>()), BigInt(e.at("corrected").get<std::string>())};
      auto& cell = data.min_dominating.at(t.family).at(t.n);
      if (cell != t.printed) throw std::runtime_error("erratum does not match the published count");
      cell = t.corrected;
      data.table_errata.push_back(std::move(t));
    }
  }
  for (const auto& [n, v] : tables.at("grid_square_totals").items()) {
    data.grid_square_totals[std::stoi(n)] = BigInt(v.get<std::string>());
  }
  return data;
}

}  // namespace domcount
