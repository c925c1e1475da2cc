#pragma once

// Statistics derived from polynomials and counts: domination number,
// minimum-set counts, closed-form checks, and growth constants.

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "domcount/ring.hpp"
#include "domcount/sweep.hpp"
#include "json.hpp"

namespace domcount {

using HighFloat = boost::multiprecision::cpp_bin_float_100;

struct DominationStats {
  int gamma = 0;
  BigInt n_gamma;
  BigInt total;
};

DominationStats stats_from_polynomial(const ExactPolynomial& poly);

/// King: ceil(m/3)*ceil(n/3) for all sizes. Grid: floor((m+2)(n+2)/5) - 4,
/// only known for m, n >= 16. Other families throw.
std::optional<int> gamma_closed_form(Family family, int m, int n);

struct GrowthSample {
  int m = 0;
  int n_used = 0;
  HighFloat mu_m;
};

/// (G(m,n)/G(m,n-1))^(1/m) for growing n until two successive values agree
/// to `precision_digits` digits. Throws std::runtime_error if `n_cap` rows
/// are not enough.
GrowthSample growth_rate_m(Family family, int m, int precision_digits = 30, int n_cap = 400,
                           const RunOptions& options = {});

struct Extrapolation {
  HighFloat limit;
  HighFloat error;
  bool fallback = false;  // rational tableau degenerated; polynomial used
};

/// Rational (Bulirsch-Stoer) extrapolation to x = 0. Points need distinct
/// x sorted descending; at least three.
Extrapolation bulirsch_stoer_extrapolate(const std::vector<std::pair<HighFloat, HighFloat>>& points);

/// Neville polynomial extrapolation to x = 0.
Extrapolation polynomial_extrapolate(const std::vector<std::pair<HighFloat, HighFloat>>& points);

struct GrowthEstimate {
  Family family = Family::Grid;
  std::vector<GrowthSample> samples;
  HighFloat mu;
  HighFloat error;
  bool fallback = false;
};

/// Samples m = m_min..m_max and extrapolates in x = 1/m. The torus reuses
/// the cylinder samples.
GrowthEstimate estimate_growth(Family family, int m_min, int m_max, int precision_digits = 30, int n_cap = 400,
                               const RunOptions& options = {});

/// Fits an already computed sample set (subset selection for sensitivity checks).
GrowthEstimate extrapolate_samples(Family family, std::vector<GrowthSample> samples);

std::string to_decimal(const HighFloat& x, int digits = 30);

nlohmann::json growth_report(const GrowthEstimate& estimate, int digits = 30);

}  // namespace domcount
