#include "domcount/analysis.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace domcount {

DominationStats stats_from_polynomial(const ExactPolynomial& poly) {
  const int low = poly.min_degree();
  if (low < 0) throw std::invalid_argument("zero polynomial has no domination number");
  DominationStats s;
  s.gamma = low;
  s.n_gamma = poly[static_cast<std::size_t>(low)];
  s.total = eval_at_one(poly);
  return s;
}

std::optional<int> gamma_closed_form(Family family, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("graph dimensions must be positive");
  switch (family) {
    case Family::King:
      return ((m + 2) / 3) * ((n + 2) / 3);
    case Family::Grid:
      if (m < 16 || n < 16) return std::nullopt;
      return (m + 2) * (n + 2) / 5 - 4;
    default:
      throw std::invalid_argument("no closed form for " + std::string(family_name(family)));
  }
}

GrowthSample growth_rate_m(Family family, int m, int precision_digits, int n_cap, const RunOptions& options) {
  if (family == Family::Torus) family = Family::Cylinder;
  validate({family, m, 1});
  if (precision_digits < 1 || precision_digits > 90) throw std::invalid_argument("precision must be 1..90 digits");

  Sweep<CountWeights<ExactRing>> sweep(family, m, CountWeights<ExactRing>{},
                                       SweepOptions{options.limits, options.symmetry, options.on_row});
  sweep.seed(Signature::all_covered(m).code());
  const HighFloat tol = boost::multiprecision::pow(HighFloat(10), -precision_digits);
  const HighFloat inv_m = HighFloat(1) / m;

  BigInt prev_total = 0;
  std::optional<HighFloat> prev_mu;
  for (int n = 1; n <= n_cap; ++n) {
    sweep.advance_row();
    BigInt total = sweep.dominating_sum()[0];
    if (n >= 2) {
      const HighFloat ratio = HighFloat(total) / HighFloat(prev_total);
      HighFloat mu = boost::multiprecision::exp(boost::multiprecision::log(ratio) * inv_m);
      if (prev_mu && boost::multiprecision::abs(mu - *prev_mu) <= tol * mu) return {m, n, mu};
      prev_mu = mu;
    }
    prev_total = std::move(total);
  }
  throw std::runtime_error("growth rate for m=" + std::to_string(m) + " did not converge within " +
                           std::to_string(n_cap) + " rows");
}

namespace {

void check_points(const std::vector<std::pair<HighFloat, HighFloat>>& pts) {
  if (pts.size() < 3) throw std::invalid_argument("extrapolation needs at least three points");
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i].first < pts[i - 1].first)) throw std::invalid_argument("abscissae must be distinct and descending");
  }
}

Extrapolation finish(const std::vector<std::vector<HighFloat>>& t, bool fallback) {
  const std::size_t n = t.size() - 1;
  Extrapolation e;
  e.limit = t[n][n];
  e.error = boost::multiprecision::abs(t[n][n] - t[n][n - 1]);
  e.error = std::max(e.error, HighFloat(boost::multiprecision::abs(t[n][n] - t[n - 1][n - 1])));
  e.fallback = fallback;
  return e;
}

}  // namespace

Extrapolation polynomial_extrapolate(const std::vector<std::pair<HighFloat, HighFloat>>& pts) {
  check_points(pts);
  const std::size_t n = pts.size();
  std::vector<std::vector<HighFloat>> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i].resize(i + 1);
    t[i][0] = pts[i].second;
    for (std::size_t k = 1; k <= i; ++k) {
      const HighFloat& xi = pts[i].first;
      const HighFloat& xk = pts[i - k].first;
      t[i][k] = t[i][k - 1] + (t[i][k - 1] - t[i - 1][k - 1]) * xi / (xk - xi);
    }
  }
  return finish(t, true);
}

Extrapolation bulirsch_stoer_extrapolate(const std::vector<std::pair<HighFloat, HighFloat>>& pts) {
  check_points(pts);
  const std::size_t n = pts.size();
  const HighFloat tiny = boost::multiprecision::pow(HighFloat(10), -80);
  std::vector<std::vector<HighFloat>> t(n);
  // T[i][-1] = 0 is handled by `before`.
  for (std::size_t i = 0; i < n; ++i) {
    t[i].resize(i + 1);
    t[i][0] = pts[i].second;
    for (std::size_t k = 1; k <= i; ++k) {
      const HighFloat diff = t[i][k - 1] - t[i - 1][k - 1];
      // Converged column: differences at round-off level carry no information.
      if (boost::multiprecision::abs(diff) <= tiny * (1 + boost::multiprecision::abs(t[i][k - 1]))) {
        t[i][k] = t[i][k - 1];
        continue;
      }
      const HighFloat before = k >= 2 ? t[i - 1][k - 2] : HighFloat(0);
      const HighFloat gap = t[i][k - 1] - before;
      if (boost::multiprecision::abs(gap) <= tiny) return polynomial_extrapolate(pts);
      const HighFloat ratio = pts[i - k].first / pts[i].first;
      const HighFloat denom = ratio * (1 - diff / gap) - 1;
      if (boost::multiprecision::abs(denom) <= tiny) return polynomial_extrapolate(pts);
      t[i][k] = t[i][k - 1] + diff / denom;
    }
  }
  return finish(t, false);
}

GrowthEstimate extrapolate_samples(Family family, std::vector<GrowthSample> samples) {
  std::sort(samples.begin(), samples.end(), [](const auto& a, const auto& b) { return a.m < b.m; });
  std::vector<std::pair<HighFloat, HighFloat>> pts;
  for (const auto& s : samples) pts.emplace_back(HighFloat(1) / s.m, s.mu_m);
  const auto e = bulirsch_stoer_extrapolate(pts);
  GrowthEstimate g;
  g.family = family;
  g.samples = std::move(samples);
  g.mu = e.limit;
  g.error = e.error;
  g.fallback = e.fallback;
  return g;
}

GrowthEstimate estimate_growth(Family family, int m_min, int m_max, int precision_digits, int n_cap,
                               const RunOptions& options) {
  if (m_min < 1 || m_max < m_min + 2) throw std::invalid_argument("need at least three widths");
  std::vector<GrowthSample> samples(static_cast<std::size_t>(m_max - m_min + 1));
  RunOptions inner = options;
  inner.on_row = nullptr;
  detail::parallel_for(samples.size(), options.workers, [&](std::size_t i) {
    samples[i] = growth_rate_m(family, m_min + static_cast<int>(i), precision_digits, n_cap, inner);
  });
  return extrapolate_samples(family, std::move(samples));
}

std::string to_decimal(const HighFloat& x, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << x;
  return out.str();
}

nlohmann::json growth_report(const GrowthEstimate& g, int digits) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : g.samples) {
    samples.push_back({{"m", s.m}, {"n_used", s.n_used}, {"mu_m", to_decimal(s.mu_m, digits)}});
  }
  nlohmann::json out = {{"family", family_name(g.family)},
                        {"samples", samples},
                        {"mu", to_decimal(g.mu, digits)},
                        {"error", to_decimal(g.error, digits)}};
  if (g.fallback) out["fallback"] = true;
  return out;
}

}  // namespace domcount
