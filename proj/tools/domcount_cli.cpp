// domcount: domination polynomials and dominating-set statistics of grid,
// cylinder, torus and king graphs.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "domcount/analysis.hpp"
#include "domcount/format.hpp"
#include "domcount/golden.hpp"
#include "domcount/oeis.hpp"
#include "domcount/oracle.hpp"
#include "domcount/sweep.hpp"

using namespace domcount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGuard = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBadArgs = 4;

struct Range {
  int lo = 1;
  int hi = 1;
};

Range parse_range(const std::string& text) {
  const auto pos = text.find_first_of(":.-");
  Range r;
  try {
    if (pos == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, pos));
      r.hi = std::stoi(text.substr(text.find_first_not_of(":.-", pos)));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "' (expected a..b)");
  }
  if (r.lo < 1 || r.hi < r.lo) throw std::invalid_argument("empty or non-positive range '" + text + "'");
  return r;
}

struct Request {
  std::string family = "grid";
  int m = 0;
  int n = 0;
  std::string m_range;
  std::string n_range;
  std::uint32_t modulus = 0;
  bool crt = false;
  int bits = 16;
  std::string format = "text";
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string max_mem;
  std::uint64_t max_signatures = 0;
  std::string checkpoint_dir;
  bool symmetry = false;
  bool progress = false;

  // table
  std::string quantity = "gamma";
  bool diagonal = false;
  // growth
  int digits = 30;
  int n_cap = 400;
  // oeis
  std::string sequence;
  int terms = 10;
  bool list = false;
  // verify
  int max_cells = 16;
  std::string data_dir;
};

RunOptions run_options(const Request& req) {
  RunOptions o;
  o.workers = req.workers;
  o.symmetry = req.symmetry;
  o.checkpoint_dir = req.checkpoint_dir;
  o.limits.max_signatures = req.max_signatures;
  if (!req.max_mem.empty()) o.limits.max_memory_bytes = parse_byte_size(req.max_mem);
  if (auto env = max_memory_from_env()) o.limits.max_memory_bytes = *env;
  if (req.progress) {
    o.on_row = [](int row, std::size_t live) { std::fprintf(stderr, "row %d: %zu signatures\n", row, live); };
  }
  return o;
}

GraphSpec graph(const Request& req) {
  if (req.m < 1 || req.n < 1) throw std::invalid_argument("-m and -n are required and must be positive");
  GraphSpec s{parse_family(req.family), req.m, req.n};
  validate(s);
  return s;
}

int cmd_poly(const Request& req) {
  const GraphSpec spec = graph(req);
  const auto opts = run_options(req);
  const auto format = parse_format(req.format);
  if (req.modulus != 0) {
    if (req.modulus < 3 || req.modulus >= (1u << 31) || !is_prime(req.modulus)) {
      throw std::invalid_argument("--mod needs an odd prime below 2^31");
    }
    const auto p = compute_polynomial(spec, ModRing{req.modulus}, opts);
    std::vector<BigInt> lifted(p.coefficients().begin(), p.coefficients().end());
    ExactPolynomial shown(ExactRing{}, std::move(lifted));
    shown.trim();
    if (format == OutputFormat::Json) {
      auto j = polynomial_json(shown);
      j["modulus"] = req.modulus;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << render_polynomial(shown, format);
    }
    return kExitOk;
  }
  const auto p = req.crt ? compute_polynomial_crt(spec, req.bits, opts) : compute_polynomial(spec, ExactRing{}, opts);
  std::cout << render_polynomial(p, format);
  return kExitOk;
}

int cmd_count(const Request& req) {
  if (req.modulus != 0 || req.crt) throw std::invalid_argument("count always uses exact integers");
  const GraphSpec spec = graph(req);
  const BigInt total = count_dominating(spec, run_options(req));
  if (parse_format(req.format) == OutputFormat::Json) {
    nlohmann::json j = {{"family", family_name(spec.family)}, {"m", spec.m}, {"n", spec.n}, {"total", total.str()}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << total << '\n';
  }
  return kExitOk;
}

std::string cell_value(const std::string& quantity, const MinTerm& t) {
  return quantity == "gamma" ? std::to_string(t.degree) : t.count.str();
}

int cmd_table(const Request& req) {
  const Family family = parse_family(req.family);
  if (req.quantity != "gamma" && req.quantity != "ngamma" && req.quantity != "total") {
    throw std::invalid_argument("--quantity must be gamma, ngamma or total");
  }
  if (req.n_range.empty()) throw std::invalid_argument("--n-range is required");
  const Range nr = parse_range(req.n_range);
  const auto opts = run_options(req);
  const auto format = parse_format(req.format);

  Table t;
  t.quantity = req.quantity;
  t.family = family;
  for (int n = nr.lo; n <= nr.hi; ++n) t.rows.push_back(n);

  auto one = [&](int m, int n) {
    const GraphSpec spec{family, m, n};
    if (req.quantity == "total") return count_dominating(spec, opts).str();
    return cell_value(req.quantity, minimum_term(spec, opts));
  };

  if (req.diagonal) {
    t.cols = {0};
    for (int n : t.rows) t.cells.push_back({one(n, n)});
    if (format == OutputFormat::Json) {
      std::vector<std::string> values;
      for (const auto& row : t.cells) values.push_back(row[0]);
      nlohmann::json j = {{"quantity", t.quantity}, {"family", family_name(family)}, {"n", t.rows}, {"values", values}};
      std::cout << j.dump() << '\n';
    } else {
      const char sep = format == OutputFormat::Csv ? ',' : ' ';
      std::cout << "n" << sep << req.quantity << '\n';
      for (std::size_t i = 0; i < t.rows.size(); ++i) std::cout << t.rows[i] << sep << t.cells[i][0] << '\n';
    }
    return kExitOk;
  }

  if (req.m_range.empty()) throw std::invalid_argument("--m-range is required (or --diagonal)");
  const Range mr = parse_range(req.m_range);
  for (int m = mr.lo; m <= mr.hi; ++m) t.cols.push_back(m);
  t.cells.assign(t.rows.size(), std::vector<std::string>(t.cols.size()));
  for (std::size_t c = 0; c < t.cols.size(); ++c) {
    const int m = t.cols[c];
    if (family == Family::Torus) {
      for (std::size_t r = 0; r < t.rows.size(); ++r) t.cells[r][c] = one(m, t.rows[r]);
      continue;
    }
    // Every n for this width from one sweep.
    if (req.quantity == "total") {
      const auto totals = row_totals(family, m, nr.hi, opts);
      for (std::size_t r = 0; r < t.rows.size(); ++r) t.cells[r][c] = totals[t.rows[r] - 1].str();
    } else {
      const auto terms = row_minimum_terms(family, m, nr.hi, opts);
      for (std::size_t r = 0; r < t.rows.size(); ++r) t.cells[r][c] = cell_value(req.quantity, terms[t.rows[r] - 1]);
    }
  }
  std::cout << render_table(t, format);
  return kExitOk;
}

int cmd_growth(const Request& req) {
  const Family family = parse_family(req.family);
  const Range mr = parse_range(req.m_range.empty() ? "3..10" : req.m_range);
  const auto est = estimate_growth(family, mr.lo, mr.hi, req.digits, req.n_cap, run_options(req));
  if (parse_format(req.format) == OutputFormat::Json) {
    std::cout << growth_report(est, req.digits).dump(2) << '\n';
  } else {
    for (const auto& s : est.samples) std::cout << "m=" << s.m << " n=" << s.n_used << " mu_m=" << to_decimal(s.mu_m, req.digits) << '\n';
    std::cout << "mu=" << to_decimal(est.mu, 15) << " error=" << to_decimal(est.error, 15)
              << (est.fallback ? " (polynomial fallback)" : "") << '\n';
  }
  return kExitOk;
}

int cmd_oeis(const Request& req) {
  if (req.list) {
    for (const auto& s : sequence_table()) std::cout << s.id << "  " << s.description << '\n';
    return kExitOk;
  }
  if (req.sequence.empty()) throw std::invalid_argument("--id is required (or --list)");
  const auto& seq = find_sequence(req.sequence);
  std::cout << bfile_lines(seq.first_index, sequence_terms(seq, req.terms, run_options(req)));
  return kExitOk;
}

std::string first_difference(const ExactPolynomial& a, const ExactPolynomial& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < len; ++k) {
    if (a[k] != b[k]) {
      std::ostringstream s;
      s << "z^" << k << ": engine " << a[k] << ", expected " << b[k];
      return s.str();
    }
  }
  return {};
}

int cmd_verify(const Request& req) {
  if (req.max_cells < 1 || req.max_cells > kOracleHardCap) throw std::invalid_argument("--max-cells must be 1..24");
  RunOptions opts = run_options(req);
  int checked = 0;
  for (Family family : {Family::Grid, Family::Cylinder, Family::Torus, Family::King}) {
    for (int m = 1; m <= req.max_cells; ++m) {
      for (int n = 1; m * n <= req.max_cells; ++n) {
        const GraphSpec spec{family, m, n};
        const auto engine = compute_polynomial(spec, ExactRing{}, opts);
        const auto oracle = brute_force_polynomial(spec, kOracleHardCap);
        if (!(engine == oracle)) {
          std::cout << "FAIL oracle " << family_name(family) << ' ' << m << 'x' << n << ": "
                    << first_difference(engine, oracle) << '\n';
          return kExitMismatch;
        }
        std::cout << "ok   oracle " << family_name(family) << ' ' << m << 'x' << n << '\n';
        ++checked;
      }
    }
  }
  const auto golden = load_golden(req.data_dir.empty() ? default_data_dir() : std::filesystem::path(req.data_dir));
  for (const auto& g : golden.polynomials) {
    if (g.n > 6) continue;
    const auto engine = compute_polynomial({g.family, g.m, g.n}, ExactRing{}, opts);
    if (!(engine == g.poly)) {
      std::cout << "FAIL golden " << family_name(g.family) << ' ' << g.m << 'x' << g.n << ": "
                << first_difference(engine, g.poly) << '\n';
      return kExitMismatch;
    }
    std::cout << "ok   golden " << family_name(g.family) << ' ' << g.m << 'x' << g.n;
    if (g.has_erratum) std::cout << " (published table differs at "
                                << first_difference(engine, g.printed) << "; known erratum)";
    std::cout << '\n';
    ++checked;
  }
  RunOptions folded = opts;
  folded.symmetry = true;
  for (const auto& [family, by_n] : golden.min_dominating) {
    for (const auto& [n, expected] : by_n) {
      if (n > 8) continue;
      const auto got = minimum_term({family, n, n}, folded).count;
      if (got != expected) {
        std::cout << "FAIL ngamma " << family_name(family) << ' ' << n << 'x' << n << ": engine " << got
                  << ", expected " << expected << '\n';
        return kExitMismatch;
      }
      std::cout << "ok   ngamma " << family_name(family) << ' ' << n << 'x' << n;
      for (const auto& e : golden.table_errata) {
        if (e.family == family && e.n == n) std::cout << " (published table prints " << e.printed << "; known erratum)";
      }
      std::cout << '\n';
      ++checked;
    }
  }
  std::cout << "verified " << checked << " cases\n";
  return kExitOk;
}

void add_graph_options(CLI::App* sub, Request& req, bool dims) {
  sub->add_option("--family", req.family, "grid, cylinder, torus or king")->capture_default_str();
  if (dims) {
    sub->add_option("-m", req.m, "row width (the cyclic direction of a cylinder)");
    sub->add_option("-n", req.n, "number of rows");
  }
}

void add_run_options(CLI::App* sub, Request& req) {
  sub->add_option("--format", req.format, "text, json, csv or bfile")->capture_default_str();
  sub->add_option("--workers", req.workers, "worker threads")->capture_default_str();
  sub->add_option("--max-mem", req.max_mem, "memory cap, e.g. 2G (DOMCOUNT_MAX_MEM overrides)");
  sub->add_option("--max-signatures", req.max_signatures, "cap on live signatures per step");
  sub->add_option("--checkpoint-dir", req.checkpoint_dir, "write per-row checkpoints here and resume from them");
  sub->add_flag("--symmetry,!--no-symmetry", req.symmetry, "fold mirror and rotation images of rows and torus starts");
  sub->add_flag("--progress", req.progress, "per-row progress on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination polynomials of grid, cylinder, torus and king graphs"};
  app.require_subcommand(1);
  Request req;

  auto* poly = app.add_subcommand("poly", "domination polynomial of one graph");
  add_graph_options(poly, req, true);
  add_run_options(poly, req);
  auto* mod = poly->add_option("--mod", req.modulus, "coefficients modulo this prime");
  auto* crt = poly->add_flag("--crt", req.crt, "multi-modular computation with CRT reconstruction");
  mod->excludes(crt);
  poly->add_option("--bits", req.bits, "prime size for --crt (8..31)")->capture_default_str();

  auto* count = app.add_subcommand("count", "number of dominating sets");
  add_graph_options(count, req, true);
  add_run_options(count, req);
  count->add_option("--mod", req.modulus, "not supported; counts are exact");
  count->add_flag("--crt", req.crt, "not supported; counts are exact");

  auto* table = app.add_subcommand("table", "gamma, ngamma or total over a range of sizes");
  add_graph_options(table, req, false);
  add_run_options(table, req);
  table->add_option("--quantity", req.quantity, "gamma, ngamma or total")->capture_default_str();
  table->add_option("--m-range", req.m_range, "widths a..b");
  table->add_option("--n-range", req.n_range, "row counts a..b");
  table->add_flag("--diagonal", req.diagonal, "n x n graphs only");

  auto* growth =
      app.add_subcommand("growth", "growth constants mu_m and their extrapolation (torus reports the cylinder rate)");
  add_graph_options(growth, req, false);
  add_run_options(growth, req);
  growth->add_option("--m-range", req.m_range, "widths a..b (default 3..10)");
  growth->add_option("--digits", req.digits, "agreement required between successive rows")->capture_default_str();
  growth->add_option("--n-cap", req.n_cap, "maximum rows per width")->capture_default_str();

  auto* oeis = app.add_subcommand("oeis", "b-file lines for a supported sequence");
  add_run_options(oeis, req);
  oeis->add_option("--id", req.sequence, "sequence id, e.g. A133515");
  oeis->add_option("--terms", req.terms, "number of terms")->capture_default_str();
  oeis->add_flag("--list", req.list, "list supported sequences");

  auto* verify = app.add_subcommand("verify", "engine vs brute force and published tables");
  add_run_options(verify, req);
  verify->add_option("--max-cells", req.max_cells, "largest m*n checked against brute force")->capture_default_str();
  verify->add_option("--data-dir", req.data_dir, "directory with the golden fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (*poly) return cmd_poly(req);
    if (*count) return cmd_count(req);
    if (*table) return cmd_table(req);
    if (*growth) return cmd_growth(req);
    if (*oeis) return cmd_oeis(req);
    if (*verify) return cmd_verify(req);
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::length_error& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitBadArgs;
}
