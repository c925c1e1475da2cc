#include "domcount/sweep.hpp"

#include <cctype>
#include <cstdlib>
#include <map>

#include "domcount/checkpoint.hpp"

namespace domcount {

void validate(const GraphSpec& spec) {
  const int limit = spec.family == Family::King ? kMaxWidth - 1 : kMaxWidth;
  if (spec.m < 1 || spec.n < 1) throw std::invalid_argument("graph dimensions must be positive");
  if (spec.m > limit) {
    throw std::invalid_argument("width " + std::to_string(spec.m) + " exceeds " + std::to_string(limit));
  }
}

std::uint64_t parse_byte_size(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty byte size");
  std::size_t pos = 0;
  const unsigned long long base = std::stoull(text, &pos);
  std::uint64_t scale = 1;
  if (pos < text.size()) {
    switch (std::toupper(static_cast<unsigned char>(text[pos]))) {
      case 'K': scale = 1ull << 10; break;
      case 'M': scale = 1ull << 20; break;
      case 'G': scale = 1ull << 30; break;
      case 'T': scale = 1ull << 40; break;
      default: throw std::invalid_argument("bad byte size '" + text + "'");
    }
    if (pos + 1 != text.size() && !(pos + 2 == text.size() && std::toupper(text[pos + 1]) == 'B')) {
      throw std::invalid_argument("bad byte size '" + text + "'");
    }
  }
  return base * scale;
}

std::optional<std::uint64_t> max_memory_from_env() {
  const char* v = std::getenv("DOMCOUNT_MAX_MEM");
  if (!v || !*v) return std::nullopt;
  return parse_byte_size(v);
}

SignatureCode canonical_row(SignatureCode row, int width, bool cyclic) {
  std::vector<int> d(width);
  for (int i = 0; i < width; ++i, row /= 3) d[i] = static_cast<int>(row % 3);
  auto code_of = [&](int shift, bool mirrored) {
    SignatureCode c = 0;
    for (int i = width - 1; i >= 0; --i) {
      int j = mirrored ? width - 1 - i : i;
      j = (j + shift) % width;
      c = c * 3 + static_cast<SignatureCode>(d[j]);
    }
    return c;
  };
  SignatureCode best = code_of(0, false);
  const int shifts = cyclic ? width : 1;
  for (int s = 0; s < shifts; ++s) {
    best = std::min({best, code_of(s, false), code_of(s, true)});
  }
  return best;
}

namespace detail {

std::vector<std::pair<SignatureCode, int>> torus_starts(int m, bool symmetry) {
  std::vector<std::pair<SignatureCode, int>> out;
  const auto all = enumerate_signatures(m, true);
  if (!symmetry) {
    out.reserve(all.size());
    for (const auto& s : all) out.emplace_back(s.code(), 1);
    return out;
  }
  std::map<SignatureCode, int> orbits;
  for (const auto& s : all) ++orbits[canonical_row(s.code(), m, true)];
  out.assign(orbits.begin(), orbits.end());
  return out;
}

}  // namespace detail

GraphSpec sweep_orientation(const GraphSpec& spec, const RunOptions& options) {
  validate(spec);
  GraphSpec s = spec;
  if (options.transpose && spec.family != Family::Cylinder && spec.n < spec.m) std::swap(s.m, s.n);
  validate(s);
  return s;
}

namespace {

SweepOptions sweep_options(const RunOptions& options, bool symmetric_seed) {
  SweepOptions so;
  so.limits = options.limits;
  so.symmetric_rows = options.symmetry && symmetric_seed;
  so.on_row = options.on_row;
  return so;
}

template <class Ring>
std::string ring_tag(const Ring& ring) {
  return ring.name();
}

/// Runs `rows` full rows, resuming from and writing per-row checkpoints
/// when a checkpoint directory is configured.
template <class Weights>
void run_rows(Sweep<Weights>& sweep, const GraphSpec& spec, int rows, const std::string& ring_name,
              const RunOptions& options) {
  using value_type = typename Weights::value_type;
  constexpr bool storable = std::is_same_v<value_type, std::uint32_t> || std::is_same_v<value_type, BigInt>;
  if constexpr (storable) {
    if (!options.checkpoint_dir.empty()) {
      std::filesystem::create_directories(options.checkpoint_dir);
      CheckpointHeader h;
      h.family = std::string(family_name(spec.family)) + (options.symmetry ? "-sym" : "");
      h.m = spec.m;
      h.n = spec.n;
      h.ring = ring_name;
      h.stride = sweep.weights().stride();
      const auto path = checkpoint_path(options.checkpoint_dir, h);
      std::optional<Checkpoint<value_type>> ck;
      if constexpr (std::is_same_v<value_type, std::uint32_t>) ck = read_checkpoint_mod(path);
      else ck = read_checkpoint_exact(path);
      if (ck && ck->header.same_run(h) && ck->header.row <= rows) {
        sweep.restore(std::move(ck->list), ck->header.row);
      }
      while (sweep.rows_done() < rows) {
        sweep.advance_row();
        h.row = sweep.rows_done();
        write_checkpoint(path, h, sweep.configurations());
      }
      return;
    }
  }
  while (sweep.rows_done() < rows) sweep.advance_row();
}

void require_open_family(const GraphSpec& spec) {
  if (spec.family == Family::Torus) throw std::invalid_argument("torus needs the trace computation");
}

}  // namespace

template <class Ring>
Polynomial<Ring> domination_polynomial(const GraphSpec& spec, Ring ring, const RunOptions& options) {
  require_open_family(spec);
  const GraphSpec s = sweep_orientation(spec, options);
  PolynomialWeights<Ring> weights{ring, static_cast<std::size_t>(s.vertices())};
  Sweep<PolynomialWeights<Ring>> sweep(s.family, s.m, weights, sweep_options(options, true));
  sweep.seed(Signature::all_covered(s.m).code());
  run_rows(sweep, s, s.n, ring_tag(ring), options);
  Polynomial<Ring> p(ring, sweep.dominating_sum());
  return p.trim();
}

template <class Ring>
Polynomial<Ring> torus_polynomial(int m, int n, Ring ring, const RunOptions& options) {
  const GraphSpec s = sweep_orientation({Family::Torus, m, n}, options);
  PolynomialWeights<Ring> weights{ring, static_cast<std::size_t>(s.vertices())};
  Polynomial<Ring> p(ring, torus_trace(s.m, s.n, weights, options));
  return p.trim();
}

template <class Ring>
Polynomial<Ring> compute_polynomial(const GraphSpec& spec, Ring ring, const RunOptions& options) {
  if (spec.family == Family::Torus) return torus_polynomial(spec.m, spec.n, ring, options);
  return domination_polynomial(spec, ring, options);
}

template ExactPolynomial domination_polynomial(const GraphSpec&, ExactRing, const RunOptions&);
template ModPolynomial domination_polynomial(const GraphSpec&, ModRing, const RunOptions&);
template ExactPolynomial torus_polynomial(int, int, ExactRing, const RunOptions&);
template ModPolynomial torus_polynomial(int, int, ModRing, const RunOptions&);
template ExactPolynomial compute_polynomial(const GraphSpec&, ExactRing, const RunOptions&);
template ModPolynomial compute_polynomial(const GraphSpec&, ModRing, const RunOptions&);

ExactPolynomial compute_polynomial_crt(const GraphSpec& spec, int bits, const RunOptions& options) {
  validate(spec);
  const auto moduli = select_moduli(static_cast<std::uint64_t>(spec.vertices()) + 1, bits);
  const std::size_t len = static_cast<std::size_t>(spec.vertices()) + 1;
  std::vector<Residues> residues(moduli.primes.size());

  // Spread workers over primes first; leftover parallelism goes to the torus loop.
  RunOptions inner = options;
  const bool outer_parallel = options.workers > 1 && moduli.primes.size() > 1;
  if (outer_parallel) inner.workers = std::max(1u, options.workers / static_cast<unsigned>(moduli.primes.size()));
  detail::parallel_for(moduli.primes.size(), outer_parallel ? options.workers : 1, [&](std::size_t i) {
    auto p = compute_polynomial(spec, ModRing{moduli.primes[i]}, inner);
    auto coeffs = p.coefficients();
    coeffs.resize(len, 0);
    residues[i] = Residues{moduli.primes[i], std::move(coeffs)};
  });
  auto exact = crt_reconstruct(residues);
  return exact.trim();
}

BigInt count_dominating(const GraphSpec& spec, const RunOptions& options) {
  const GraphSpec s = sweep_orientation(spec, options);
  CountWeights<ExactRing> weights{};
  if (s.family == Family::Torus) return torus_trace(s.m, s.n, weights, options)[0];
  Sweep<CountWeights<ExactRing>> sweep(s.family, s.m, weights, sweep_options(options, true));
  sweep.seed(Signature::all_covered(s.m).code());
  run_rows(sweep, s, s.n, "count", options);
  return sweep.dominating_sum()[0];
}

MinTerm minimum_term(const GraphSpec& spec, const RunOptions& options) {
  const GraphSpec s = sweep_orientation(spec, options);
  MinTermWeights weights;
  if (s.family == Family::Torus) return torus_trace(s.m, s.n, weights, options)[0];
  Sweep<MinTermWeights> sweep(s.family, s.m, weights, sweep_options(options, true));
  sweep.seed(Signature::all_covered(s.m).code());
  for (int r = 0; r < s.n; ++r) sweep.advance_row();
  return sweep.dominating_sum()[0];
}

std::vector<BigInt> row_totals(Family family, int m, int n, const RunOptions& options) {
  require_open_family({family, m, n});
  validate({family, m, n});
  Sweep<CountWeights<ExactRing>> sweep(family, m, CountWeights<ExactRing>{}, sweep_options(options, true));
  sweep.seed(Signature::all_covered(m).code());
  std::vector<BigInt> out;
  out.reserve(n);
  for (int r = 0; r < n; ++r) {
    sweep.advance_row();
    out.push_back(sweep.dominating_sum()[0]);
  }
  return out;
}

std::vector<MinTerm> row_minimum_terms(Family family, int m, int n, const RunOptions& options) {
  require_open_family({family, m, n});
  validate({family, m, n});
  Sweep<MinTermWeights> sweep(family, m, MinTermWeights{}, sweep_options(options, true));
  sweep.seed(Signature::all_covered(m).code());
  std::vector<MinTerm> out;
  out.reserve(n);
  for (int r = 0; r < n; ++r) {
    sweep.advance_row();
    out.push_back(sweep.dominating_sum()[0]);
  }
  return out;
}

}  // namespace domcount
