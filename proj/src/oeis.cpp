#include "domcount/oeis.hpp"

#include <stdexcept>

namespace domcount {

const std::vector<SequenceInfo>& sequence_table() {
  using S = SequenceShape;
  using Q = SequenceQuantity;
  static const std::vector<SequenceInfo> table = {
      {"A001333", "row signatures a(m), shifted by one", S::Width, Q::Signatures, Family::Grid, 2},
      {"A078057", "row signatures a(m)", S::Width, Q::Signatures, Family::Grid, 1},
      {"A124696", "cyclic row signatures", S::Width, Q::CyclicSignatures, Family::Cylinder, 1},
      {"A030270", "row signatures up to reflection", S::Width, Q::ReflectionSignatures, Family::Grid, 1},
      {"A208716", "cyclic row signatures up to rotation and reflection", S::Width, Q::CyclicOrbitSignatures,
       Family::Cylinder, 1},
      {"A133515", "dominating sets of the n x n grid", S::Diagonal, Q::Total, Family::Grid, 1},
      {"A286914", "dominating sets of the n x n cylinder", S::Diagonal, Q::Total, Family::Cylinder, 1},
      {"A303334", "dominating sets of the n x n torus", S::Diagonal, Q::Total, Family::Torus, 1},
      {"A133791", "dominating sets of the n x n king graph", S::Diagonal, Q::Total, Family::King, 1},
      {"A104519", "domination number of the n x n grid", S::Diagonal, Q::Gamma, Family::Grid, 1},
      {"A094087", "domination number of the n x n torus", S::Diagonal, Q::Gamma, Family::Torus, 1},
      {"A347632", "minimum dominating sets of the n x n grid", S::Diagonal, Q::MinCount, Family::Grid, 1},
      {"A347557", "minimum dominating sets of the n x n torus", S::Diagonal, Q::MinCount, Family::Torus, 1},
      {"A347554", "minimum dominating sets of the n x n king graph", S::Diagonal, Q::MinCount, Family::King, 1},
      {"A218354", "dominating sets of the m x n grid", S::Antidiagonal, Q::Total, Family::Grid, 1},
      {"A286514", "dominating sets of the m x n cylinder", S::Antidiagonal, Q::Total, Family::Cylinder, 1},
      {"A218663", "dominating sets of the m x n king graph", S::Antidiagonal, Q::Total, Family::King, 1},
      {"A075561", "domination number of the m x n king graph", S::Antidiagonal, Q::Gamma, Family::King, 1},
      {"A350820", "minimum dominating sets of the m x n grid", S::Antidiagonal, Q::MinCount, Family::Grid, 1},
      {"A350815", "minimum dominating sets of the m x n king graph", S::Antidiagonal, Q::MinCount, Family::King, 1},
  };
  return table;
}

const SequenceInfo& find_sequence(std::string_view id) {
  for (const auto& s : sequence_table()) {
    if (s.id == id) return s;
  }
  throw std::invalid_argument("unknown sequence " + std::string(id));
}

std::pair<int, int> antidiagonal_cell(int k) {
  if (k < 0) throw std::invalid_argument("negative position");
  int d = 2;
  while (k >= d - 1) {
    k -= d - 1;
    ++d;
  }
  return {1 + k, d - 1 - k};
}

namespace {

std::string graph_value(SequenceQuantity q, const GraphSpec& spec, const RunOptions& options) {
  switch (q) {
    case SequenceQuantity::Total:
      return count_dominating(spec, options).str();
    case SequenceQuantity::Gamma:
      return std::to_string(minimum_term(spec, options).degree);
    case SequenceQuantity::MinCount:
      return minimum_term(spec, options).count.str();
    default:
      throw std::logic_error("not a graph quantity");
  }
}

std::string width_value(SequenceQuantity q, int m) {
  switch (q) {
    case SequenceQuantity::Signatures:
      return std::to_string(count_signatures(m, SignatureVariant::Plain));
    case SequenceQuantity::CyclicSignatures:
      return std::to_string(count_signatures(m, SignatureVariant::Cyclic));
    case SequenceQuantity::ReflectionSignatures:
      return std::to_string(count_signatures(m, SignatureVariant::ReflectionReduced));
    case SequenceQuantity::CyclicOrbitSignatures:
      return std::to_string(detail::torus_starts(m, true).size());
    default:
      throw std::logic_error("not a width quantity");
  }
}

}  // namespace

std::vector<std::string> sequence_terms(const SequenceInfo& seq, int count, const RunOptions& options) {
  if (count < 0) throw std::invalid_argument("negative term count");
  std::vector<std::string> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    switch (seq.shape) {
      case SequenceShape::Width:
        out.push_back(width_value(seq.quantity, k + 1));
        break;
      case SequenceShape::Diagonal:
        out.push_back(graph_value(seq.quantity, {seq.family, k + 1, k + 1}, options));
        break;
      case SequenceShape::Antidiagonal: {
        auto [m, n] = antidiagonal_cell(k);
        out.push_back(graph_value(seq.quantity, {seq.family, m, n}, options));
        break;
      }
    }
  }
  return out;
}

}  // namespace domcount
