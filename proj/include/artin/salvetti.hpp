#pragma once

#include <nlohmann/json_fwd.hpp>
#include <vector>

#include "artin/graph.hpp"
#include "artin/matrix.hpp"

namespace artin {

/// Algebraic chain complex of the Salvetti complex with trivial integer
/// coefficients, truncated at max_degree + 1.
///
/// bases[k] holds the spherical k-subsets (ascending indices, lex order);
/// boundaries[k] is the matrix of d_k : C_k -> C_{k-1} with rows indexed by
/// bases[k-1] and columns by bases[k]. Degree 0 is the empty subset, with
/// boundaries[0] the 0 x |C_0| matrix.
struct ChainComplex {
  CoxeterGraph graph;
  int max_degree = 0;
  std::vector<std::vector<std::vector<int>>> bases;
  std::vector<IntMatrix> boundaries;

  int dim(int k) const {
    return k >= 0 && k < static_cast<int>(bases.size())
               ? static_cast<int>(bases[k].size())
               : 0;
  }
};

/// Builds bases and boundary matrices for degrees 0 .. max_degree + 1 (so
/// homology is available through max_degree). Entry of d_k at (tau, sigma)
/// is (-1)^j * (W_sigma / W_tau)(-1), where the removed generator is the
/// j-th element of sigma in ascending index order.
ChainComplex build_complex(const CoxeterGraph& g, int max_degree);

/// Machine-readable listing: {"degrees": [{k, basis, boundary}, ...]} with
/// bases as generator-name arrays and boundaries row-major, ordered as in
/// the complex.
nlohmann::json dump_complex(const ChainComplex& c);

}  // namespace artin
