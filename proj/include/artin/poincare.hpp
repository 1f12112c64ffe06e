#pragma once

#include <vector>

#include "artin/graph.hpp"
#include "artin/polynomial.hpp"
#include "artin/types.hpp"

namespace artin {

/// Exponents e_1 <= ... <= e_n of an irreducible spherical type.
/// Throws NotSpherical otherwise.
std::vector<int> exponents(const CoxeterType& t);

/// Order of the finite Coxeter group, from the closed-form order formulas
/// (independent of the exponent tables; used as a cross-check on them).
BigInt coxeter_group_order(const CoxeterType& t);

/// W(q) = prod_i (1 + q + ... + q^{e_i}) over the exponents of t.
IntPolynomial poincare_polynomial(const CoxeterType& t);

/// W(q) of the standard parabolic on `subset`: the product over the typed
/// components of the induced subgraph. Empty subset gives 1.
/// Throws NotSpherical when the induced subgraph is not spherical.
IntPolynomial poincare_of_subset(const CoxeterGraph& g,
                                 const std::vector<int>& subset);

/// W_sigma(q) / W_tau(q) evaluated at q = -1, for tau a codimension-one
/// face of sigma; the division is exact (NonDivisible signals a bug).
BigInt boundary_coefficient(const CoxeterGraph& g, const std::vector<int>& sigma,
                            const std::vector<int>& tau);

}  // namespace artin
