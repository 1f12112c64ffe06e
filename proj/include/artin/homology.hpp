#pragma once

#include "artin/abelian.hpp"
#include "artin/graph.hpp"
#include "artin/salvetti.hpp"

namespace artin {

/// H_k = ker d_k / im d_{k+1}, exactly, via Smith normal form. The torsion
/// comes from presenting the kernel in an integral basis and reducing
/// d_{k+1} expressed there. Throws DegreeOutOfRange unless
/// 0 <= k <= c.max_degree.
AbelianGroup homology_at(const ChainComplex& c, int k);

/// Second homology of a connected simply laced graph by the closed
/// formula: Z^b + (Z/2)^c with b the first Betti number and c the number
/// of non-edge equivalence classes.
/// Throws NotSimplyLaced / DisconnectedGraph outside the hypothesis.
AbelianGroup h2_fast(const CoxeterGraph& g);

/// First homology (abelianization) of the Artin group: free of rank equal
/// to the number of generator classes under the transitive closure of
/// s ~ t for odd finite m_{s,t}.
AbelianGroup h1_of_artin(const CoxeterGraph& g);

/// Whether an injective homomorphism sub -> ambient exists. Supports
/// torsion by powers of 2 only (what the retract obstruction needs);
/// throws UnsupportedTorsion otherwise.
bool embeds(const AbelianGroup& sub, const AbelianGroup& ambient);

}  // namespace artin
