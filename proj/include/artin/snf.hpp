#pragma once

#include <vector>

#include "artin/matrix.hpp"

namespace artin {

/// Smith normal form data: the invariant factors d_1 | d_2 | ... (positive,
/// including any 1s), one per nonzero diagonal entry.
struct SmithForm {
  std::vector<BigInt> diagonal;
  int rank() const { return static_cast<int>(diagonal.size()); }
};

/// Diagonalization witnesses for the column side. With D the diagonal form
/// there are unimodular E, F with D = E * M * F; this records
///   col_transform      F   (columns rank.. span ker M), and
///   col_transform_inv  F^{-1}  (x in ker M iff the first `rank` entries
///                               of F^{-1} x vanish).
struct SmithTransforms {
  std::vector<BigInt> diagonal;
  IntMatrix col_transform;
  IntMatrix col_transform_inv;
  int rank() const { return static_cast<int>(diagonal.size()); }
};

SmithForm smith_normal_form(IntMatrix m);
SmithTransforms smith_with_col_transform(IntMatrix m);

}  // namespace artin
