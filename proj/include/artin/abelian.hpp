#pragma once

#include <string>
#include <vector>

#include "artin/bigint.hpp"

namespace artin {

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d_1 + ... with 2 <= d_1 | d_2 | ...
struct AbelianGroup {
  int free_rank = 0;
  std::vector<BigInt> torsion;

  static AbelianGroup trivial() { return {}; }
  static AbelianGroup free(int rank) { return {rank, {}}; }
  static AbelianGroup cyclic(BigInt n);  // Z/n, n >= 1 (n = 1 gives trivial)
  /// Canonicalizes arbitrary torsion coefficients (drops 1s, restores the
  /// divisibility chain: e.g. {2, 3} becomes {6}).
  static AbelianGroup of(int free_rank, std::vector<BigInt> torsion);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  BigInt torsion_order() const;

  /// "0", "Z", "Z^2 + Z/2", "(Z/2)^6", ...
  std::string str() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

}  // namespace artin
