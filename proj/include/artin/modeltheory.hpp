#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/abelian.hpp"
#include "artin/graph.hpp"
#include "artin/types.hpp"

namespace artin {

/// Orders (>= 2) of the torsion elements of A/Z(A) for an irreducible
/// spherical type. Sorted ascending.
struct TorsionProfile {
  std::vector<long long> orders;

  bool contains(long long n) const;
  friend bool operator==(const TorsionProfile&, const TorsionProfile&) = default;
};

TorsionProfile torsion_profile(const CoxeterType& t);

enum class CenterGenerator { delta, delta_squared };

/// Center data of an irreducible spherical Artin group: which power of the
/// Garside element generates Z(A), the reflection count N = n*h/2 (the
/// length of Delta), and the order of the generator's image in the
/// abelianization (N for Delta, 2N for Delta^2).
struct CenterFact {
  CenterGenerator kind = CenterGenerator::delta;
  long long reflection_count = 0;
  long long central_exponent = 0;

  friend bool operator==(const CenterFact&, const CenterFact&) = default;
};

CenterFact center_fact(const CoxeterType& t);

/// Abelianization of A/<<Delta generator>> for types whose finite labels
/// are all odd (so the abelianization of A is cyclic): Z/central_exponent.
/// Throws UnsupportedType when a label of even parity is present.
AbelianGroup central_quotient_abelianization(const CoxeterType& t);

/// Whether A/Z(A) is hyperbolic: true exactly in rank 2 (free product of
/// cyclic groups), false in rank >= 3 (a Z^2 of commuting standard
/// generators survives the quotient). nullopt for rank 1, where the
/// quotient is trivial.
std::optional<bool> central_quotient_hyperbolic(const CoxeterType& t);

/// A/Z(A) for the dihedral type I2(m) as a free product of cyclic groups;
/// factor order 0 denotes an infinite cyclic factor.
///   m even: C_{m/2} * Z;  m odd: C_2 * C_m.
struct FreeProductShape {
  std::vector<long long> factor_orders;

  bool virtually_abelian() const;
  std::string str() const;  // "C3 * Z"
  friend bool operator==(const FreeProductShape&, const FreeProductShape&) = default;
};

FreeProductShape dihedral_quotient_shape(long long m);

enum class DistinguishMethod {
  torsion_orders,
  hyperbolicity,
  abelianization,
  component_multiset,
};

const char* method_name(DistinguishMethod m);

/// Outcome of comparing two irreducible spherical types (or two spherical
/// multisets) by first-order invariants. Distinguished verdicts carry the
/// witness for their method:
///   torsion_orders     — an order realized on exactly one side;
///   hyperbolicity      — the side whose central quotient embeds Z^2;
///   abelianization     — the two central-quotient abelianization orders;
///   component_multiset — a type with different multiplicities.
struct DistinguishCertificate {
  bool isomorphic = false;
  DistinguishMethod method = DistinguishMethod::torsion_orders;
  std::optional<long long> order_witness;
  std::optional<CoxeterType> z2_side;
  std::optional<std::pair<long long, long long>> abelianization_orders;
  std::optional<CoxeterType> component_witness;
};

/// Distinguishes two irreducible spherical types, trying torsion profiles
/// first, then hyperbolicity of the central quotient, then its
/// abelianization. Succeeds on every non-isomorphic pair.
DistinguishCertificate distinguish_irreducible(const CoxeterType& s,
                                               const CoxeterType& t);

/// Graph-level front end: irreducible pairs run the full procedure above;
/// reducible spherical pairs reduce to their component multisets (the
/// irreducible decomposition is unique up to permutation).
DistinguishCertificate distinguish_spherical(const CoxeterGraph& g,
                                             const CoxeterGraph& h);

/// Elementary equivalence for spherical graphs: holds iff the canonical
/// type multisets agree. Throws NotSpherical.
struct EquivalenceResult {
  bool equivalent = false;
  std::optional<CoxeterType> witness;  // a type with differing multiplicity
};

EquivalenceResult elementary_equivalent_spherical(const CoxeterGraph& g,
                                                  const CoxeterGraph& h);

/// Homological obstruction to `target` retracting onto a copy of `source`,
/// both irreducible simply laced affine (AffA includes rank 1 here).
/// Checks that H_k(source) embeds in H_k(target) for k = 1, 2 and reports
/// the first failing degree.
struct RetractObstruction {
  bool obstructed = false;
  int degree = 0;
  AbelianGroup source_homology;
  AbelianGroup target_homology;
};

RetractObstruction retract_obstruction(const CoxeterType& target,
                                       const CoxeterType& source);

enum class EqeVerdict { equivalent, not_equivalent, out_of_theorem_scope };

/// Existential-equivalence decision for irreducible simply laced affine
/// types when at least one side is AffA with rank >= 4. The negative
/// certificate is the rank pair for AffA-vs-AffA, and the retract
/// obstruction otherwise. Pairs outside the covered hypothesis come back
/// as out_of_theorem_scope; non-affine or AffA-rank-1 operands throw
/// UnsupportedType.
struct EqeDecision {
  EqeVerdict verdict = EqeVerdict::out_of_theorem_scope;
  std::optional<std::pair<int, int>> rank_certificate;
  std::optional<RetractObstruction> homology_certificate;
};

EqeDecision existentially_equivalent_affine(const CoxeterType& s,
                                            const CoxeterType& t);

}  // namespace artin
