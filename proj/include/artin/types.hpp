#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

/// Families of the irreducible catalog: the spherical types of Figure-1
/// shape (A..I2) and the simply laced affine types. Unknown covers every
/// connected graph outside both catalogs.
enum class Family {
  A,
  B,
  D,
  E6,
  E7,
  E8,
  F4,
  H3,
  H4,
  I2,
  AffA,
  AffD,
  AffE6,
  AffE7,
  AffE8,
  Unknown,
};

/// Canonical classification label of an irreducible Coxeter graph.
///
/// Canonical means rank-2 coincidences are resolved: I2(3) is A_2, I2(4) is
/// B_2, the infinite-labeled pair is AffA rank 1. dihedral_label is set only
/// for I2(m), m >= 5. Affine rank n means n+1 vertices.
struct CoxeterType {
  Family family = Family::Unknown;
  int rank = 0;
  std::optional<long long> dihedral_label;

  static CoxeterType make(Family f, int rank);
  static CoxeterType i2(long long m);  // canonicalizes m = 3, 4
  static CoxeterType unknown() { return CoxeterType{}; }

  bool is_unknown() const { return family == Family::Unknown; }
  bool spherical() const;
  bool affine() const;  // AffA / AffD / AffE*
  /// Affine types with all labels in {2,3}; excludes AffA rank 1.
  bool affine_simply_laced() const;
  int vertex_count() const;  // rank, or rank + 1 for affine families

  std::string str() const;  // "A3", "I2(7)", "~D5", "Unknown"

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
  friend auto operator<=>(const CoxeterType&, const CoxeterType&) = default;
};

/// Parses a single type name: A5, B3, D6, E6, E7, E8, F4, H3, H4, I2(7),
/// ~A4, ~D5, ~E7. Returns nullopt when the text is not a type name or the
/// rank constraints fail.
std::optional<CoxeterType> parse_type(std::string_view text);

/// One irreducible factor of a decomposition: its type and the vertex
/// subset (original indices, ascending) it lives on.
struct Component {
  CoxeterType type;
  std::vector<int> vertices;

  friend bool operator==(const Component&, const Component&) = default;
  friend auto operator<=>(const Component&, const Component&) = default;
};

/// Typed irreducible decomposition; components sorted by (type, vertices).
struct Decomposition {
  std::vector<Component> components;

  std::vector<CoxeterType> types() const;  // sorted multiset
  bool all_spherical() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

}  // namespace artin
