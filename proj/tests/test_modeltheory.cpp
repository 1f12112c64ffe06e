#include <doctest.h>

#include <map>
#include <set>

#include "artin/classify.hpp"
#include "artin/error.hpp"
#include "artin/modeltheory.hpp"
#include "test_support.hpp"

using namespace artin;

namespace {

CoxeterType T(Family f, int r) { return CoxeterType::make(f, r); }

// The slice of the irreducible spherical catalog the sweeps run over.
std::vector<CoxeterType> spherical_sweep(int max_rank, int max_i2) {
  std::vector<CoxeterType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(T(Family::A, n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(T(Family::B, n));
  for (int n = 4; n <= max_rank; ++n) out.push_back(T(Family::D, n));
  out.push_back(T(Family::E6, 6));
  out.push_back(T(Family::E7, 7));
  out.push_back(T(Family::E8, 8));
  out.push_back(T(Family::F4, 4));
  out.push_back(T(Family::H3, 3));
  out.push_back(T(Family::H4, 4));
  for (int m = 5; m <= max_i2; ++m) out.push_back(CoxeterType::i2(m));
  return out;
}

}  // namespace

TEST_CASE("torsion profiles from the table") {
  CHECK(torsion_profile(T(Family::E7, 7)).orders == std::vector<long long>{3, 7, 9});
  CHECK(torsion_profile(T(Family::H3, 3)).orders == std::vector<long long>{3, 5});
  CHECK(torsion_profile(T(Family::B, 4)).orders == std::vector<long long>{2, 4});
  CHECK(torsion_profile(T(Family::A, 3)).orders == std::vector<long long>{2, 3, 4});
  CHECK(torsion_profile(T(Family::D, 6)).orders == std::vector<long long>{3, 5});
  CHECK(torsion_profile(T(Family::D, 5)).orders == std::vector<long long>{2, 4, 5, 8});
  CHECK(torsion_profile(CoxeterType::i2(12)).orders == std::vector<long long>{2, 3, 6});
  CHECK(torsion_profile(CoxeterType::i2(9)).orders == std::vector<long long>{2, 3, 9});
  CHECK(torsion_profile(T(Family::A, 1)).orders.empty());  // A(A1)/Z is trivial
  CHECK_THROWS_AS(torsion_profile(T(Family::AffA, 3)), Error);
}

TEST_CASE("property: profiles are closed under divisors >= 2") {
  for (const CoxeterType& t : spherical_sweep(10, 30)) {
    TorsionProfile p = torsion_profile(t);
    for (long long x : p.orders)
      for (long long d = 2; d < x; ++d)
        if (x % d == 0) {
          CAPTURE(t.str());
          CHECK(p.contains(d));
        }
  }
}

TEST_CASE("center facts") {
  CenterFact d6 = center_fact(T(Family::D, 6));
  CHECK(d6.kind == CenterGenerator::delta);
  CHECK(d6.central_exponent == 30);

  CenterFact h3 = center_fact(T(Family::H3, 3));
  CHECK(h3.kind == CenterGenerator::delta);
  CHECK(h3.reflection_count == 15);
  CHECK(h3.central_exponent == 15);

  CenterFact a2 = center_fact(T(Family::A, 2));
  CHECK(a2.kind == CenterGenerator::delta_squared);
  CHECK(a2.reflection_count == 3);
  CHECK(a2.central_exponent == 6);

  // the delta-squared list: A_n (n>=2), D_n odd, E6, I2(m) odd
  CHECK(center_fact(T(Family::A, 1)).kind == CenterGenerator::delta);
  CHECK(center_fact(T(Family::D, 5)).kind == CenterGenerator::delta_squared);
  CHECK(center_fact(T(Family::D, 6)).kind == CenterGenerator::delta);
  CHECK(center_fact(T(Family::E6, 6)).kind == CenterGenerator::delta_squared);
  CHECK(center_fact(T(Family::E7, 7)).kind == CenterGenerator::delta);
  CHECK(center_fact(CoxeterType::i2(5)).kind == CenterGenerator::delta_squared);
  CHECK(center_fact(CoxeterType::i2(6)).kind == CenterGenerator::delta);
  CHECK(center_fact(T(Family::B, 5)).kind == CenterGenerator::delta);
}

TEST_CASE("central quotient abelianization") {
  CHECK(central_quotient_abelianization(T(Family::D, 6)) == AbelianGroup::cyclic(30));
  CHECK(central_quotient_abelianization(T(Family::H3, 3)) == AbelianGroup::cyclic(15));
  CHECK(central_quotient_abelianization(T(Family::A, 2)) == AbelianGroup::cyclic(6));
  CHECK_THROWS_AS(central_quotient_abelianization(T(Family::B, 3)), Error);
  CHECK_THROWS_AS(central_quotient_abelianization(T(Family::F4, 4)), Error);
  CHECK_THROWS_AS(central_quotient_abelianization(CoxeterType::i2(6)), Error);
}

TEST_CASE("property: abelianization order equals the central exponent") {
  for (const CoxeterType& t : spherical_sweep(10, 29)) {
    bool odd_labels = true;
    switch (t.family) {
      case Family::B:
      case Family::F4: odd_labels = false; break;
      case Family::I2: odd_labels = *t.dihedral_label % 2 == 1; break;
      default: break;
    }
    if (!odd_labels) continue;
    CAPTURE(t.str());
    CHECK(central_quotient_abelianization(t).torsion_order() ==
          center_fact(t).central_exponent);
  }
}

TEST_CASE("central quotient hyperbolicity") {
  CHECK(central_quotient_hyperbolic(T(Family::A, 2)) == true);
  CHECK(central_quotient_hyperbolic(T(Family::D, 4)) == false);
  CHECK(central_quotient_hyperbolic(CoxeterType::i2(12)) == true);
  CHECK(!central_quotient_hyperbolic(T(Family::A, 1)).has_value());
}

TEST_CASE("dihedral quotient shapes") {
  CHECK(dihedral_quotient_shape(6) == FreeProductShape{{3, 0}});   // C3 * Z
  CHECK(dihedral_quotient_shape(5) == FreeProductShape{{2, 5}});   // C2 * C5
  CHECK(dihedral_quotient_shape(4) == FreeProductShape{{2, 0}});   // C2 * Z
  CHECK(dihedral_quotient_shape(3) == FreeProductShape{{2, 3}});
  CHECK_THROWS_AS(dihedral_quotient_shape(2), Error);

  for (long long m = 3; m <= 30; ++m)
    CHECK(!dihedral_quotient_shape(m).virtually_abelian());
  CHECK(dihedral_quotient_shape(6).str() == "C3 * Z");
}

TEST_CASE("distinguish: the three exceptional mechanisms") {
  auto c1 = distinguish_irreducible(T(Family::A, 2), T(Family::D, 4));
  CHECK(!c1.isomorphic);
  CHECK(c1.method == DistinguishMethod::hyperbolicity);
  CHECK(c1.z2_side == T(Family::D, 4));

  auto c2 = distinguish_irreducible(T(Family::D, 6), T(Family::H3, 3));
  CHECK(c2.method == DistinguishMethod::abelianization);
  CHECK(c2.abelianization_orders == std::pair<long long, long long>{30, 15});

  auto c3 = distinguish_irreducible(T(Family::A, 3), T(Family::B, 3));
  CHECK(c3.method == DistinguishMethod::torsion_orders);
  CHECK((c3.order_witness == 2 || c3.order_witness == 4));

  CHECK(distinguish_irreducible(T(Family::H4, 4), T(Family::H4, 4)).isomorphic);
  // same canonical type through different constructions
  CHECK(distinguish_irreducible(CoxeterType::i2(4), T(Family::B, 2)).isomorphic);
}

TEST_CASE("torsion sweep matches the exceptional list exactly") {
  // rank <= 10 and I2(m) with m <= 30; expected collisions are
  // (A2, D4), (D6, H3), and (B_n, I2(2n)) for 3 <= n <= 10
  std::vector<CoxeterType> types = spherical_sweep(10, 30);
  std::set<std::pair<std::string, std::string>> collisions;
  for (size_t i = 0; i < types.size(); ++i)
    for (size_t j = i + 1; j < types.size(); ++j) {
      if (types[i] == types[j]) continue;
      if (torsion_profile(types[i]) == torsion_profile(types[j])) {
        auto a = std::min(types[i].str(), types[j].str());
        auto b = std::max(types[i].str(), types[j].str());
        collisions.insert({a, b});
      }
    }

  std::set<std::pair<std::string, std::string>> expected = {
      {"A2", "D4"}, {"D6", "H3"}};
  for (int n = 3; n <= 10; ++n)
    expected.insert({"B" + std::to_string(n), "I2(" + std::to_string(2 * n) + ")"});
  CHECK(collisions == expected);

  // and distinguish_irreducible resolves every pair without claiming
  // isomorphism
  for (size_t i = 0; i < types.size(); ++i)
    for (size_t j = i + 1; j < types.size(); ++j) {
      if (types[i] == types[j]) continue;
      CAPTURE(types[i].str() + " vs " + types[j].str());
      CHECK(!distinguish_irreducible(types[i], types[j]).isomorphic);
    }
}

TEST_CASE("distinguish_spherical dispatches on the component count") {
  auto c1 = distinguish_spherical(preset_graph("A2"), preset_graph("D4"));
  CHECK(c1.method == DistinguishMethod::hyperbolicity);

  auto c2 = distinguish_spherical(preset_graph("A2+A2"), preset_graph("A2+D4"));
  CHECK(!c2.isomorphic);
  CHECK(c2.method == DistinguishMethod::component_multiset);
  CHECK(c2.component_witness->str() == "D4");

  CHECK(distinguish_spherical(preset_graph("A3+B2"), preset_graph("B2+A3"))
            .isomorphic);
}

TEST_CASE("elementary equivalence of spherical graphs") {
  auto r1 = elementary_equivalent_spherical(preset_graph("A3+B2"),
                                            preset_graph("B2+A3"));
  CHECK(r1.equivalent);

  auto r2 = elementary_equivalent_spherical(
      testsupport::graph_of(2, {{0, 1, 3}}), preset_graph("A2"));
  CHECK(r2.equivalent);

  auto r3 = elementary_equivalent_spherical(preset_graph("A2+A2"),
                                            preset_graph("A2+D4"));
  CHECK(!r3.equivalent);
  CHECK(r3.witness->str() == "D4");

  CHECK_THROWS_AS(
      elementary_equivalent_spherical(preset_graph("~A2"), preset_graph("A2")),
      Error);
}

TEST_CASE("retract obstructions") {
  auto r1 = retract_obstruction(T(Family::AffD, 5), T(Family::AffA, 2));
  CHECK(r1.obstructed);
  CHECK(r1.degree == 2);
  CHECK(r1.source_homology == AbelianGroup::free(1));
  CHECK(r1.target_homology == AbelianGroup::of(0, {2, 2, 2}));

  auto r2 = retract_obstruction(T(Family::AffE6, 6), T(Family::AffA, 1));
  CHECK(r2.obstructed);
  CHECK(r2.degree == 1);
  CHECK(r2.source_homology == AbelianGroup::free(2));
  CHECK(r2.target_homology == AbelianGroup::free(1));

  CHECK(!retract_obstruction(T(Family::AffA, 5), T(Family::AffA, 5)).obstructed);

  CHECK_THROWS_AS(retract_obstruction(T(Family::A, 3), T(Family::AffA, 2)), Error);
}

TEST_CASE("property: every ~D/~E target obstructs every ~A source") {
  std::vector<CoxeterType> targets;
  for (int n = 4; n <= 10; ++n) targets.push_back(T(Family::AffD, n));
  targets.push_back(T(Family::AffE6, 6));
  targets.push_back(T(Family::AffE7, 7));
  targets.push_back(T(Family::AffE8, 8));
  for (const CoxeterType& target : targets)
    for (int n = 1; n <= 10; ++n) {
      CAPTURE(target.str() + " vs ~A" + std::to_string(n));
      auto r = retract_obstruction(target, T(Family::AffA, n));
      CHECK(r.obstructed);
      CHECK(r.degree == (n == 1 ? 1 : 2));
    }
}

TEST_CASE("existential equivalence decisions") {
  auto d1 = existentially_equivalent_affine(T(Family::AffA, 4), T(Family::AffA, 7));
  CHECK(d1.verdict == EqeVerdict::not_equivalent);
  CHECK(d1.rank_certificate == std::pair<int, int>{4, 7});

  auto d2 = existentially_equivalent_affine(T(Family::AffA, 4), T(Family::AffD, 6));
  CHECK(d2.verdict == EqeVerdict::not_equivalent);
  REQUIRE(d2.homology_certificate.has_value());
  CHECK(d2.homology_certificate->obstructed);
  CHECK(d2.homology_certificate->degree == 2);

  CHECK(existentially_equivalent_affine(T(Family::AffA, 5), T(Family::AffA, 5))
            .verdict == EqeVerdict::equivalent);

  // neither side is ~A with n >= 4
  CHECK(existentially_equivalent_affine(T(Family::AffD, 4), T(Family::AffE6, 6))
            .verdict == EqeVerdict::out_of_theorem_scope);
  CHECK(existentially_equivalent_affine(T(Family::AffA, 2), T(Family::AffA, 3))
            .verdict == EqeVerdict::out_of_theorem_scope);

  // ~A1 is not simply laced; spherical types are out of domain
  CHECK_THROWS_AS(
      existentially_equivalent_affine(T(Family::AffA, 4), T(Family::AffA, 1)),
      Error);
  CHECK_THROWS_AS(
      existentially_equivalent_affine(T(Family::AffA, 4), T(Family::A, 3)),
      Error);
}
