#include <doctest.h>

#include "artin/tables.hpp"

using namespace artin;

TEST_CASE("full table run is clean") {
  TableReport report = reproduce_tables();
  // 7 affine H2 cases + 6 Poincare rows + 12 torsion rows
  CHECK(report.checks.size() == 25);
  CHECK(report.mismatches() == 0);
  CHECK(report.str().find("25 checks, 0 mismatches") != std::string::npos);
}

TEST_CASE("restricted runs") {
  CHECK(reproduce_tables(TableSelect::affine_h2).checks.size() == 7);
  CHECK(reproduce_tables(TableSelect::poincare).checks.size() == 6);
  CHECK(reproduce_tables(TableSelect::torsion).checks.size() == 12);
}

TEST_CASE("harness self-test: an injected wrong value is reported") {
  ReferenceTables tampered = reference_tables();
  tampered.affine_h2[4].expected = AbelianGroup::of(0, {2, 2});  // ~D4 is (Z/2)^6
  TableReport report = reproduce_tables(TableSelect::all, tampered);
  CHECK(report.mismatches() == 1);

  ReferenceTables tampered2 = reference_tables();
  tampered2.torsion[5].expected = {3, 7};  // E7 row is {3, 7, 9}
  CHECK(reproduce_tables(TableSelect::torsion, tampered2).mismatches() == 1);

  ReferenceTables tampered3 = reference_tables();
  tampered3.poincare[2].expected = {1, 2, 1};  // A2 row is [1, 2, 2, 1]
  CHECK(reproduce_tables(TableSelect::poincare, tampered3).mismatches() == 1);
}
