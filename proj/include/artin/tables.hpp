#pragma once

#include <string>
#include <vector>

#include "artin/abelian.hpp"
#include "artin/types.hpp"

namespace artin {

/// Reference values embedded from the classification literature, diffed
/// against recomputation from first principles by reproduce_tables().
/// Exposed as data so the test suite can tamper with a copy and confirm
/// the harness reports the mismatch.
struct ReferenceTables {
  struct AffineH2Row {
    std::string type;      // preset name, e.g. "~D4"
    AbelianGroup expected; // second homology
  };
  struct PoincareRow {
    std::string subgraph;            // preset name, e.g. "A2+A1"
    std::vector<long long> expected; // coefficients, low degree first
  };
  struct TorsionRow {
    std::string type;                // e.g. "D5"
    std::vector<long long> expected; // torsion orders, ascending
  };

  std::vector<AffineH2Row> affine_h2;
  std::vector<PoincareRow> poincare;
  std::vector<TorsionRow> torsion;
};

ReferenceTables reference_tables();

enum class TableSelect { all, affine_h2, poincare, torsion };

struct TableCheck {
  std::string table;
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct TableReport {
  std::vector<TableCheck> checks;

  int mismatches() const;
  std::string str() const;  // one line per check plus a summary
};

/// Recomputes every selected table cell (SNF path for the affine H2 list,
/// exponent products for the Poincare rows, divisor expansion for the
/// torsion rows) and diffs against the reference values.
TableReport reproduce_tables(TableSelect select = TableSelect::all,
                             const ReferenceTables& ref = reference_tables());

}  // namespace artin
