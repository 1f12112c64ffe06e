#include "artin/abelian.hpp"

#include <sstream>

#include "artin/snf.hpp"

namespace artin {

AbelianGroup AbelianGroup::cyclic(BigInt n) {
  if (n <= 1) return trivial();
  return {0, {std::move(n)}};
}

AbelianGroup AbelianGroup::of(int free_rank, std::vector<BigInt> torsion) {
  // SNF of the diagonal presentation restores the invariant-factor chain.
  IntMatrix d(static_cast<int>(torsion.size()), static_cast<int>(torsion.size()));
  for (size_t i = 0; i < torsion.size(); ++i)
    d.at(static_cast<int>(i), static_cast<int>(i)) = torsion[i];
  AbelianGroup g;
  g.free_rank = free_rank;
  for (BigInt& f : smith_normal_form(std::move(d)).diagonal)
    if (f > 1) g.torsion.push_back(std::move(f));
  // Zero diagonal entries are free generators.
  for (const BigInt& t : torsion)
    if (t == 0) ++g.free_rank;
  return g;
}

BigInt AbelianGroup::torsion_order() const {
  BigInt n = 1;
  for (const BigInt& d : torsion) n *= d;
  return n;
}

std::string AbelianGroup::str() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " + ";
    first = false;
  };
  if (free_rank == 1) {
    sep();
    out << "Z";
  } else if (free_rank > 1) {
    sep();
    out << "Z^" << free_rank;
  }
  for (size_t i = 0; i < torsion.size();) {
    size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    sep();
    if (j - i == 1)
      out << "Z/" << torsion[i].str();
    else
      out << "(Z/" << torsion[i].str() << ")^" << (j - i);
    i = j;
  }
  return out.str();
}

}  // namespace artin
