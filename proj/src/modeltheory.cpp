#include "artin/modeltheory.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "artin/classify.hpp"
#include "artin/error.hpp"
#include "artin/homology.hpp"
#include "artin/salvetti.hpp"

namespace artin {

namespace {

void require_irreducible_spherical(const CoxeterType& t, const char* who) {
  if (!t.spherical()) fail(Errc::not_spherical, std::string(who) + ": " + t.str());
}

// Divisors of n that are >= 2, ascending.
void add_divisors(std::vector<long long>& out, long long n) {
  for (long long d = 2; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
}

}  // namespace

bool TorsionProfile::contains(long long n) const {
  return std::binary_search(orders.begin(), orders.end(), n);
}

TorsionProfile torsion_profile(const CoxeterType& t) {
  require_irreducible_spherical(t, "torsion_profile");
  const long long n = t.rank;
  std::vector<long long> orders;
  switch (t.family) {
    case Family::A:  // all divisors of n, n+1
      if (n >= 2) {
        add_divisors(orders, n);
        add_divisors(orders, n + 1);
      }
      // A_1 is Z: the central quotient is trivial, no torsion.
      break;
    case Family::B:  // all divisors of n
      add_divisors(orders, n);
      break;
    case Family::D:
      if (n % 2 == 0) {  // all divisors of n-1, n/2
        add_divisors(orders, n - 1);
        add_divisors(orders, n / 2);
      } else {  // all divisors of 2n-2, n
        add_divisors(orders, 2 * n - 2);
        add_divisors(orders, n);
      }
      break;
    case Family::E6: orders = {2, 3, 4, 6, 8, 9, 12}; break;
    case Family::E7: orders = {3, 7, 9}; break;
    case Family::E8: orders = {2, 3, 4, 5, 6, 10, 12, 15}; break;
    case Family::F4: orders = {2, 3, 4, 6}; break;
    case Family::H3: orders = {3, 5}; break;
    case Family::H4: orders = {2, 3, 5, 6, 10, 15}; break;
    case Family::I2: {
      const long long m = *t.dihedral_label;
      if (m % 2 == 0) {  // all divisors of m/2
        add_divisors(orders, m / 2);
      } else {  // all divisors of 2, m
        add_divisors(orders, 2);
        add_divisors(orders, m);
      }
      break;
    }
    default:
      fail(Errc::not_spherical, t.str());
  }
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  return TorsionProfile{std::move(orders)};
}

CenterFact center_fact(const CoxeterType& t) {
  require_irreducible_spherical(t, "center_fact");
  const long long n = t.rank;
  long long h = 0;  // Coxeter number
  switch (t.family) {
    case Family::A: h = n + 1; break;
    case Family::B: h = 2 * n; break;
    case Family::D: h = 2 * n - 2; break;
    case Family::E6: h = 12; break;
    case Family::E7: h = 18; break;
    case Family::E8: h = 30; break;
    case Family::F4: h = 12; break;
    case Family::H3: h = 10; break;
    case Family::H4: h = 30; break;
    case Family::I2: h = *t.dihedral_label; break;
    default: fail(Errc::not_spherical, t.str());
  }

  // The center is generated by Delta^2 for A_n (n >= 2), D_n (n odd), E_6
  // and I2(m) (m odd); by Delta in all other cases.
  bool squared = false;
  switch (t.family) {
    case Family::A: squared = n >= 2; break;
    case Family::D: squared = n % 2 == 1; break;
    case Family::E6: squared = true; break;
    case Family::I2: squared = *t.dihedral_label % 2 == 1; break;
    default: squared = false; break;
  }

  CenterFact f;
  f.kind = squared ? CenterGenerator::delta_squared : CenterGenerator::delta;
  f.reflection_count = n * h / 2;
  f.central_exponent = squared ? 2 * f.reflection_count : f.reflection_count;
  return f;
}

AbelianGroup central_quotient_abelianization(const CoxeterType& t) {
  require_irreducible_spherical(t, "central_quotient_abelianization");
  // All finite labels must be odd, so the abelianization of A identifies
  // every generator and the central quotient abelianizes to one cyclic
  // group. B_n, F_4 and even I2(m) are out.
  bool all_odd = true;
  switch (t.family) {
    case Family::B:
    case Family::F4:
      all_odd = false;
      break;
    case Family::I2:
      all_odd = *t.dihedral_label % 2 == 1;
      break;
    default:
      break;  // A, D, E*, H*: labels 3 or 5
  }
  if (!all_odd)
    fail(Errc::unsupported_type,
         t.str() + " has an even label; the abelianization is not cyclic");
  return AbelianGroup::cyclic(center_fact(t).central_exponent);
}

std::optional<bool> central_quotient_hyperbolic(const CoxeterType& t) {
  require_irreducible_spherical(t, "central_quotient_hyperbolic");
  if (t.rank == 1) return std::nullopt;  // trivial quotient
  // Rank 2: A/Z(A) is a free product of cyclic groups, not virtually
  // abelian, hence hyperbolic. Rank >= 3: two commuting standard
  // generators span a Z^2 that survives the central quotient.
  return t.rank == 2;
}

bool FreeProductShape::virtually_abelian() const {
  if (factor_orders.size() < 2) return true;  // cyclic
  if (factor_orders.size() == 2 && factor_orders[0] == 2 &&
      factor_orders[1] == 2)
    return true;  // infinite dihedral
  for (long long f : factor_orders)
    if (f == 1) return true;  // degenerate factor
  return false;
}

std::string FreeProductShape::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < factor_orders.size(); ++i) {
    if (i) out << " * ";
    if (factor_orders[i] == 0)
      out << "Z";
    else
      out << "C" << factor_orders[i];
  }
  return out.str();
}

FreeProductShape dihedral_quotient_shape(long long m) {
  if (m < 3) fail(Errc::label_out_of_range, "dihedral label " + std::to_string(m));
  if (m % 2 == 0) return FreeProductShape{{m / 2, 0}};  // C_{m/2} * Z
  return FreeProductShape{{2, m}};                      // C_2 * C_m
}

const char* method_name(DistinguishMethod m) {
  switch (m) {
    case DistinguishMethod::torsion_orders: return "TorsionOrders";
    case DistinguishMethod::hyperbolicity: return "Hyperbolicity";
    case DistinguishMethod::abelianization: return "Abelianization";
    case DistinguishMethod::component_multiset: return "ComponentMultiset";
  }
  return "?";
}

DistinguishCertificate distinguish_irreducible(const CoxeterType& s,
                                               const CoxeterType& t) {
  require_irreducible_spherical(s, "distinguish_irreducible");
  require_irreducible_spherical(t, "distinguish_irreducible");

  DistinguishCertificate cert;
  if (s == t) {
    cert.isomorphic = true;
    return cert;
  }

  // Stage 1: orders of torsion elements modulo the center.
  TorsionProfile ps = torsion_profile(s), pt = torsion_profile(t);
  if (ps != pt) {
    cert.method = DistinguishMethod::torsion_orders;
    std::vector<long long> diff;
    std::set_symmetric_difference(ps.orders.begin(), ps.orders.end(),
                                  pt.orders.begin(), pt.orders.end(),
                                  std::back_inserter(diff));
    cert.order_witness = diff.front();
    return cert;
  }

  // Stage 2: hyperbolicity of the central quotient separates rank 2 from
  // rank >= 3 (the latter embeds Z^2).
  auto hs = central_quotient_hyperbolic(s), ht = central_quotient_hyperbolic(t);
  if (hs && ht && *hs != *ht) {
    cert.method = DistinguishMethod::hyperbolicity;
    cert.z2_side = *hs ? t : s;
    return cert;
  }

  // Stage 3: abelianization of the central quotient.
  AbelianGroup as = central_quotient_abelianization(s);
  AbelianGroup at = central_quotient_abelianization(t);
  if (as != at) {
    cert.method = DistinguishMethod::abelianization;
    cert.abelianization_orders = {
        as.torsion_order().convert_to<long long>(),
        at.torsion_order().convert_to<long long>()};
    return cert;
  }

  throw std::logic_error("distinguish_irreducible: procedure exhausted on " +
                         s.str() + " vs " + t.str());
}

DistinguishCertificate distinguish_spherical(const CoxeterGraph& g,
                                             const CoxeterGraph& h) {
  Decomposition dg = classify(g), dh = classify(h);
  if (dg.components.size() == 1 && dh.components.size() == 1)
    return distinguish_irreducible(dg.components[0].type,
                                   dh.components[0].type);
  EquivalenceResult r = elementary_equivalent_spherical(g, h);
  DistinguishCertificate cert;
  cert.isomorphic = r.equivalent;
  if (!r.equivalent) {
    cert.method = DistinguishMethod::component_multiset;
    cert.component_witness = r.witness;
  }
  return cert;
}

EquivalenceResult elementary_equivalent_spherical(const CoxeterGraph& g,
                                                  const CoxeterGraph& h) {
  Decomposition dg = classify(g), dh = classify(h);
  for (const auto* d : {&dg, &dh})
    for (const Component& c : d->components)
      if (!c.type.spherical())
        fail(Errc::not_spherical, c.type.str());

  // The decomposition into irreducible factors is unique up to
  // permutation, so equal multisets decide equivalence. The witness
  // prefers a factor missing entirely from one side.
  std::map<CoxeterType, std::pair<int, int>> count;
  for (const CoxeterType& t : dg.types()) ++count[t].first;
  for (const CoxeterType& t : dh.types()) ++count[t].second;
  std::optional<CoxeterType> witness;
  for (const auto& [type, n] : count) {
    if (n.first == n.second) continue;
    if (n.first == 0 || n.second == 0) return {false, type};
    if (!witness) witness = type;
  }
  if (witness) return {false, witness};
  return {true, std::nullopt};
}

namespace {

void require_affine_irreducible(const CoxeterType& t, const char* who) {
  if (!t.affine())
    fail(Errc::unsupported_type, std::string(who) + ": " + t.str());
}

// H_1 and H_2 of an irreducible affine catalog type, on its template
// graph. AffA rank 1 has no spherical pair, so its H_2 comes from the
// (empty-in-degree-2) complex rather than the simply laced formula.
AbelianGroup affine_h1(const CoxeterType& t) {
  return h1_of_artin(template_graph(t));
}

AbelianGroup affine_h2(const CoxeterType& t) {
  CoxeterGraph g = template_graph(t);
  if (t.family == Family::AffA && t.rank == 1)
    return homology_at(build_complex(g, 2), 2);
  return h2_fast(g);
}

}  // namespace

RetractObstruction retract_obstruction(const CoxeterType& target,
                                       const CoxeterType& source) {
  require_affine_irreducible(target, "retract_obstruction");
  require_affine_irreducible(source, "retract_obstruction");

  // A retraction of `target` onto a copy of `source` makes H_*(source) a
  // direct summand of H_*(target); a failed embedding in some degree rules
  // it out.
  for (int k = 1; k <= 2; ++k) {
    AbelianGroup hs = k == 1 ? affine_h1(source) : affine_h2(source);
    AbelianGroup ht = k == 1 ? affine_h1(target) : affine_h2(target);
    if (!embeds(hs, ht)) return {true, k, std::move(hs), std::move(ht)};
  }
  return {};
}

EqeDecision existentially_equivalent_affine(const CoxeterType& s,
                                            const CoxeterType& t) {
  for (const CoxeterType* x : {&s, &t}) {
    require_affine_irreducible(*x, "existentially_equivalent_affine");
    if (!x->affine_simply_laced())
      fail(Errc::unsupported_type,
           x->str() + " is not simply laced");
  }

  auto is_high_affa = [](const CoxeterType& x) {
    return x.family == Family::AffA && x.rank >= 4;
  };
  if (!is_high_affa(s) && !is_high_affa(t)) return {};  // out of scope

  EqeDecision d;
  if (s == t) {
    d.verdict = EqeVerdict::equivalent;
    return d;
  }
  d.verdict = EqeVerdict::not_equivalent;
  if (s.family == Family::AffA && t.family == Family::AffA) {
    // Distinct ranks: settled by the co-Hopf property of the AffA groups.
    d.rank_certificate = {s.rank, t.rank};
    return d;
  }
  // AffA vs AffD/AffE: the AffA side cannot be a retract of the other, by
  // homology.
  const CoxeterType& affa = is_high_affa(s) ? s : t;
  const CoxeterType& other = is_high_affa(s) ? t : s;
  d.homology_certificate = retract_obstruction(other, affa);
  return d;
}

}  // namespace artin
