#include "artin/poincare.hpp"

#include <algorithm>
#include <cassert>

#include "artin/classify.hpp"
#include "artin/error.hpp"

namespace artin {

std::vector<int> exponents(const CoxeterType& t) {
  const int n = t.rank;
  std::vector<int> e;
  switch (t.family) {
    case Family::A:  // 1, 2, ..., n
      for (int i = 1; i <= n; ++i) e.push_back(i);
      break;
    case Family::B:  // 1, 3, ..., 2n-1
      for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
      break;
    case Family::D:  // 1, 3, ..., 2n-3 and n-1
      for (int i = 1; i <= n - 1; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      break;
    case Family::E6: e = {1, 4, 5, 7, 8, 11}; break;
    case Family::E7: e = {1, 5, 7, 9, 11, 13, 17}; break;
    case Family::E8: e = {1, 7, 11, 13, 17, 19, 23, 29}; break;
    case Family::F4: e = {1, 5, 7, 11}; break;
    case Family::H3: e = {1, 5, 9}; break;
    case Family::H4: e = {1, 11, 19, 29}; break;
    case Family::I2: e = {1, static_cast<int>(*t.dihedral_label) - 1}; break;
    default:
      fail(Errc::not_spherical, t.str());
  }
  std::sort(e.begin(), e.end());
  return e;
}

BigInt coxeter_group_order(const CoxeterType& t) {
  const int n = t.rank;
  auto factorial = [](int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B: return factorial(n) << n;
    case Family::D: return factorial(n) << (n - 1);
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
    case Family::E8: return 696729600;
    case Family::F4: return 1152;
    case Family::H3: return 120;
    case Family::H4: return 14400;
    case Family::I2: return BigInt(2) * *t.dihedral_label;
    default:
      fail(Errc::not_spherical, t.str());
  }
}

IntPolynomial poincare_polynomial(const CoxeterType& t) {
  IntPolynomial w = IntPolynomial::one();
  for (int e : exponents(t)) w = w * IntPolynomial::q_integer(e + 1);
  assert(w.eval(1) == coxeter_group_order(t));
  return w;
}

IntPolynomial poincare_of_subset(const CoxeterGraph& g,
                                 const std::vector<int>& subset) {
  if (subset.empty()) return IntPolynomial::one();
  Decomposition d = classify(g.induced(subset));
  IntPolynomial w = IntPolynomial::one();
  for (const Component& c : d.components) {
    if (!c.type.spherical()) fail(Errc::not_spherical, c.type.str());
    w = w * poincare_polynomial(c.type);
  }
  return w;
}

BigInt boundary_coefficient(const CoxeterGraph& g,
                            const std::vector<int>& sigma,
                            const std::vector<int>& tau) {
  IntPolynomial ws = poincare_of_subset(g, sigma);
  IntPolynomial wt = poincare_of_subset(g, tau);
  auto quotient = IntPolynomial::divide_exact(ws, wt);
  if (!quotient)
    fail(Errc::non_divisible,
         "W_sigma not divisible by W_tau (" + ws.str() + ") / (" + wt.str() + ")");
  return quotient->eval(-1);
}

}  // namespace artin
