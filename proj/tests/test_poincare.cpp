#include <doctest.h>

#include <numeric>
#include <random>

#include "artin/classify.hpp"
#include "artin/error.hpp"
#include "artin/modeltheory.hpp"
#include "artin/poincare.hpp"
#include "test_support.hpp"

using namespace artin;
using testsupport::graph_of;

namespace {

IntPolynomial poly(std::vector<long long> coeffs) {
  return IntPolynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

std::vector<int> full_set(const CoxeterGraph& g) {
  std::vector<int> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  CHECK(IntPolynomial().is_zero());
  CHECK(poly({1, 2, 0}).degree() == 1);  // canonical trim
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({1, 1}) * poly({1, 1, 1}) == poly({1, 2, 2, 1}));
  CHECK((poly({1, 2, 2, 1}) - poly({1, 2, 2, 1})).is_zero());
  CHECK(poly({1, 1}).eval(-1) == 0);
  CHECK(poly({1, 0, 1}).eval(-1) == 2);
  CHECK(IntPolynomial::q_integer(4) == poly({1, 1, 1, 1}));
}

TEST_CASE("exact division") {
  auto q = IntPolynomial::divide_exact(poly({1, 2, 2, 1}), poly({1, 1}));
  REQUIRE(q.has_value());
  CHECK(*q == poly({1, 1, 1}));
  CHECK(!IntPolynomial::divide_exact(poly({1, 1, 1}), poly({1, 1})).has_value());
  CHECK(!IntPolynomial::divide_exact(poly({1}), poly({1, 1})).has_value());
  // non-monic divisor dividing exactly
  CHECK(IntPolynomial::divide_exact(poly({2, 4}), poly({2})).value() ==
        poly({1, 2}));
}

TEST_CASE("Poincare polynomials of the small types") {
  CHECK(poincare_polynomial(CoxeterType::make(Family::A, 1)) == poly({1, 1}));
  CHECK(poincare_polynomial(CoxeterType::make(Family::A, 2)) ==
        poly({1, 1}) * poly({1, 1, 1}));
  CHECK(poincare_polynomial(CoxeterType::make(Family::A, 3)) ==
        poly({1, 1}) * poly({1, 1}) * poly({1, 1, 1}) * poly({1, 0, 1}));
}

TEST_CASE("Poincare polynomials of subsets") {
  CoxeterGraph two = graph_of(2, {});  // A1 + A1
  CHECK(poincare_of_subset(two, full_set(two)) == poly({1, 2, 1}));

  CoxeterGraph a2a1 = preset_graph("A2+A1");
  CHECK(poincare_of_subset(a2a1, full_set(a2a1)) ==
        poly({1, 1}) * poly({1, 1}) * poly({1, 1, 1}));

  CHECK(poincare_of_subset(two, {}) == IntPolynomial::one());

  CHECK_THROWS_AS(poincare_of_subset(graph_of(2, {{0, 1, 0}}), {0, 1}), Error);
}

TEST_CASE("boundary coefficients on small faces") {
  // edge of label 3: (1+q+q^2) at -1
  CoxeterGraph a2 = graph_of(2, {{0, 1, 3}});
  CHECK(boundary_coefficient(a2, {0, 1}, {0}) == 1);
  // commuting pair: (1+q) at -1
  CoxeterGraph a1a1 = graph_of(2, {});
  CHECK(boundary_coefficient(a1a1, {0, 1}, {0}) == 0);
  // 3-vertex path over its commuting face: (1+q+q^2)(1+q^2) at -1
  CoxeterGraph path = graph_of(3, {{0, 1, 3}, {1, 2, 3}});
  CHECK(boundary_coefficient(path, {0, 1, 2}, {0, 2}) == 2);
}

TEST_CASE("W(1) equals the group order for all catalog types") {
  std::vector<CoxeterType> types;
  for (int n = 1; n <= 8; ++n) types.push_back(CoxeterType::make(Family::A, n));
  for (int n = 2; n <= 8; ++n) types.push_back(CoxeterType::make(Family::B, n));
  for (int n = 4; n <= 8; ++n) types.push_back(CoxeterType::make(Family::D, n));
  types.push_back(CoxeterType::make(Family::E6, 6));
  types.push_back(CoxeterType::make(Family::E7, 7));
  types.push_back(CoxeterType::make(Family::E8, 8));
  types.push_back(CoxeterType::make(Family::F4, 4));
  types.push_back(CoxeterType::make(Family::H3, 3));
  types.push_back(CoxeterType::make(Family::H4, 4));
  for (int m = 5; m <= 12; ++m) types.push_back(CoxeterType::i2(m));

  for (const CoxeterType& t : types) {
    CAPTURE(t.str());
    IntPolynomial w = poincare_polynomial(t);
    CHECK(w.eval(1) == coxeter_group_order(t));
    // degree of W = number of reflections N = n*h/2
    CHECK(w.degree() == center_fact(t).reflection_count);
    // all coefficients nonnegative
    for (const BigInt& c : w.coeffs()) CHECK(c >= 0);
  }

  CHECK(coxeter_group_order(CoxeterType::make(Family::A, 7)) == 40320);
  CHECK(coxeter_group_order(CoxeterType::make(Family::E8, 8)) == 696729600);
  CHECK(coxeter_group_order(CoxeterType::make(Family::H3, 3)) == 120);
}

TEST_CASE("property: subset polynomial is multiplicative over unions") {
  std::mt19937 rng(31);
  for (int i = 0; i < 50; ++i) {
    CoxeterGraph g = testsupport::random_graph(rng, 7, {3, 4, 5}, 0.35);
    auto subsets = spherical_subsets(g, std::min(4, g.size()));
    // pick two disjoint spherical subsets; their union, when spherical,
    // multiplies (components are independent)
    for (size_t a = 0; a < subsets.size(); a += 7) {
      for (size_t b = a + 1; b < subsets.size(); b += 5) {
        std::vector<int> both;
        std::set_union(subsets[a].begin(), subsets[a].end(),
                       subsets[b].begin(), subsets[b].end(),
                       std::back_inserter(both));
        if (both.size() != subsets[a].size() + subsets[b].size()) continue;
        bool no_cross_edge = true;
        for (int u : subsets[a])
          for (int v : subsets[b])
            if (g.label(u, v).is_edge()) no_cross_edge = false;
        if (!no_cross_edge || !is_spherical_subset(g, both)) continue;
        CHECK(poincare_of_subset(g, both) ==
              poincare_of_subset(g, subsets[a]) * poincare_of_subset(g, subsets[b]));
      }
    }
  }
}

TEST_CASE("property: boundary division is exact on random spherical faces") {
  std::mt19937 rng(32);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    CoxeterGraph g = testsupport::random_graph(rng, 7, {3, 4, 5, 7}, 0.35);
    for (const auto& sigma : spherical_subsets(g, std::min(4, g.size()))) {
      if (sigma.empty()) continue;
      for (size_t drop = 0; drop < sigma.size(); ++drop) {
        std::vector<int> tau = sigma;
        tau.erase(tau.begin() + static_cast<long>(drop));
        CHECK_NOTHROW(boundary_coefficient(g, sigma, tau));
        ++checked;
      }
    }
  }
  CHECK(checked > 500);
}
