#include "artin/salvetti.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>

#include "artin/classify.hpp"
#include "artin/error.hpp"
#include "artin/poincare.hpp"
#include "json_util.hpp"

namespace artin {

ChainComplex build_complex(const CoxeterGraph& g, int max_degree) {
  if (max_degree < 1) fail(Errc::degree_out_of_range, "max_degree must be >= 1");

  ChainComplex c;
  c.graph = g;
  c.max_degree = max_degree;

  // Degrees above g.size() keep empty bases.
  const int top = std::min(max_degree + 1, g.size());
  c.bases.assign(static_cast<size_t>(max_degree) + 2, {});
  for (auto& subset : spherical_subsets(g, top))
    c.bases[subset.size()].push_back(std::move(subset));

  // Column index of each basis subset, per degree.
  std::vector<std::map<std::vector<int>, int>> index(c.bases.size());
  for (size_t k = 0; k < c.bases.size(); ++k)
    for (size_t i = 0; i < c.bases[k].size(); ++i)
      index[k][c.bases[k][i]] = static_cast<int>(i);

  c.boundaries.reserve(c.bases.size());
  for (size_t k = 0; k < c.bases.size(); ++k) {
    const int rows = k == 0 ? 0 : static_cast<int>(c.bases[k - 1].size());
    IntMatrix d(rows, static_cast<int>(c.bases[k].size()));
    if (k > 0) {
      for (size_t col = 0; col < c.bases[k].size(); ++col) {
        const std::vector<int>& sigma = c.bases[k][col];
        std::vector<int> tau(sigma.size() - 1);
        for (size_t j = 0; j < sigma.size(); ++j) {
          // tau = sigma minus its j-th element
          std::copy(sigma.begin(), sigma.begin() + j, tau.begin());
          std::copy(sigma.begin() + j + 1, sigma.end(), tau.begin() + j);
          int sign = (j % 2 == 0) ? 1 : -1;
          BigInt coeff = boundary_coefficient(g, sigma, tau);
          if (coeff == 0) continue;
          d.at(index[k - 1].at(tau), static_cast<int>(col)) = sign * coeff;
        }
      }
    }
    c.boundaries.push_back(std::move(d));
  }
  return c;
}

nlohmann::json dump_complex(const ChainComplex& c) {
  nlohmann::json degrees = nlohmann::json::array();
  for (size_t k = 0; k < c.bases.size(); ++k) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& subset : c.bases[k]) {
      nlohmann::json names = nlohmann::json::array();
      for (int v : subset) names.push_back(c.graph.name(v));
      basis.push_back(std::move(names));
    }
    const IntMatrix& d = c.boundaries[k];
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < d.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int col = 0; col < d.cols(); ++col)
        row.push_back(json_int(d.at(r, col)));
      rows.push_back(std::move(row));
    }
    degrees.push_back({{"k", k}, {"basis", std::move(basis)},
                       {"boundary", std::move(rows)}});
  }
  return nlohmann::json{{"degrees", std::move(degrees)}};
}

}  // namespace artin
