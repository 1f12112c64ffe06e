#include "artin/homology.hpp"

#include <numeric>

#include "artin/classify.hpp"
#include "artin/error.hpp"
#include "artin/snf.hpp"

namespace artin {

AbelianGroup homology_at(const ChainComplex& c, int k) {
  if (k < 0 || k > c.max_degree)
    fail(Errc::degree_out_of_range,
         "k = " + std::to_string(k) + ", max_degree = " +
             std::to_string(c.max_degree));

  const int n_k = c.dim(k);
  if (n_k == 0) return AbelianGroup::trivial();
  const IntMatrix& d_k = c.boundaries[k];
  const IntMatrix& d_next = c.boundaries[k + 1];

  // Column-reduce d_k: x lies in ker d_k iff the first r_k entries of
  // G x vanish, G the inverse column transform.
  SmithTransforms snf_k = smith_with_col_transform(d_k);
  const int r_k = snf_k.rank();

  // Express im d_{k+1} in kernel coordinates. Rows 0..r_k-1 of G d_{k+1}
  // vanish exactly because d_k d_{k+1} = 0.
  IntMatrix in_kernel_coords = snf_k.col_transform_inv * d_next;
  for (int r = 0; r < r_k; ++r)
    for (int col = 0; col < in_kernel_coords.cols(); ++col)
      if (in_kernel_coords.at(r, col) != 0)
        fail(Errc::non_divisible, "boundary composition is nonzero");

  IntMatrix presentation(n_k - r_k, in_kernel_coords.cols());
  for (int r = r_k; r < n_k; ++r)
    for (int col = 0; col < in_kernel_coords.cols(); ++col)
      presentation.at(r - r_k, col) = in_kernel_coords.at(r, col);

  SmithForm snf_p = smith_normal_form(std::move(presentation));
  AbelianGroup h;
  h.free_rank = (n_k - r_k) - snf_p.rank();
  for (BigInt& d : snf_p.diagonal)
    if (d > 1) h.torsion.push_back(std::move(d));
  return h;
}

AbelianGroup h2_fast(const CoxeterGraph& g) {
  if (!is_connected(g)) fail(Errc::disconnected_graph, "h2_fast");
  if (!is_simply_laced(g)) fail(Errc::not_simply_laced, "h2_fast");
  const int b = first_betti_number(g);
  const int c = static_cast<int>(non_edge_classes(g).size());
  AbelianGroup h;
  h.free_rank = b;
  h.torsion.assign(static_cast<size_t>(c), BigInt(2));
  return h;
}

AbelianGroup h1_of_artin(const CoxeterGraph& g) {
  // Generators s, t are identified in the abelianization exactly when the
  // relation (st..)_m = (ts..)_m with m odd survives; even and infinite
  // labels impose nothing.
  std::vector<int> cls(g.size());
  std::iota(cls.begin(), cls.end(), 0);
  auto find = [&](int x) {
    while (cls[x] != x) x = cls[x] = cls[cls[x]];
    return x;
  };
  for (const Edge& e : g.edges())
    if (e.label.odd_finite()) {
      int a = find(e.u), b = find(e.v);
      if (a != b) cls[std::max(a, b)] = std::min(a, b);
    }
  int classes = 0;
  for (int v = 0; v < g.size(); ++v)
    if (find(v) == v) ++classes;
  return AbelianGroup::free(classes);
}

bool embeds(const AbelianGroup& sub, const AbelianGroup& ambient) {
  auto two_valuation = [](BigInt d) {
    int v = 0;
    while (d % 2 == 0) {
      d >>= 1;
      ++v;
    }
    if (d != 1)
      fail(Errc::unsupported_torsion, "torsion coefficient not a power of 2");
    return v;
  };
  std::vector<int> vs, va;
  for (const BigInt& d : sub.torsion) vs.push_back(two_valuation(d));
  for (const BigInt& d : ambient.torsion) va.push_back(two_valuation(d));

  if (sub.free_rank > ambient.free_rank) return false;
  // Counting factors of 2-adic valuation >= k on both sides; a finite
  // abelian 2-group embeds iff every such count is dominated.
  int max_v = 0;
  for (int v : vs) max_v = std::max(max_v, v);
  for (int k = 1; k <= max_v; ++k) {
    auto count = [k](const std::vector<int>& vals) {
      int n = 0;
      for (int v : vals)
        if (v >= k) ++n;
      return n;
    };
    if (count(vs) > count(va)) return false;
  }
  return true;
}

}  // namespace artin
