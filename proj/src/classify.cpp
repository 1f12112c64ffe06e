#include "artin/classify.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "artin/error.hpp"

namespace artin {

namespace {

// Label-3 path s_from - ... - s_to (1-based generator numbers).
void chain(std::vector<Edge>& edges, int from, int to) {
  for (int i = from; i < to; ++i)
    edges.push_back({i - 1, i, Label::finite(3)});
}

}  // namespace

CoxeterGraph template_graph(const CoxeterType& t) {
  const int n = t.rank;
  std::vector<std::string> names;
  for (int i = 1; i <= t.vertex_count(); ++i)
    names.push_back("s" + std::to_string(i));
  std::vector<Edge> edges;
  auto e = [&](int a, int b, long long m = 3) {
    edges.push_back({a - 1, b - 1, Label::finite(m)});
  };

  switch (t.family) {
    case Family::A:
      chain(edges, 1, n);
      break;
    case Family::B:
      e(1, 2, 4);
      chain(edges, 2, n);
      break;
    case Family::D:
      e(1, 3);
      e(2, 3);
      chain(edges, 3, n);
      break;
    case Family::E6:
      e(1, 3), e(3, 4), e(4, 5), e(5, 6), e(2, 4);
      break;
    case Family::E7:
      e(1, 3), e(3, 4), e(4, 5), e(5, 6), e(6, 7), e(2, 4);
      break;
    case Family::E8:
      e(1, 3), e(3, 4), e(4, 5), e(5, 6), e(6, 7), e(7, 8), e(2, 4);
      break;
    case Family::F4:
      e(1, 2), e(2, 3, 4), e(3, 4);
      break;
    case Family::H3:
      e(1, 2, 5), e(2, 3);
      break;
    case Family::H4:
      e(1, 2, 5), e(2, 3), e(3, 4);
      break;
    case Family::I2:
      e(1, 2, *t.dihedral_label);
      break;
    case Family::AffA:
      if (n == 1) {
        edges.push_back({0, 1, Label::inf()});
      } else {
        // (n+1)-cycle
        chain(edges, 1, n);
        e(1, n + 1);
        e(n, n + 1);
      }
      break;
    case Family::AffD:
      e(1, 3);
      e(2, 3);
      chain(edges, 3, n - 1);
      e(n - 1, n);
      e(n - 1, n + 1);
      break;
    case Family::AffE6:
      // center s3 with three arms of length 2
      e(1, 2), e(2, 3), e(3, 6), e(6, 7), e(3, 4), e(4, 5);
      break;
    case Family::AffE7:
      // center s4 with arms 3, 3 and leg 1
      e(1, 2), e(2, 3), e(3, 4), e(4, 6), e(6, 7), e(7, 8), e(4, 5);
      break;
    case Family::AffE8:
      // center s3 with arms 2, 5 and leg 1
      e(1, 2), e(2, 3), e(3, 5), e(5, 6), e(6, 7), e(7, 8), e(8, 9), e(3, 4);
      break;
    case Family::Unknown:
      fail(Errc::unsupported_type, "no template for Unknown");
  }
  return CoxeterGraph::build(std::move(names), edges);
}

namespace {

// Sorted multiset of incident labels, the per-vertex invariant used to
// prune candidate bijections.
std::vector<Label> vertex_fingerprint(const CoxeterGraph& g, int v) {
  std::vector<Label> out;
  for (int u : g.neighbors(v)) out.push_back(g.label(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

bool extend_mapping(const CoxeterGraph& a, const CoxeterGraph& b,
                    std::vector<int>& map_ab, std::vector<bool>& used,
                    int next) {
  const int n = a.size();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      ok = a.label(prev, next) == b.label(map_ab[prev], cand);
    if (!ok) continue;
    map_ab[next] = cand;
    used[cand] = true;
    if (extend_mapping(a, b, map_ab, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool labeled_isomorphic(const CoxeterGraph& a, const CoxeterGraph& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();

  std::vector<std::vector<Label>> fa(n), fb(n);
  for (int v = 0; v < n; ++v) {
    fa[v] = vertex_fingerprint(a, v);
    fb[v] = vertex_fingerprint(b, v);
  }
  auto sorted = [](std::vector<std::vector<Label>> f) {
    std::sort(f.begin(), f.end());
    return f;
  };
  if (sorted(fa) != sorted(fb)) return false;

  std::vector<int> map_ab(n, -1);
  std::vector<bool> used(n, false);
  return extend_mapping(a, b, map_ab, used, 0);
}

CoxeterType recognize_irreducible(const CoxeterGraph& g) {
  if (g.empty()) fail(Errc::empty_graph, "recognize_irreducible");
  if (!is_connected(g)) fail(Errc::disconnected_graph, "recognize_irreducible");

  const int v = g.size();
  if (v == 1) return CoxeterType::make(Family::A, 1);
  if (v == 2) {
    Label l = g.label(0, 1);
    if (l.infinite()) return CoxeterType::make(Family::AffA, 1);
    return CoxeterType::i2(l.value());  // 3 -> A2, 4 -> B2
  }

  // Candidate catalog types with the right vertex count; the isomorphism
  // test settles the match.
  std::vector<CoxeterType> candidates;
  candidates.push_back(CoxeterType::make(Family::A, v));
  candidates.push_back(CoxeterType::make(Family::B, v));
  if (v >= 4) candidates.push_back(CoxeterType::make(Family::D, v));
  if (v == 6) candidates.push_back(CoxeterType::make(Family::E6, 6));
  if (v == 7) candidates.push_back(CoxeterType::make(Family::E7, 7));
  if (v == 8) candidates.push_back(CoxeterType::make(Family::E8, 8));
  if (v == 4) candidates.push_back(CoxeterType::make(Family::F4, 4));
  if (v == 3) candidates.push_back(CoxeterType::make(Family::H3, 3));
  if (v == 4) candidates.push_back(CoxeterType::make(Family::H4, 4));
  candidates.push_back(CoxeterType::make(Family::AffA, v - 1));
  if (v >= 5) candidates.push_back(CoxeterType::make(Family::AffD, v - 1));
  if (v == 7) candidates.push_back(CoxeterType::make(Family::AffE6, 6));
  if (v == 8) candidates.push_back(CoxeterType::make(Family::AffE7, 7));
  if (v == 9) candidates.push_back(CoxeterType::make(Family::AffE8, 8));

  for (const CoxeterType& t : candidates)
    if (labeled_isomorphic(g, template_graph(t))) return t;
  return CoxeterType::unknown();
}

Decomposition classify(const CoxeterGraph& g) {
  Decomposition d;
  for (const auto& comp : component_indices(g))
    d.components.push_back({recognize_irreducible(g.induced(comp)), comp});
  std::sort(d.components.begin(), d.components.end());
  return d;
}

bool is_spherical(const CoxeterGraph& g) {
  return classify(g).all_spherical();
}

bool is_simply_laced(const CoxeterGraph& g) {
  for (const Edge& e : g.edges())
    if (e.label != Label::finite(3)) return false;
  return true;
}

bool is_affine_simply_laced(const CoxeterGraph& g) {
  for (const auto& c : classify(g).components)
    if (!c.type.affine_simply_laced()) return false;
  return !g.empty();
}

bool is_spherical_subset(const CoxeterGraph& g, const std::vector<int>& subset) {
  if (subset.empty()) return true;
  for (const auto& s : subset)
    for (const auto& t : subset)
      if (s < t && g.label(s, t).infinite()) return false;
  return is_spherical(g.induced(subset));
}

std::vector<std::vector<int>> spherical_subsets(const CoxeterGraph& g,
                                                int max_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // Depth-first over ascending index choices emits subsets in
  // lexicographic order within each size; a stable sort by size afterwards
  // gives the documented (size, lex) order. K is closed under subsets, so
  // the search prunes at the first non-spherical set.
  auto rec = [&](auto&& self, int next) -> void {
    out.push_back(current);
    if (static_cast<int>(current.size()) == max_size) return;
    for (int v = next; v < g.size(); ++v) {
      current.push_back(v);
      if (is_spherical_subset(g, current)) self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  std::stable_sort(out.begin(), out.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     return a.size() < b.size();
                   });
  return out;
}

CoxeterGraph preset_graph(std::string_view expr) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  for (size_t i = 0; i <= expr.size(); ++i) {
    if (i == expr.size() || expr[i] == '+') {
      parts.push_back(expr.substr(start, i - start));
      start = i + 1;
    }
  }

  std::vector<std::string> names;
  std::vector<Edge> edges;
  int offset = 0;
  for (std::string_view part : parts) {
    auto t = parse_type(part);
    if (!t || t->is_unknown())
      fail(Errc::syntax_error, "bad preset '" + std::string(part) + "'");
    CoxeterGraph piece = template_graph(*t);
    for (int v = 0; v < piece.size(); ++v)
      names.push_back("s" + std::to_string(offset + v + 1));
    for (Edge e : piece.edges())
      edges.push_back({e.u + offset, e.v + offset, e.label});
    offset += piece.size();
  }
  return CoxeterGraph::build(std::move(names), edges);
}

}  // namespace artin
