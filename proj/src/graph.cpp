#include "artin/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "artin/error.hpp"

namespace artin {

Label Label::finite(long long m) {
  if (m < 2) fail(Errc::label_out_of_range, "label must be >= 2, got " + std::to_string(m));
  return Label(m);
}

std::string Label::str() const {
  return infinite() ? "inf" : std::to_string(m_);
}

namespace {

std::pair<int, int> ordered(int u, int v) {
  return u < v ? std::pair{u, v} : std::pair{v, u};
}

// Disjoint-set forest with path halving; roots are the smallest members
// only after normalization in the callers.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

CoxeterGraph CoxeterGraph::build(std::vector<std::string> names,
                                 const std::vector<Edge>& edges) {
  CoxeterGraph g;
  g.names_ = std::move(names);
  const int n = g.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.names_[i] == g.names_[j])
        fail(Errc::duplicate_vertex, g.names_[i]);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v)
      fail(Errc::unknown_vertex, "bad edge endpoints");
    if (!e.label.is_edge()) continue;  // explicit label 2 is the default
    auto key = ordered(e.u, e.v);
    auto [it, inserted] = g.labels_.emplace(key, e.label);
    if (!inserted && it->second != e.label)
      fail(Errc::duplicate_edge,
           g.names_[key.first] + " " + g.names_[key.second]);
  }
  g.adj_.assign(n, {});
  for (const auto& [key, lab] : g.labels_) {
    g.adj_[key.first].push_back(key.second);
    g.adj_[key.second].push_back(key.first);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

CoxeterGraph CoxeterGraph::parse(std::string_view text) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  bool have_vertices = false;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto where = [&] { return "line " + std::to_string(lineno); };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;  // blank

    if (word == "vertices:") {
      if (have_vertices)
        fail(Errc::syntax_error, "second vertices: line at " + where());
      std::string name;
      while (ls >> name) {
        if (std::find(names.begin(), names.end(), name) != names.end())
          fail(Errc::duplicate_vertex, name + " at " + where());
        names.push_back(name);
      }
      have_vertices = true;
    } else if (word == "edge") {
      if (!have_vertices)
        fail(Errc::syntax_error, "edge before vertices: at " + where());
      std::string a, b, lab;
      if (!(ls >> a >> b >> lab))
        fail(Errc::syntax_error, "expected 'edge u v LABEL' at " + where());
      std::string extra;
      if (ls >> extra)
        fail(Errc::syntax_error, "trailing token '" + extra + "' at " + where());
      auto idx = [&](const std::string& nm) {
        auto it = std::find(names.begin(), names.end(), nm);
        if (it == names.end()) fail(Errc::unknown_vertex, nm + " at " + where());
        return static_cast<int>(it - names.begin());
      };
      int u = idx(a), v = idx(b);
      if (u == v) fail(Errc::syntax_error, "self-edge at " + where());
      Label label;
      if (lab == "inf") {
        label = Label::inf();
      } else {
        long long m = 0;
        size_t used = 0;
        try {
          m = std::stoll(lab, &used);
        } catch (const std::exception&) {
          fail(Errc::syntax_error, "bad label '" + lab + "' at " + where());
        }
        if (used != lab.size())
          fail(Errc::syntax_error, "bad label '" + lab + "' at " + where());
        if (m < 2)
          fail(Errc::label_out_of_range, lab + " at " + where());
        label = Label::finite(m);
      }
      edges.push_back({u, v, label});
    } else {
      fail(Errc::syntax_error, "unknown directive '" + word + "' at " + where());
    }
  }
  if (!have_vertices) fail(Errc::syntax_error, "missing vertices: line");

  // Conflicting duplicate edges are diagnosed here so the message carries
  // names; build() re-checks.
  std::map<std::pair<int, int>, Label> seen;
  for (const Edge& e : edges) {
    auto key = ordered(e.u, e.v);
    auto [it, inserted] = seen.emplace(key, e.label);
    if (!inserted && it->second != e.label)
      fail(Errc::duplicate_edge, names[key.first] + " " + names[key.second] +
                                     ": " + it->second.str() + " vs " +
                                     e.label.str());
  }
  return build(std::move(names), edges);
}

int CoxeterGraph::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

Label CoxeterGraph::label(int u, int v) const {
  auto it = labels_.find(ordered(u, v));
  return it == labels_.end() ? Label() : it->second;
}

std::vector<Edge> CoxeterGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(labels_.size());
  for (const auto& [key, lab] : labels_)
    out.push_back({key.first, key.second, lab});
  return out;
}

std::vector<NonEdge> CoxeterGraph::non_edges() const {
  std::vector<NonEdge> out;
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (!label(u, v).is_edge()) out.push_back({u, v});
  return out;
}

CoxeterGraph CoxeterGraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  std::vector<std::string> names;
  names.reserve(vs.size());
  for (int v : vs) names.push_back(names_[v]);
  std::vector<Edge> edges;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) {
      Label l = label(vs[i], vs[j]);
      if (l.is_edge())
        edges.push_back({static_cast<int>(i), static_cast<int>(j), l});
    }
  return build(std::move(names), edges);
}

std::string CoxeterGraph::serialize() const {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& n : names_) out << ' ' << n;
  out << '\n';
  for (const auto& [key, lab] : labels_)
    out << "edge " << names_[key.first] << ' ' << names_[key.second] << ' '
        << lab.str() << '\n';
  return out.str();
}

std::vector<std::vector<int>> component_indices(const CoxeterGraph& g) {
  UnionFind uf(g.size());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < g.size(); ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

std::vector<CoxeterGraph> connected_components(const CoxeterGraph& g) {
  std::vector<CoxeterGraph> out;
  for (const auto& comp : component_indices(g)) out.push_back(g.induced(comp));
  return out;
}

bool is_connected(const CoxeterGraph& g) {
  return component_indices(g).size() == 1;
}

int first_betti_number(const CoxeterGraph& g) {
  int e = static_cast<int>(g.edges().size());
  int v = g.size();
  int c = static_cast<int>(component_indices(g).size());
  return e - v + c;
}

std::vector<std::vector<NonEdge>> non_edge_classes(const CoxeterGraph& g) {
  const std::vector<NonEdge> pairs = g.non_edges();
  std::map<NonEdge, int> id;
  for (size_t i = 0; i < pairs.size(); ++i)
    id[pairs[i]] = static_cast<int>(i);

  UnionFind uf(static_cast<int>(pairs.size()));
  // {u,w} ~ {v,w} whenever {u,v} is an edge: for every vertex w, join the
  // non-edges through w whose other endpoints are adjacent.
  for (int w = 0; w < g.size(); ++w) {
    std::vector<int> others;
    for (int x = 0; x < g.size(); ++x)
      if (x != w && !g.label(x, w).is_edge()) others.push_back(x);
    for (size_t i = 0; i < others.size(); ++i)
      for (size_t j = i + 1; j < others.size(); ++j)
        if (g.label(others[i], others[j]).is_edge()) {
          int a = id.at({std::min(others[i], w), std::max(others[i], w)});
          int b = id.at({std::min(others[j], w), std::max(others[j], w)});
          uf.unite(a, b);
        }
  }

  std::map<int, std::vector<NonEdge>> by_root;
  for (size_t i = 0; i < pairs.size(); ++i)
    by_root[uf.find(static_cast<int>(i))].push_back(pairs[i]);
  std::vector<std::vector<NonEdge>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

}  // namespace artin
