#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace artin {

/// Coxeter matrix entry for a pair of distinct generators: an integer m >= 2
/// or infinity. The value 2 (commuting pair) is the default for pairs that
/// carry no edge in the graph.
class Label {
 public:
  constexpr Label() : m_(2) {}

  static constexpr Label inf() { return Label(kInf); }
  static Label finite(long long m);  // m >= 2

  constexpr bool infinite() const { return m_ == kInf; }
  /// Finite value; only meaningful when !infinite().
  constexpr long long value() const { return m_; }

  /// True for m >= 3 or infinity, i.e. the pair is joined in the graph.
  constexpr bool is_edge() const { return infinite() || m_ >= 3; }
  constexpr bool odd_finite() const { return !infinite() && m_ % 2 == 1; }

  std::string str() const;  // "3", "inf", ...

  friend constexpr bool operator==(Label a, Label b) = default;
  friend constexpr auto operator<=>(Label a, Label b) = default;

 private:
  static constexpr long long kInf = -1;
  explicit constexpr Label(long long m) : m_(m) {}
  long long m_;
};

/// A commuting pair (label exactly 2), stored with u < v.
struct NonEdge {
  int u = 0;
  int v = 0;
  friend bool operator==(const NonEdge&, const NonEdge&) = default;
  friend auto operator<=>(const NonEdge&, const NonEdge&) = default;
};

struct Edge {
  int u = 0;
  int v = 0;  // u < v
  Label label;
};

/// Finite Coxeter graph: an ordered list of named generators plus the labels
/// m_{s,t} >= 3 (or infinity) on joined pairs. Absent pairs have m = 2.
/// Immutable after construction; all operations on graphs are pure.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;

  /// Builds a graph from generator names and labeled edges (endpoint
  /// indices into `names`). Label-2 edges are accepted and not stored.
  static CoxeterGraph build(std::vector<std::string> names,
                            const std::vector<Edge>& edges);

  /// Parses the line-oriented text format (see parse_graph.md / README).
  static CoxeterGraph parse(std::string_view text);

  int size() const { return static_cast<int>(names_.size()); }
  bool empty() const { return names_.empty(); }

  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(std::string_view name) const;  // -1 when absent

  Label label(int u, int v) const;
  /// Vertices joined to v by an edge (label >= 3 or inf), ascending.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  /// Stored edges with u < v, ordered by (u, v).
  std::vector<Edge> edges() const;
  /// All label-2 pairs with u < v, ordered by (u, v).
  std::vector<NonEdge> non_edges() const;

  /// Subgraph induced on `vertices` (indices, any order); generator names
  /// are kept, indices are re-assigned in ascending original order.
  CoxeterGraph induced(const std::vector<int>& vertices) const;

  /// Canonical text form; parse(serialize()) reproduces the graph.
  std::string serialize() const;

  friend bool operator==(const CoxeterGraph&, const CoxeterGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::map<std::pair<int, int>, Label> labels_;  // keys (u, v) with u < v
  std::vector<std::vector<int>> adj_;
};

/// Vertex partition into connected components (through edges with label
/// >= 3 or inf), each sorted ascending, ordered by smallest member.
std::vector<std::vector<int>> component_indices(const CoxeterGraph& g);

/// Induced subgraphs of the connected components, in the order above.
std::vector<CoxeterGraph> connected_components(const CoxeterGraph& g);

bool is_connected(const CoxeterGraph& g);

/// |E| - |V| + #components, counting only edges with label >= 3 or inf.
int first_betti_number(const CoxeterGraph& g);

/// Partition of the non-edges under the transitive closure of
/// {u,w} ~ {v,w} whenever {u,v} is an edge. Classes are sorted internally
/// and ordered by smallest member.
std::vector<std::vector<NonEdge>> non_edge_classes(const CoxeterGraph& g);

}  // namespace artin
