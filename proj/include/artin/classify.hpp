#pragma once

#include <string_view>
#include <vector>

#include "artin/graph.hpp"
#include "artin/types.hpp"

namespace artin {

/// Catalog layout of an irreducible type as a concrete graph with
/// generators s1, s2, ... (paths numbered along the chain, forks at the
/// ends, affine shapes per the standard extended diagrams).
CoxeterGraph template_graph(const CoxeterType& t);

/// Exact isomorphism of labeled graphs (vertex bijection preserving every
/// m_{s,t}). Backtracking with degree/label fingerprint pruning; intended
/// for the small graphs this library deals in.
bool labeled_isomorphic(const CoxeterGraph& a, const CoxeterGraph& b);

/// Canonical type of a connected graph, or Unknown when it matches neither
/// the spherical nor the simply laced affine catalog.
/// Throws EmptyGraph / DisconnectedGraph.
CoxeterType recognize_irreducible(const CoxeterGraph& g);

/// Irreducible decomposition: recognize_irreducible on every connected
/// component, sorted canonically.
Decomposition classify(const CoxeterGraph& g);

bool is_spherical(const CoxeterGraph& g);
bool is_simply_laced(const CoxeterGraph& g);  // all labels in {2, 3}
bool is_affine_simply_laced(const CoxeterGraph& g);

/// True when every component of the induced subgraph is spherical.
bool is_spherical_subset(const CoxeterGraph& g, const std::vector<int>& subset);

/// All subsets sigma with |sigma| <= max_size whose induced subgraph is
/// spherical, including the empty set. Ordered by size, then
/// lexicographically by ascending vertex indices.
std::vector<std::vector<int>> spherical_subsets(const CoxeterGraph& g,
                                                int max_size);

/// Resolves a preset expression — type names joined with '+', e.g.
/// "A2+B3+I2(5)" or "~D4" — to a disjoint-union graph with generators
/// named s1, s2, ... across all summands. Throws SyntaxError on bad input.
CoxeterGraph preset_graph(std::string_view expr);

}  // namespace artin
