#pragma once

#include <vector>

#include "graphlaw/ugraph.hpp"

namespace graphlaw {

// Cliques in a perfect ordering plus separators with multiplicities.
// Separators are aggregated by set equality; for a graph with k connected
// components the empty separator appears with multiplicity k-1, so that
// sum of multiplicities == #cliques - 1 always holds.
struct JunctionTree {
  std::vector<VertexSet> cliques;
  std::vector<std::pair<VertexSet, int>> separators;
};

// A covering pair; only meaningful relative to a graph it was validated
// against (see is_decomposition).
struct Decomposition {
  VertexSet a;
  VertexSet b;
};

enum class DecompositionFailure {
  None,
  NotCovering,
  IntersectionNotComplete,
  NotSeparated,
};

struct DecompositionCheck {
  bool ok = false;
  DecompositionFailure reason = DecompositionFailure::None;
  explicit operator bool() const { return ok; }
};

bool is_chordal(const UGraph& g);

// Maximum cardinality search order over g.verts(), ties broken by lowest
// vertex index. Throws NotDecomposable when g is not chordal.
JunctionTree junction_tree(const UGraph& g);

// Same construction with MCS ties broken by position in `priority` (a
// permutation of ambient labels); exists so tests can confirm the clique set
// and separator multiset do not depend on the tie-break.
JunctionTree junction_tree_with_tiebreak(const UGraph& g,
                                         const std::vector<int>& priority);

// (A,B) decomposes g iff A u B covers, g_{A n B} is complete, and A n B
// separates A from B.
DecompositionCheck is_decomposition(const UGraph& g, VertexSet a, VertexSet b);

// Unique decomposable graph on A u B with margins h on A and j on B and (A,B)
// one of its decompositions: the edge union. Requires both margins complete
// on the shared vertices.
UGraph graph_product(const UGraph& h, const UGraph& j);

// Every connected component of g minus A must have a complete boundary.
bool is_collapsible(const UGraph& g, VertexSet a);

}  // namespace graphlaw
