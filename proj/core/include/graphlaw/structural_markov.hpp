#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphlaw/graph_law.hpp"
#include "graphlaw/ugraph.hpp"

namespace graphlaw {

// Violation of the product identity at one decomposition event: the graphs
// g and g_prime both decompose along (a, b), yet the log-products disagree
// (lhs = log pi(g) + log pi(g_prime), rhs over the two cross products).
// Sides with zero mass are -infinity.
struct SmWitness {
  VertexSet a, b;
  UGraph g, g_prime;
  UGraph prod_gb, prod_bg;
  double lhs = 0.0, rhs = 0.0;
};

struct SmResult {
  bool ok = false;
  std::optional<SmWitness> witness;
  std::uint64_t covering_pairs = 0;
  std::uint64_t identities = 0;
};

// Exhaustively checks the product identity over every covering pair of the
// law's vertex set and every ordered pair of graphs decomposed by it.
// |verts| <= 5.  Deterministic scan order: a, b, g, g_prime all ascending by
// mask, first violation reported.
SmResult check_structural_markov(const GraphLaw& law, double tol = 1e-9);

struct RecoverOptions {
  // Accept laws whose support omits some graphs, as long as every graph
  // "complete on C, sparse elsewhere" needed by a supported graph's clique
  // vector carries mass.  Experimental; the full-support route is the only
  // verified one.
  bool allow_partial_support = false;
  double tol = 1e-9;
};

// Reads off omega_C = log pi(G^(C)) with G^(C) complete on C and edgeless
// elsewhere, then verifies the exponential law it defines reproduces the
// input on every supported graph.  Requires check_structural_markov to pass.
SubsetVector recover_omega(const GraphLaw& law, RecoverOptions opts = {});

// Explicit family of decomposable graphs on a shared vertex set, members
// deduplicated and sorted by edge mask.
struct GraphFamily {
  int n = 0;
  VertexSet verts;
  std::vector<UGraph> members;
};

GraphFamily family_from_graphs(int n, std::vector<UGraph> members);
GraphFamily full_universe_family(int n);
GraphFamily forest_family(int n);
GraphFamily max_clique_family(int n, int max_clique);
// Decomposable graphs whose edge set lies between lo's and hi's.
GraphFamily sandwich_family(const UGraph& lo, const UGraph& hi);

struct MetaWitness {
  VertexSet a, b;
  UGraph g, g_prime, product;
};

struct MetaResult {
  bool ok = false;
  std::optional<MetaWitness> witness;
};

// Checks the family is closed under the graph product across every
// decomposition event: for every covering pair (a, b) and members g, g'
// both decomposed by (a, b), the product g_a >< g'_b stays in the family.
// |verts| <= 5.
MetaResult check_meta_markov(const GraphFamily& family);

}  // namespace graphlaw
