#pragma once

#include "graphlaw/subset_vector.hpp"
#include "graphlaw/ugraph.hpp"

namespace graphlaw {

// c_A = 1 for every A inducing a complete subgraph of g, including the empty
// set and singletons; 0 elsewhere.  Active vertex count <= 16.
SubsetVector completeness_vector(const UGraph& g);

// +1 on each clique, -multiplicity on each separator, from the junction
// tree.  Debug builds recompute the same vector by superset Moebius inversion
// of the completeness vector and assert equality.  g must be decomposable.
SubsetVector clique_vector(const UGraph& g);

// t(g') - t(g) where g' is g with edge e toggled.  At most four nonzero
// entries.  Both g and g' must be decomposable.
SubsetVector delta_t(const UGraph& g, Edge e);

}  // namespace graphlaw
