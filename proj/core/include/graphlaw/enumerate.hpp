#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graphlaw/ugraph.hpp"

namespace graphlaw {

// All decomposable graphs on vertices 0..n-1, ascending edge-mask order
// (bit i of the mask is pair i in lexicographic order).  n <= 7.
std::vector<UGraph> enumerate_decomposable(int n);

// Same count without materializing the graphs.  n <= 7.
std::uint64_t count_decomposable(int n);

// Every graph on vertices 0..n-1, ascending edge-mask order.  n <= 6.
std::vector<UGraph> all_graphs(int n);

// Decomposable graphs with the given active vertex set (ambient labels kept),
// ascending edge-mask order.  |verts| <= 7.
std::vector<UGraph> enumerate_decomposable_on(int n, VertexSet verts);

// Decomposable graphs one edge toggle away from g, each with the toggled
// edge, in ascending pair order.  g must itself be decomposable.
std::vector<std::pair<Edge, UGraph>> decomposable_neighbors(const UGraph& g);

}  // namespace graphlaw
