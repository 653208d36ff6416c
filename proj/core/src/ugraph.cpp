#include "graphlaw/ugraph.hpp"

#include "graphlaw/error.hpp"

namespace graphlaw {

int num_pairs(int n) { return n * (n - 1) / 2; }

int pair_index(int n, int u, int v) {
  // (0,1),(0,2),...,(0,n-1),(1,2),... ; rank of (u,v) with u < v.
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Edge pair_from_index(int n, int index) {
  int u = 0;
  int row = n - 1;
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return {u, u + 1 + index};
}

std::uint64_t UGraph::edge_mask() const {
  std::uint64_t mask = 0;
  for (const auto& [u, v] : edges())
    mask |= std::uint64_t{1} << pair_index(n_, u, v);
  return mask;
}

UGraph graph_from_edge_mask(int n, std::uint64_t mask) {
  UGraph g(n);
  for (std::uint64_t b = mask; b; b &= b - 1) {
    auto [u, v] = pair_from_index(n, std::countr_zero(b));
    g.add_edge(u, v);
  }
  return g;
}

UGraph graph_from_edge_mask(int n, std::uint64_t mask, VertexSet verts) {
  UGraph g(n, verts);
  for (std::uint64_t b = mask; b; b &= b - 1) {
    auto [u, v] = pair_from_index(n, std::countr_zero(b));
    if (!verts.contains(u) || !verts.contains(v))
      fail(ErrorCode::BadInput, "edge mask has an edge outside the active vertex set");
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace graphlaw
