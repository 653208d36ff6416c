#include "graphlaw/clique_stats.hpp"

#include <cassert>

#include "graphlaw/chordal.hpp"
#include "graphlaw/error.hpp"

namespace graphlaw {

SubsetVector completeness_vector(const UGraph& g) {
  if (g.num_vertices() > 16)
    fail(ErrorCode::CapExceeded, "completeness vector capped at 16 active vertices");
  SubsetVector c;
  for (VertexSet s : subsets_of(g.verts()))
    if (g.is_complete_on(s)) c.set(s, 1.0);
  return c;
}

SubsetVector clique_vector(const UGraph& g) {
  JunctionTree jt = junction_tree(g);
  SubsetVector t;
  for (const VertexSet& c : jt.cliques) t.add(c, 1.0);
  for (const auto& [s, nu] : jt.separators) t.add(s, -static_cast<double>(nu));
#ifndef NDEBUG
  if (g.n() <= 12) {
    SubsetVector via_mobius = mobius_superset_inverse(completeness_vector(g), g.n());
    assert(t == via_mobius);
  }
#endif
  return t;
}

SubsetVector delta_t(const UGraph& g, Edge e) {
  auto [u, v] = e;
  if (u == v || !g.verts().contains(u) || !g.verts().contains(v))
    fail(ErrorCode::BadInput, "edge endpoints must be two distinct active vertices");
  SubsetVector before = clique_vector(g);
  UGraph h = g;
  h.toggle_edge(u, v);
  if (!is_chordal(h))
    fail(ErrorCode::NotDecomposableAfterToggle,
         "toggling {" + std::to_string(u) + "," + std::to_string(v) +
             "} leaves the decomposable family");
  SubsetVector d = clique_vector(h) - before;
  assert(d.support_size() <= 4);
  return d;
}

}  // namespace graphlaw
