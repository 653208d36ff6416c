#include "graphlaw/chordal.hpp"

#include <algorithm>
#include <map>

#include "graphlaw/error.hpp"

namespace graphlaw {

namespace {

struct McsResult {
  std::vector<int> order;            // visit order over g.verts()
  std::vector<VertexSet> prior_nbrs; // neighbours among earlier vertices
  bool perfect = false;              // every prior_nbrs set complete
};

// Maximum cardinality search. The visit order is perfect iff the graph is
// chordal; prior neighbour sets then give cliques and separators directly.
McsResult mcs(const UGraph& g, const std::vector<int>& priority) {
  McsResult r;
  VertexSet remaining = g.verts();
  std::vector<int> weight(static_cast<std::size_t>(g.n()), 0);
  r.perfect = true;
  while (!remaining.empty()) {
    int best = -1;
    for (int v : members(remaining)) {
      if (best == -1 || weight[v] > weight[best] ||
          (weight[v] == weight[best] && priority[v] < priority[best])) {
        best = v;
      }
    }
    VertexSet prior = g.adj(best) - remaining;
    if (!g.is_complete_on(prior)) r.perfect = false;
    r.order.push_back(best);
    r.prior_nbrs.push_back(prior);
    remaining.remove(best);
    for (int v : members(g.adj(best) & remaining)) ++weight[v];
  }
  return r;
}

std::vector<int> identity_priority(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

JunctionTree build_tree(const UGraph& g, const McsResult& m) {
  if (!m.perfect) fail(ErrorCode::NotDecomposable, "graph is not decomposable");

  // The graph on no vertices has the empty set as its only clique; that keeps
  // the subset-vector identities exact when decompositions have an empty
  // intersection.
  JunctionTree jt;
  if (m.order.empty()) {
    jt.cliques.push_back(VertexSet());
    return jt;
  }
  const std::size_t k = m.order.size();
  // Candidate i is maximal iff the next vertex's prior set does not swallow it.
  for (std::size_t i = 0; i < k; ++i) {
    VertexSet cand = m.prior_nbrs[i] | VertexSet::single(m.order[i]);
    bool absorbed = i + 1 < k && m.prior_nbrs[i + 1].contains_all(cand);
    if (!absorbed) jt.cliques.push_back(cand);
  }

  std::map<std::uint64_t, int> sep_mult;
  VertexSet seen = jt.cliques.front();
  for (std::size_t j = 1; j < jt.cliques.size(); ++j) {
    VertexSet sep = jt.cliques[j] & seen;
    ++sep_mult[sep.bits()];
    seen |= jt.cliques[j];
  }
  for (const auto& [bits, mult] : sep_mult)
    jt.separators.emplace_back(VertexSet(bits), mult);
  return jt;
}

}  // namespace

bool is_chordal(const UGraph& g) {
  return mcs(g, identity_priority(g.n())).perfect;
}

JunctionTree junction_tree(const UGraph& g) {
  return build_tree(g, mcs(g, identity_priority(g.n())));
}

JunctionTree junction_tree_with_tiebreak(const UGraph& g,
                                         const std::vector<int>& priority) {
  return build_tree(g, mcs(g, priority));
}

DecompositionCheck is_decomposition(const UGraph& g, VertexSet a, VertexSet b) {
  DecompositionCheck c;
  if ((a | b) != g.verts()) {
    c.reason = DecompositionFailure::NotCovering;
    return c;
  }
  VertexSet shared = a & b;
  if (!g.is_complete_on(shared)) {
    c.reason = DecompositionFailure::IntersectionNotComplete;
    return c;
  }
  if (!g.separates(shared, a - b, b - a)) {
    c.reason = DecompositionFailure::NotSeparated;
    return c;
  }
  c.ok = true;
  return c;
}

UGraph graph_product(const UGraph& h, const UGraph& j) {
  VertexSet shared = h.verts() & j.verts();
  if (!h.is_complete_on(shared) || !j.is_complete_on(shared))
    fail(ErrorCode::IncompatibleIntersection,
         "margins are not complete on the shared vertex set " +
             shared.to_string());
  UGraph g(std::max(h.n(), j.n()), h.verts() | j.verts());
  for (int u : members(h.verts()))
    for (int v : members(h.adj(u)))
      if (u < v) g.add_edge(u, v);
  for (int u : members(j.verts()))
    for (int v : members(j.adj(u)))
      if (u < v) g.add_edge(u, v);
  return g;
}

bool is_collapsible(const UGraph& g, VertexSet a) {
  for (VertexSet comp : g.components(g.verts() - a)) {
    VertexSet boundary;
    for (int v : members(comp)) boundary |= g.adj(v) - comp;
    if (!g.is_complete_on(boundary)) return false;
  }
  return true;
}

}  // namespace graphlaw
