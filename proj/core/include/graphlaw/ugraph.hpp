#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graphlaw/vertex_set.hpp"

namespace graphlaw {

using Edge = std::pair<int, int>;  // stored lower index first

// Undirected graph over an explicit vertex set. Vertices keep their ambient
// labels: an induced subgraph of a graph on {0..n-1} is a graph whose verts()
// is the chosen subset, not a relabeled copy. That convention is what makes
// products, margins and zero-expanded subset vectors line up without any
// index translation.
// Invariants: adjacency symmetric, no self loops, adj(v) subset of verts().
class UGraph {
 public:
  UGraph() = default;
  explicit UGraph(int n) : n_(n), verts_(VertexSet::full(n)), adj_(n) {}
  UGraph(int n, VertexSet verts) : n_(n), verts_(verts), adj_(n) {}

  static UGraph complete(int n, VertexSet verts) {
    UGraph g(n, verts);
    for (int v : members(verts)) g.adj_[v] = verts - VertexSet::single(v);
    return g;
  }

  int n() const { return n_; }
  VertexSet verts() const { return verts_; }
  int num_vertices() const { return verts_.size(); }
  VertexSet adj(int v) const { return adj_[v]; }

  bool has_edge(int u, int v) const { return adj_[u].contains(v); }

  void add_edge(int u, int v) {
    adj_[u].add(v);
    adj_[v].add(u);
  }
  void remove_edge(int u, int v) {
    adj_[u].remove(v);
    adj_[v].remove(u);
  }
  void toggle_edge(int u, int v) {
    if (has_edge(u, v)) remove_edge(u, v); else add_edge(u, v);
  }

  int num_edges() const {
    int total = 0;
    for (int v : members(verts_)) total += adj_[v].size();
    return total / 2;
  }

  // Subgraph induced by keep (ambient labels retained).
  UGraph induced(VertexSet keep) const {
    UGraph g(n_, verts_ & keep);
    for (int v : members(g.verts_)) g.adj_[v] = adj_[v] & g.verts_;
    return g;
  }

  bool is_complete_on(VertexSet s) const {
    for (int v : members(s))
      if (!adj_[v].contains_all(s - VertexSet::single(v))) return false;
    return true;
  }

  // Vertices of `within` reachable from `start` without leaving `within`.
  VertexSet component_of(int start, VertexSet within) const {
    VertexSet comp = VertexSet::single(start);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : members(frontier)) next |= adj_[v] & within;
      frontier = next - comp;
      comp |= frontier;
    }
    return comp;
  }

  std::vector<VertexSet> components(VertexSet within) const {
    std::vector<VertexSet> out;
    VertexSet left = within & verts_;
    while (!left.empty()) {
      VertexSet c = component_of(left.min(), left);
      out.push_back(c);
      left -= c;
    }
    return out;
  }

  // True when every path between a and b inside verts() meets sep.
  bool separates(VertexSet sep, VertexSet a, VertexSet b) const {
    VertexSet x = a - sep;
    VertexSet y = b - sep;
    if (x.intersects(y)) return false;
    if (x.empty() || y.empty()) return true;
    VertexSet allowed = verts_ - sep;
    VertexSet reach;
    for (int v : members(x & allowed)) {
      if (reach.contains(v)) continue;
      reach |= component_of(v, allowed);
    }
    return !reach.intersects(y);
  }

  // Sorted edge list, the canonical text form. Pairs are ordered (u,v) with
  // u < v lexicographically, matching the enumeration bit order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u : members(verts_))
      for (int v : members(adj_[u]))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Edge bitmask under the lexicographic pair order for graphs on the full
  // universe; used as a deterministic dictionary key.
  std::uint64_t edge_mask() const;

  bool operator==(const UGraph& o) const {
    return n_ == o.n_ && verts_ == o.verts_ && adj_ == o.adj_;
  }

 private:
  int n_ = 0;
  VertexSet verts_;
  std::vector<VertexSet> adj_;
};

// Lexicographic rank of the pair (u,v), u < v, among all pairs on n vertices.
int pair_index(int n, int u, int v);
// Inverse of pair_index.
Edge pair_from_index(int n, int index);
int num_pairs(int n);

// Graph on the full universe {0..n-1} from an edge bitmask in pair order.
UGraph graph_from_edge_mask(int n, std::uint64_t mask);

// Same, with an explicit active vertex set; every edge must lie within it.
UGraph graph_from_edge_mask(int n, std::uint64_t mask, VertexSet verts);

}  // namespace graphlaw
