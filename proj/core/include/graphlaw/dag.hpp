#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "graphlaw/ugraph.hpp"

namespace graphlaw {

using Arc = std::pair<int, int>;  // (u,v) means u -> v

// Directed acyclic graph over an explicit vertex set, stored as per-vertex
// parent sets.  Ambient labels are kept under induced subgraphs, exactly as
// for UGraph.  Mutators do not re-check acyclicity; validation happens in
// topological_order / dag_from_arcs.
class Dag {
 public:
  Dag() = default;
  explicit Dag(int n) : n_(n), verts_(VertexSet::full(n)), parents_(n) {}
  Dag(int n, VertexSet verts) : n_(n), verts_(verts), parents_(n) {}

  // Complete DAG on verts, arcs oriented by ascending position in order.
  static Dag complete_on(int n, VertexSet verts, const std::vector<int>& order);

  int n() const { return n_; }
  VertexSet verts() const { return verts_; }
  int num_vertices() const { return verts_.size(); }
  VertexSet parents(int v) const { return parents_[v]; }
  bool has_arc(int u, int v) const { return parents_[v].contains(u); }

  void add_arc(int u, int v) { parents_[v].add(u); }
  void remove_arc(int u, int v) { parents_[v].remove(u); }

  int num_arcs() const {
    int total = 0;
    for (int v : members(verts_)) total += parents_[v].size();
    return total;
  }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (int u : members(verts_))
      for (int v : members(verts_))
        if (has_arc(u, v)) out.emplace_back(u, v);
    return out;
  }

  // Kahn's algorithm picking the lowest eligible index first; throws
  // CyclicInput when no full order exists.
  std::vector<int> topological_order() const;
  bool is_acyclic() const;

  UGraph skeleton() const;
  // Skeleton plus an edge between every pair of common parents.
  UGraph moral_graph() const;

  // Smallest ancestral set containing b.
  VertexSet ancestors_of(VertexSet b) const;
  // True when parents(v) stays inside a for every v in a.
  bool is_ancestral(VertexSet a) const {
    for (int v : members(a & verts_))
      if (!a.contains_all(parents_[v])) return false;
    return true;
  }

  Dag induced(VertexSet keep) const {
    Dag d(n_, verts_ & keep);
    for (int v : members(d.verts_)) d.parents_[v] = parents_[v] & d.verts_;
    return d;
  }

  // Bitmask over ordered pairs (u,v), u != v, lexicographic; n <= 8.
  std::uint64_t arc_mask() const;

  bool operator==(const Dag& o) const {
    return n_ == o.n_ && verts_ == o.verts_ && parents_ == o.parents_;
  }
  bool operator<(const Dag& o) const;

 private:
  int n_ = 0;
  VertexSet verts_;
  std::vector<VertexSet> parents_;
};

// Lexicographic rank of the ordered pair (u,v), u != v.
int arc_index(int n, int u, int v);
Arc arc_from_index(int n, int index);

// Validates acyclicity; throws CyclicInput.
Dag dag_from_arcs(int n, const std::vector<Arc>& arcs);

// Every DAG on n vertices, ascending arc-mask order.  n <= 5.
std::vector<Dag> all_dags(int n);

// Unshielded colliders a -> b <- c with a < c and a, c non-adjacent, sorted.
std::vector<std::array<int, 3>> immoralities(const Dag& d);
std::pair<UGraph, std::vector<std::array<int, 3>>> skeleton_and_immoralities(const Dag& d);

// u -> v is covered iff parents(v) == parents(u) + {u}.
bool is_covered_arc(const Dag& d, int u, int v);
std::vector<Arc> covered_arcs(const Dag& d);
Dag reverse_covered_arc(const Dag& d, int u, int v);  // NotCovered

// Every parent set induces a complete subgraph of the skeleton.
bool is_perfect(const Dag& d);

// Separation of x from y by z in the moral graph of the ancestral closure.
bool d_separated(const Dag& d, VertexSet x, VertexSet y, VertexSet z);

// Replaces the arcs of d inside h's vertex set (which must be ancestral in
// d) by the arcs of h.  Throws NotAncestral.
Dag ancestral_insert(const Dag& h, const Dag& d);

// Subgraph on v and its predecessors under order, with every arc between
// two predecessors added and oriented by the order.
struct OrderedRemainder {
  int v = 0;
  Dag graph;
};

// order must list exactly d's vertices with every arc pointing forward.
// Throws IncompatibleOrder.
OrderedRemainder ordered_remainder_graph(const Dag& d, const std::vector<int>& order, int v);

}  // namespace graphlaw
