#include "graphlaw/dag.hpp"

#include <algorithm>
#include <cassert>

#include "graphlaw/error.hpp"

namespace graphlaw {

Dag Dag::complete_on(int n, VertexSet verts, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != verts.size()) fail(ErrorCode::BadInput, "order must enumerate the vertex set");
  Dag d(n, verts);
  VertexSet seen;
  for (int v : order) {
    if (!verts.contains(v) || seen.contains(v)) fail(ErrorCode::BadInput, "order must enumerate the vertex set");
    d.parents_[v] = seen;
    seen.add(v);
  }
  return d;
}

std::vector<int> Dag::topological_order() const {
  std::vector<int> out;
  VertexSet placed;
  const int total = verts_.size();
  for (int step = 0; step < total; ++step) {
    int pick = -1;
    for (int v : members(verts_)) {
      if (placed.contains(v)) continue;
      if (placed.contains_all(parents_[v])) {
        pick = v;
        break;
      }
    }
    if (pick < 0) fail(ErrorCode::CyclicInput, "arcs contain a directed cycle");
    out.push_back(pick);
    placed.add(pick);
  }
  return out;
}

bool Dag::is_acyclic() const {
  try {
    topological_order();
    return true;
  } catch (const Error&) {
    return false;
  }
}

UGraph Dag::skeleton() const {
  UGraph g(n_, verts_);
  for (int v : members(verts_))
    for (int u : members(parents_[v])) g.add_edge(u, v);
  return g;
}

UGraph Dag::moral_graph() const {
  UGraph g = skeleton();
  for (int v : members(verts_)) {
    std::vector<int> pa = parents_[v].to_vector();
    for (std::size_t i = 0; i < pa.size(); ++i)
      for (std::size_t j = i + 1; j < pa.size(); ++j) g.add_edge(pa[i], pa[j]);
  }
  return g;
}

VertexSet Dag::ancestors_of(VertexSet b) const {
  VertexSet an = b & verts_;
  for (;;) {
    VertexSet next = an;
    for (int v : members(an)) next = next | parents_[v];
    if (next == an) return an;
    an = next;
  }
}

int arc_index(int n, int u, int v) {
  assert(u != v);
  return u * (n - 1) + (v > u ? v - 1 : v);
}

Arc arc_from_index(int n, int index) {
  int u = index / (n - 1);
  int r = index % (n - 1);
  int v = r >= u ? r + 1 : r;
  return {u, v};
}

std::uint64_t Dag::arc_mask() const {
  assert(n_ <= 8);
  std::uint64_t mask = 0;
  for (int v : members(verts_))
    for (int u : members(parents_[v])) mask |= std::uint64_t{1} << arc_index(n_, u, v);
  return mask;
}

bool Dag::operator<(const Dag& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (!(verts_ == o.verts_)) return verts_ < o.verts_;
  for (int v = 0; v < n_; ++v)
    if (!(parents_[v] == o.parents_[v])) return parents_[v] < o.parents_[v];
  return false;
}

Dag dag_from_arcs(int n, const std::vector<Arc>& arcs) {
  Dag d(n);
  for (auto [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) fail(ErrorCode::BadInput, "arc endpoints out of range");
    d.add_arc(u, v);
  }
  d.topological_order();
  return d;
}

std::vector<Dag> all_dags(int n) {
  if (n > 5) fail(ErrorCode::CapExceeded, "all_dags supports at most 5 vertices");
  std::vector<Dag> out;
  const int bits = n * (n - 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    Dag d(n);
    for (int i = 0; i < bits; ++i)
      if (mask >> i & 1) {
        auto [u, v] = arc_from_index(n, i);
        d.add_arc(u, v);
      }
    if (d.is_acyclic()) out.push_back(d);
  }
  return out;
}

std::vector<std::array<int, 3>> immoralities(const Dag& d) {
  UGraph sk = d.skeleton();
  std::vector<std::array<int, 3>> out;
  for (int b : members(d.verts())) {
    std::vector<int> pa = d.parents(b).to_vector();
    for (std::size_t i = 0; i < pa.size(); ++i)
      for (std::size_t j = i + 1; j < pa.size(); ++j)
        if (!sk.has_edge(pa[i], pa[j])) out.push_back({pa[i], b, pa[j]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<UGraph, std::vector<std::array<int, 3>>> skeleton_and_immoralities(const Dag& d) {
  return {d.skeleton(), immoralities(d)};
}

bool is_covered_arc(const Dag& d, int u, int v) {
  if (!d.has_arc(u, v)) return false;
  VertexSet pu = d.parents(u);
  pu.add(u);
  return d.parents(v) == pu;
}

std::vector<Arc> covered_arcs(const Dag& d) {
  std::vector<Arc> out;
  for (auto a : d.arcs())
    if (is_covered_arc(d, a.first, a.second)) out.push_back(a);
  return out;
}

Dag reverse_covered_arc(const Dag& d, int u, int v) {
  if (!is_covered_arc(d, u, v)) fail(ErrorCode::NotCovered, "arc is absent or not covered");
  Dag r = d;
  r.remove_arc(u, v);
  r.add_arc(v, u);
  assert(r.is_acyclic());
  return r;
}

bool is_perfect(const Dag& d) {
  UGraph sk = d.skeleton();
  for (int v : members(d.verts()))
    if (!sk.is_complete_on(d.parents(v))) return false;
  return true;
}

bool d_separated(const Dag& d, VertexSet x, VertexSet y, VertexSet z) {
  VertexSet an = d.ancestors_of(x | y | z);
  UGraph m = d.induced(an).moral_graph();
  return m.separates(z, x & an, y & an);
}

OrderedRemainder ordered_remainder_graph(const Dag& d, const std::vector<int>& order, int v) {
  if (static_cast<int>(order.size()) != d.num_vertices()) fail(ErrorCode::IncompatibleOrder, "order must enumerate the vertex set");
  VertexSet seen;
  VertexSet before_v;
  bool found = false;
  for (int w : order) {
    if (!d.verts().contains(w) || seen.contains(w)) fail(ErrorCode::IncompatibleOrder, "order must enumerate the vertex set");
    if (!seen.contains_all(d.parents(w))) fail(ErrorCode::IncompatibleOrder, "an arc points against the order");
    if (w == v) {
      before_v = seen;
      found = true;
    }
    seen.add(w);
  }
  if (!found) fail(ErrorCode::IncompatibleOrder, "vertex is not in the graph");

  OrderedRemainder out;
  out.v = v;
  out.graph = Dag(d.n(), before_v | VertexSet::single(v));
  std::vector<int> pred;
  for (int w : order) {
    if (w == v) break;
    pred.push_back(w);
  }
  VertexSet placed;
  for (int w : pred) {
    for (int u : members(placed)) out.graph.add_arc(u, w);
    placed.add(w);
  }
  for (int u : members(d.parents(v))) out.graph.add_arc(u, v);
  assert(out.graph.parents(v) == d.parents(v));
  return out;
}

Dag ancestral_insert(const Dag& h, const Dag& d) {
  if (h.n() != d.n()) fail(ErrorCode::BadInput, "mismatched ambient sizes");
  VertexSet a = h.verts();
  if (!d.verts().contains_all(a)) fail(ErrorCode::BadInput, "inserted graph must live inside the host vertex set");
  if (!d.is_ancestral(a)) fail(ErrorCode::NotAncestral, "target vertex set is not ancestral");
  Dag out(d.n(), d.verts());
  for (int v : members(d.verts())) {
    if (a.contains(v))
      for (int u : members(h.parents(v))) out.add_arc(u, v);
    else
      for (int u : members(d.parents(v))) out.add_arc(u, v);
  }
  assert(out.is_acyclic());
  return out;
}

}  // namespace graphlaw
