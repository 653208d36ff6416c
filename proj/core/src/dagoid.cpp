#include "graphlaw/dagoid.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

#include "graphlaw/error.hpp"

namespace graphlaw {

SubsetVector d_clique_vector(const Dag& d) {
  SubsetVector t = SubsetVector::delta(VertexSet());
  for (int v : members(d.verts())) {
    VertexSet pa = d.parents(v);
    t.add(pa | VertexSet::single(v), 1.0);
    t.add(pa, -1.0);
  }
  return t;
}

SubsetVector d_completeness_vector(const Dag& d) {
  SubsetVector c = superset_zeta(d_clique_vector(d), d.n());
#ifndef NDEBUG
  std::vector<int> order = d.topological_order();
  std::vector<int> pos(d.n(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (VertexSet a : subsets_of(d.verts())) {
    double expect = 1.0;
    if (!a.empty()) {
      int last = -1;
      for (int v : members(a))
        if (last < 0 || pos[v] > pos[last]) last = v;
      VertexSet rest = a;
      rest.remove(last);
      expect = d.parents(last).contains_all(rest) ? 1.0 : 0.0;
    }
    assert(c.at(a) == expect);
  }
#endif
  return c;
}

SubsetVector standard_imset(const Dag& d) {
  SubsetVector u = SubsetVector::delta(d.verts()) - d_clique_vector(d);
#ifndef NDEBUG
  SubsetVector u2 = SubsetVector::delta(d.verts()) - SubsetVector::delta(VertexSet());
  for (int v : members(d.verts())) {
    VertexSet pa = d.parents(v);
    u2.add(pa, 1.0);
    u2.add(pa | VertexSet::single(v), -1.0);
  }
  assert(u == u2);
#endif
  return u;
}

Dagoid::Dagoid(const Dag& rep) : rep_(rep) {
  rep_.topological_order();
  skeleton_ = rep_.skeleton();
  imms_ = graphlaw::immoralities(rep_);
  tvec_ = d_clique_vector(rep_);
}

bool markov_equivalent(const Dag& a, const Dag& b) {
  if (a.n() != b.n()) fail(ErrorCode::BadInput, "mismatched ambient sizes");
  bool by_shape = a.skeleton() == b.skeleton() && immoralities(a) == immoralities(b);
  bool by_tvec = d_clique_vector(a) == d_clique_vector(b);
  if (by_shape != by_tvec) fail(ErrorCode::CriteriaDisagree, "shape and d-clique criteria disagree");
  return by_shape;
}

std::vector<Dag> dagoid_members(const Dagoid& dg) {
  if (dg.n() > 6) fail(ErrorCode::CapExceeded, "dagoid_members supports at most 6 vertices");
  std::vector<Dag> out;
  std::set<std::uint64_t> seen;
  std::deque<Dag> frontier;
  frontier.push_back(dg.representative());
  seen.insert(dg.representative().arc_mask());
  while (!frontier.empty()) {
    Dag d = frontier.front();
    frontier.pop_front();
    out.push_back(d);
    for (auto [u, v] : covered_arcs(d)) {
      Dag r = reverse_covered_arc(d, u, v);
      if (seen.insert(r.arc_mask()).second) frontier.push_back(r);
    }
  }
  return out;
}

Dagoid dagoid_from_parts(const UGraph& skeleton, std::vector<std::array<int, 3>> imms) {
  std::sort(imms.begin(), imms.end());
  imms.erase(std::unique(imms.begin(), imms.end()), imms.end());
  for (auto [a, b, c] : imms) {
    bool sane = a < c && skeleton.verts().contains(a) && skeleton.verts().contains(b) && skeleton.verts().contains(c) &&
                skeleton.has_edge(a, b) && skeleton.has_edge(c, b) && !skeleton.has_edge(a, c);
    if (!sane) fail(ErrorCode::BadInput, "immorality triple inconsistent with the skeleton");
  }
  std::vector<std::pair<int, int>> edges = skeleton.edges();
  if (edges.size() > 20) fail(ErrorCode::CapExceeded, "orientation search supports at most 20 edges");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    Dag d(skeleton.n(), skeleton.verts());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (mask >> i & 1)
        d.add_arc(v, u);
      else
        d.add_arc(u, v);
    }
    if (d.is_acyclic() && immoralities(d) == imms) return Dagoid(d);
  }
  fail(ErrorCode::BadInput, "no acyclic orientation realizes these immoralities");
}

std::optional<Dag> member_with_ancestral(const Dagoid& dg, VertexSet a) {
  if (!dg.verts().contains_all(a)) return std::nullopt;
  for (const Dag& d : dagoid_members(dg))
    if (d.is_ancestral(a)) return d;
  return std::nullopt;
}

bool is_ancestral_in_dagoid(const Dagoid& dg, VertexSet a) {
  return member_with_ancestral(dg, a).has_value();
}

namespace {

Dag complete_dag_ascending(int n, VertexSet a) {
  return Dag::complete_on(n, a, a.to_vector());
}

#ifndef NDEBUG
// Re-derives the class from every admissible member; all must agree.
void assert_member_independent(const Dagoid& dg, VertexSet a, const Dagoid& got, bool induced_part) {
  for (const Dag& d : dagoid_members(dg)) {
    if (!d.is_ancestral(a)) continue;
    Dagoid redo = induced_part ? Dagoid(d.induced(a)) : Dagoid(ancestral_insert(complete_dag_ascending(d.n(), a), d));
    assert(redo == got);
  }
}
#endif

}  // namespace

Dagoid induced_subdagoid(const Dagoid& dg, VertexSet a) {
  std::optional<Dag> m = member_with_ancestral(dg, a);
  if (!m) fail(ErrorCode::NotAncestralInDagoid, "vertex set is not ancestral in any member");
  Dagoid out(m->induced(a));
#ifndef NDEBUG
  assert_member_independent(dg, a, out, true);
#endif
  return out;
}

Dagoid remainder_dagoid(const Dagoid& dg, VertexSet a) {
  std::optional<Dag> m = member_with_ancestral(dg, a);
  if (!m) fail(ErrorCode::NotAncestralInDagoid, "vertex set is not ancestral in any member");
  Dagoid out(ancestral_insert(complete_dag_ascending(dg.n(), a), *m));
#ifndef NDEBUG
  assert_member_independent(dg, a, out, false);
#endif
  return out;
}

Dagoid dagoid_splice(const Dagoid& left, const Dagoid& right, VertexSet a) {
  if (left.n() != right.n() || !(left.verts() == right.verts())) fail(ErrorCode::BadInput, "operands must share a vertex set");
  std::optional<Dag> ml = member_with_ancestral(left, a);
  std::optional<Dag> mr = member_with_ancestral(right, a);
  if (!ml || !mr) fail(ErrorCode::NotAncestralInDagoid, "vertex set is not ancestral in both operands");
  return Dagoid(ancestral_insert(ml->induced(a), *mr));
}

Dagoid anchor_dagoid(int n, VertexSet verts, VertexSet a) {
  if (!verts.contains_all(a)) fail(ErrorCode::BadInput, "anchor set must lie inside the vertex set");
  Dag d(n, verts);
  std::vector<int> av = a.to_vector();
  for (std::size_t i = 0; i < av.size(); ++i)
    for (std::size_t j = i + 1; j < av.size(); ++j) d.add_arc(av[i], av[j]);
  return Dagoid(d);
}

}  // namespace graphlaw
