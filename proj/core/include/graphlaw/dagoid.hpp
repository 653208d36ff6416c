#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graphlaw/dag.hpp"
#include "graphlaw/subset_vector.hpp"

namespace graphlaw {

// t(D) = sum over v of [delta({v} + parents(v)) - delta(parents(v))] + delta(empty).
// Equal across every Markov-equivalent DAG, and equal to the clique vector
// of the skeleton when every parent set is complete.
SubsetVector d_clique_vector(const Dag& d);

// Superset sums c_A = sum over B >= A of t_B; values are 0/1.  Debug mode
// re-derives each c_A from a topological order: c_A = 1 iff A minus its
// order-maximal element lies inside that element's parent set.
SubsetVector d_completeness_vector(const Dag& d);

// delta(V) - t(D); debug mode re-derives it arc-wise per vertex.
SubsetVector standard_imset(const Dag& d);

// Markov equivalence class of a DAG, canonicalized as skeleton plus the
// sorted list of unshielded colliders.  Keeps the defining DAG as a
// deterministic representative and caches the shared d-clique vector.
class Dagoid {
 public:
  using Key = std::pair<std::uint64_t, std::vector<std::array<int, 3>>>;

  Dagoid() = default;
  explicit Dagoid(const Dag& rep);

  int n() const { return rep_.n(); }
  VertexSet verts() const { return rep_.verts(); }
  const Dag& representative() const { return rep_; }
  const UGraph& skeleton() const { return skeleton_; }
  const std::vector<std::array<int, 3>>& immoralities() const { return imms_; }
  const SubsetVector& tvec() const { return tvec_; }
  Key key() const { return {skeleton_.edge_mask(), imms_}; }

  bool operator==(const Dagoid& o) const {
    return n() == o.n() && verts() == o.verts() && skeleton_.edge_mask() == o.skeleton_.edge_mask() && imms_ == o.imms_;
  }
  bool operator<(const Dagoid& o) const { return key() < o.key(); }

 private:
  Dag rep_;
  UGraph skeleton_;
  std::vector<std::array<int, 3>> imms_;
  SubsetVector tvec_;
};

inline Dagoid dagoid_of(const Dag& d) { return Dagoid(d); }

// Skeleton+immorality verdict, cross-checked against d-clique vector
// equality.  Throws CriteriaDisagree if the two ever differ.
bool markov_equivalent(const Dag& a, const Dag& b);

// Full equivalence class by breadth-first closure under covered-arc
// reversals, deduplicated, starting from the representative.  n <= 6.
std::vector<Dag> dagoid_members(const Dagoid& dg);

// Dagoid realizing the given skeleton and immorality list; searches arc
// orientations (at most 20 skeleton edges).  Throws BadInput when no DAG
// matches, CapExceeded past the edge cap.
Dagoid dagoid_from_parts(const UGraph& skeleton, std::vector<std::array<int, 3>> imms);

// First member (in closure order) for which a is ancestral.
std::optional<Dag> member_with_ancestral(const Dagoid& dg, VertexSet a);
bool is_ancestral_in_dagoid(const Dagoid& dg, VertexSet a);

// Class of member.induced(a) over any member with a ancestral; the choice
// of member does not matter (asserted by scanning all of them).
Dagoid induced_subdagoid(const Dagoid& dg, VertexSet a);

// Class of (complete DAG on a) inserted into a member with a ancestral;
// member-choice independent (asserted).  Throws NotAncestralInDagoid.
Dagoid remainder_dagoid(const Dagoid& dg, VertexSet a);

// Class of H inserted into D, with H a member of left's induced class on a
// and D a member of right with a ancestral.  The result has left's
// structure inside a and right's remainder beyond it.
Dagoid dagoid_splice(const Dagoid& left, const Dagoid& right, VertexSet a);

// Class of the DAG that is complete on a (arcs ascending) and arcless
// elsewhere, over the given vertex set.
Dagoid anchor_dagoid(int n, VertexSet verts, VertexSet a);

}  // namespace graphlaw
