#include "graphlaw/structural_markov.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>

#include "graphlaw/chordal.hpp"
#include "graphlaw/clique_stats.hpp"
#include "graphlaw/enumerate.hpp"
#include "graphlaw/error.hpp"

namespace graphlaw {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Bitmask over ambient pair indices of the pairs lying inside a.
std::uint64_t pairs_within(int n, VertexSet a) {
  std::uint64_t mask = 0;
  std::vector<int> vs = a.to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      mask |= std::uint64_t{1} << pair_index(n, vs[i], vs[j]);
  return mask;
}

bool close_enough(double lhs, double rhs, double tol) {
  if (lhs == kNegInf || rhs == kNegInf) return lhs == rhs;
  return std::abs(lhs - rhs) <= tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace

SmResult check_structural_markov(const GraphLaw& law, double tol) {
  const VertexSet verts = law.verts();
  if (verts.size() > 5)
    fail(ErrorCode::CapExceeded, "exhaustive product-identity check capped at 5 vertices");
  const int n = law.n();

  const std::vector<UGraph> universe = enumerate_decomposable_on(n, verts);
  std::map<std::uint64_t, std::size_t> index_of;
  std::vector<double> logp(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    index_of[universe[i].edge_mask()] = i;
    logp[i] = law.in_support(universe[i]) ? law.log_density(universe[i]) : kNegInf;
  }

  SmResult result;
  for (VertexSet a : subsets_of(verts)) {
    const std::uint64_t pm_a = pairs_within(n, a);
    for (VertexSet b : subsets_of(verts)) {
      if ((a | b) != verts) continue;
      ++result.covering_pairs;
      const std::uint64_t pm_b = pairs_within(n, b);

      std::vector<std::size_t> event;
      for (std::size_t i = 0; i < universe.size(); ++i)
        if (is_decomposition(universe[i], a, b)) event.push_back(i);

      for (std::size_t i : event) {
        const std::uint64_t mi = universe[i].edge_mask();
        for (std::size_t j : event) {
          const std::uint64_t mj = universe[j].edge_mask();
          const std::size_t p1 = index_of.at((mi & pm_a) | (mj & pm_b));
          const std::size_t p2 = index_of.at((mj & pm_a) | (mi & pm_b));
          ++result.identities;
          const double lhs = logp[i] + logp[j];
          const double rhs = logp[p1] + logp[p2];
          if (!close_enough(lhs, rhs, tol)) {
            result.witness = SmWitness{a, b, universe[i], universe[j],
                                       universe[p1], universe[p2], lhs, rhs};
            return result;
          }
        }
      }
    }
  }
  result.ok = true;
  return result;
}

SubsetVector recover_omega(const GraphLaw& law, RecoverOptions opts) {
  const VertexSet verts = law.verts();
  const int n = law.n();

  SmResult sm = check_structural_markov(law, opts.tol);
  if (!sm.ok)
    fail(ErrorCode::NotStructurallyMarkov,
         "law violates the product identity at (" + sm.witness->a.to_string() + "," +
             sm.witness->b.to_string() + ")");

  // omega_C = log pi of the graph that is complete on C and edgeless
  // elsewhere.  With full support this reproduces log pi exactly, including
  // normalization, because sum_A t_A = 1.
  SubsetVector omega;
  std::vector<VertexSet> missing;
  for (VertexSet c : subsets_of(verts)) {
    UGraph gc(n, verts);
    std::vector<int> vs = c.to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) gc.add_edge(vs[i], vs[j]);
    if (law.in_support(gc))
      omega.set(c, law.log_density(gc));
    else
      missing.push_back(c);
  }
  if (!missing.empty() && !opts.allow_partial_support)
    fail(ErrorCode::IncompleteSupport,
         "no mass on the complete-on-" + missing.front().to_string() + " graph");

  for (const UGraph& g : law.support_graphs()) {
    const SubsetVector t = clique_vector(g);
    if (!missing.empty()) {
      bool usable = true;
      for (const auto& [k, unused] : t.entries())
        if (std::find(missing.begin(), missing.end(), VertexSet(k)) != missing.end())
          usable = false;
      if (!usable)
        fail(ErrorCode::IncompleteSupport,
             "supported graph's clique vector needs a zero-mass coordinate");
    }
    const double lhs = omega.dot(t);
    const double rhs = law.log_density(g);
    if (!close_enough(lhs, rhs, opts.tol))
      fail(ErrorCode::NotStructurallyMarkov,
           "recovered omega fails to reproduce the law on " + std::to_string(g.edge_mask()));
  }
  return omega;
}

GraphFamily family_from_graphs(int n, std::vector<UGraph> members) {
  if (members.empty()) fail(ErrorCode::BadInput, "family must be nonempty");
  const VertexSet verts = members.front().verts();
  for (const UGraph& g : members) {
    if (g.verts() != verts) fail(ErrorCode::BadInput, "family members must share a vertex set");
    if (!is_chordal(g)) fail(ErrorCode::BadInput, "family members must be decomposable");
  }
  std::sort(members.begin(), members.end(),
            [](const UGraph& x, const UGraph& y) { return x.edge_mask() < y.edge_mask(); });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return GraphFamily{n, verts, std::move(members)};
}

GraphFamily full_universe_family(int n) {
  return GraphFamily{n, VertexSet::full(n), enumerate_decomposable(n)};
}

GraphFamily forest_family(int n) {
  std::vector<UGraph> members;
  for (UGraph& g : enumerate_decomposable(n)) {
    const int components = static_cast<int>(g.components(g.verts()).size());
    if (g.num_edges() == g.num_vertices() - components) members.push_back(std::move(g));
  }
  return GraphFamily{n, VertexSet::full(n), std::move(members)};
}

GraphFamily max_clique_family(int n, int max_clique) {
  std::vector<UGraph> members;
  for (UGraph& g : enumerate_decomposable(n)) {
    int biggest = 0;
    for (const VertexSet& c : junction_tree(g).cliques) biggest = std::max(biggest, c.size());
    if (biggest <= max_clique) members.push_back(std::move(g));
  }
  return GraphFamily{n, VertexSet::full(n), std::move(members)};
}

GraphFamily sandwich_family(const UGraph& lo, const UGraph& hi) {
  if (lo.n() != hi.n() || lo.verts() != hi.verts())
    fail(ErrorCode::BadInput, "sandwich bounds must share a vertex set");
  const std::uint64_t lo_mask = lo.edge_mask();
  const std::uint64_t hi_mask = hi.edge_mask();
  if ((lo_mask & hi_mask) != lo_mask)
    fail(ErrorCode::BadInput, "sandwich lower bound must be a subgraph of the upper bound");
  std::vector<UGraph> members;
  for (UGraph& g : enumerate_decomposable_on(lo.n(), lo.verts())) {
    const std::uint64_t m = g.edge_mask();
    if ((m & lo_mask) == lo_mask && (m | hi_mask) == hi_mask) members.push_back(std::move(g));
  }
  return GraphFamily{lo.n(), lo.verts(), std::move(members)};
}

MetaResult check_meta_markov(const GraphFamily& family) {
  if (family.verts.size() > 5)
    fail(ErrorCode::CapExceeded, "exhaustive closure check capped at 5 vertices");
  const int n = family.n;

  std::map<std::uint64_t, std::size_t> member_index;
  for (std::size_t i = 0; i < family.members.size(); ++i)
    member_index[family.members[i].edge_mask()] = i;

  MetaResult result;
  for (VertexSet a : subsets_of(family.verts)) {
    const std::uint64_t pm_a = pairs_within(n, a);
    for (VertexSet b : subsets_of(family.verts)) {
      if ((a | b) != family.verts) continue;
      const std::uint64_t pm_b = pairs_within(n, b);

      std::vector<std::size_t> event;
      for (std::size_t i = 0; i < family.members.size(); ++i)
        if (is_decomposition(family.members[i], a, b)) event.push_back(i);

      for (std::size_t i : event) {
        for (std::size_t j : event) {
          const std::uint64_t prod = (family.members[i].edge_mask() & pm_a) |
                                     (family.members[j].edge_mask() & pm_b);
          if (!member_index.count(prod)) {
            UGraph product = graph_product(family.members[i].induced(a),
                                           family.members[j].induced(b));
            result.witness =
                MetaWitness{a, b, family.members[i], family.members[j], std::move(product)};
            return result;
          }
        }
      }
    }
  }
  result.ok = true;
  return result;
}

}  // namespace graphlaw
