#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graphlaw/subset_vector.hpp"
#include "graphlaw/ugraph.hpp"

namespace graphlaw {

enum class LawKind { exponential, table };

// Log-density over decomposable graphs with a fixed active vertex set.
// Exponential laws are unnormalized (log-density = omega . t(G)); table laws
// store normalized log-probabilities keyed by canonical edge mask and must
// sum to 1 over their support.  An exponential law may carry an explicit
// support restriction; by default it covers every decomposable graph.
class GraphLaw {
 public:
  static GraphLaw exponential(int n, SubsetVector omega);
  static GraphLaw exponential_on(int n, VertexSet verts, SubsetVector omega);
  // Restricts an exponential law to an explicit family of graphs.
  static GraphLaw restricted(GraphLaw law, const std::vector<UGraph>& support);
  static GraphLaw table(int n, const std::vector<std::pair<UGraph, double>>& log_probs);
  static GraphLaw table_on(int n, VertexSet verts,
                           const std::vector<std::pair<UGraph, double>>& log_probs);

  LawKind kind() const { return kind_; }
  int n() const { return n_; }
  VertexSet verts() const { return verts_; }
  const SubsetVector& omega() const;
  const std::map<std::uint64_t, double>& table_entries() const;

  bool in_support(const UGraph& g) const;
  // Unnormalized for exponential laws, normalized for table laws.
  double log_density(const UGraph& g) const;

  // Graphs carrying mass, ascending edge-mask order.  |verts| <= 7 for
  // exponential laws without an explicit support list.
  std::vector<UGraph> support_graphs() const;

 private:
  LawKind kind_ = LawKind::exponential;
  int n_ = 0;
  VertexSet verts_;
  SubsetVector omega_;
  std::map<std::uint64_t, double> table_;              // edge mask -> log prob
  std::optional<std::set<std::uint64_t>> restriction_; // exponential support
};

// log Z by exhaustive summation over the support.  |verts| <= 7.
double normalize(const GraphLaw& law);

// Shifts omega along the directions that leave every density ratio fixed so
// that the empty-set and singleton coordinates vanish.
SubsetVector standardize_omega(const SubsetVector& omega, int n);

struct LawParams {
  double psi = 0.5;                       // edge-bernoulli
  std::map<Edge, double> psi_edges;       // per-edge-bernoulli
  double rho = 0.0;                       // forest-penalty edge weight
  double kappa = 1.0;                     // forest-penalty clique-size penalty
};

// Built-in laws: uniform, edge-bernoulli, per-edge-bernoulli, forest-penalty
// (all exponential) and armstrong (table: uniform over edge counts, then
// uniform within each count).
GraphLaw builtin_law(const std::string& name, const LawParams& params, int n);

// Renormalized restriction of `law` to the graphs decomposed by (a, b).
// |verts| <= 5.  Throws ZeroMassEvent when the event carries no mass.
GraphLaw conditional_given_decomposition(const GraphLaw& law, VertexSet a, VertexSet b);

// Table law of the induced subgraph on `a` (ambient labels kept) under
// `law`.  |verts| <= 7 for exponential inputs.
GraphLaw margin_law(const GraphLaw& law, VertexSet a);

}  // namespace graphlaw
