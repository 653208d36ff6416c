#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphlaw/dagoid.hpp"
#include "graphlaw/graph_law.hpp"

namespace graphlaw {

// Every equivalence class on n vertices paired with its member count, in
// first-encounter order over the ascending-arc-mask DAG stream.  n <= 5.
std::vector<std::pair<Dagoid, int>> enumerate_dagoids(int n);

// Log-density over equivalence classes of DAGs on a fixed vertex set.
// Exponential laws are unnormalized (log-density = omega . t); table laws
// store normalized log-probabilities and must sum to 1 within 1e-12.
class DagoidLaw {
 public:
  static DagoidLaw exponential(int n, SubsetVector omega);
  static DagoidLaw table(int n, const std::vector<std::pair<Dagoid, double>>& log_probs);

  LawKind kind() const { return kind_; }
  int n() const { return n_; }
  VertexSet verts() const { return verts_; }
  const SubsetVector& omega() const;
  const std::map<Dagoid, double>& table_entries() const;

  bool in_support(const Dagoid& dg) const;
  double log_density(const Dagoid& dg) const;

 private:
  LawKind kind_ = LawKind::exponential;
  int n_ = 0;
  VertexSet verts_;
  SubsetVector omega_;
  std::map<Dagoid, double> table_;
};

// Built-ins: uniform and edge-geometric (omega_A = C(|A|,2) log rho) are
// exponential; class-size is the table law with mass proportional to the
// number of DAGs in each class.
DagoidLaw builtin_dagoid_law(const std::string& name, double rho, int n);

// Violation of the class product identity at one ancestral set: a is
// ancestral in both d and d_prime, yet the log-products disagree (lhs over
// the pair, rhs over the two splices).
struct DagoidSmWitness {
  VertexSet a;
  Dagoid d, d_prime;
  Dagoid splice_dp, splice_pd;
  double lhs = 0.0, rhs = 0.0;
};

struct DagoidSmResult {
  bool ok = false;
  std::optional<DagoidSmWitness> witness;
  std::uint64_t events = 0;
  std::uint64_t identities = 0;
};

// Exhaustively checks the product identity over every vertex subset a and
// every ordered pair of classes in which a is ancestral.  n <= 4.
// Deterministic scan: a ascending by mask, classes in enumeration order.
DagoidSmResult check_dagoid_structural_markov(const DagoidLaw& law, double tol = 1e-9);

// Reads off omega_A = log pi of the class that is complete on A and arcless
// elsewhere, then verifies the exponential law it defines reproduces the
// input table.  Requires a full-support table passing the product check.
SubsetVector recover_dagoid_omega(const DagoidLaw& law, double tol = 1e-9);

// Law over DAGs compatible with a fixed total order: each vertex draws its
// parent set from the vertices before it, independently across vertices.
// Missing weights are 0; densities are normalized per vertex.
struct OrderedLaw {
  int n = 0;
  std::vector<int> order;             // permutation of 0..n-1
  std::vector<SubsetVector> weights;  // per vertex, keyed by parent set
};

// Throws IncompatibleOrder when an arc of d points against law.order.
double ordered_law_log_density(const OrderedLaw& law, const Dag& d);

// Exhaustively verifies the law factorizes: total mass 1 and every
// per-vertex parent-set marginal equals its specified distribution.  n <= 5.
bool check_ordered_independence(const OrderedLaw& law, double tol = 1e-9);

}  // namespace graphlaw
