#pragma once

#include <vector>

#include "graphlaw/dagoid.hpp"
#include "graphlaw/subset_vector.hpp"
#include "graphlaw/ugraph.hpp"

namespace graphlaw {

// Zero-mean observations, one column per vertex, row-major storage.
struct DataMatrix {
  int n_obs = 0;
  int n_cols = 0;
  std::vector<double> values;

  double at(int row, int col) const { return values[static_cast<std::size_t>(row) * n_cols + col]; }
};

// Throws BadInput on shape mismatch or non-finite entries.
void validate_data(const DataMatrix& x);

// Degrees of freedom delta > 0 and a symmetric positive-definite scale
// matrix over all vertices.  Symmetry tolerance 1e-12; positive
// definiteness is checked by factorization.
class GaussHyper {
 public:
  GaussHyper(double delta, int dim, std::vector<double> phi_row_major);

  double delta() const { return delta_; }
  int dim() const { return dim_; }
  double phi(int i, int j) const { return phi_[static_cast<std::size_t>(i) * dim_ + j]; }
  const std::vector<double>& phi_values() const { return phi_; }

 private:
  double delta_ = 0.0;
  int dim_ = 0;
  std::vector<double> phi_;
};

// log of the q-variate gamma function at a; requires a > (q-1)/2.
double lgamma_q(int q, double a);

// Marginal log-likelihood of the data columns in a under a zero-mean
// Gaussian whose covariance block carries the inverse-Wishart scale law of
// h.  Empty a or empty data give 0.  Throws NumericalFailure when a
// factorization fails.
double clique_log_marginal(const GaussHyper& h, const DataMatrix& x, VertexSet a);

// Dense table of clique_log_marginal over every subset of 0..n-1, built
// once per (hyper, data) pair.  n <= 16.
class CliqueMarginalTable {
 public:
  CliqueMarginalTable(const GaussHyper& h, const DataMatrix& x);

  int n() const { return n_; }
  double at(VertexSet a) const { return lp_[a.bits()]; }
  const std::vector<double>& dense() const { return lp_; }

 private:
  int n_ = 0;
  std::vector<double> lp_;
};

// Marginal data log-likelihood given the structure: the dot product of its
// subset vector against the clique marginals.
double graph_log_marginal(const CliqueMarginalTable& table, const UGraph& g);
double dagoid_log_marginal(const CliqueMarginalTable& table, const Dagoid& dg);
double graph_log_marginal(const GaussHyper& h, const DataMatrix& x, const UGraph& g);
double dagoid_log_marginal(const GaussHyper& h, const DataMatrix& x, const Dagoid& dg);

// Conjugate update: degrees of freedom grow by n_obs, the scale by the
// scatter matrix.
GaussHyper posterior_hyper(const GaussHyper& h, const DataMatrix& x);

// omega'_A = omega_A + log p_A for every subset.  The exponential law with
// omega' is the posterior over structures given the data.
SubsetVector posterior_omega(const SubsetVector& omega, const GaussHyper& h, const DataMatrix& x);

// Exhaustive argmax of omega . t over decomposable graphs (n <= 7) or over
// equivalence classes (n <= 5); exact score ties break toward the smallest
// edge list (and immorality list).
UGraph map_graph(const SubsetVector& omega, int n);
Dagoid map_dagoid(const SubsetVector& omega, int n);

}  // namespace graphlaw
