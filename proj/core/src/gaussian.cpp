#include "graphlaw/gaussian.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <cmath>
#include <numbers>

#include "graphlaw/clique_stats.hpp"
#include "graphlaw/dagoid_law.hpp"
#include "graphlaw/enumerate.hpp"
#include "graphlaw/error.hpp"

namespace graphlaw {

namespace {

double log_det_spd(const Eigen::MatrixXd& m) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) fail(ErrorCode::NumericalFailure, "matrix is not positive-definite");
  double ld = 0.0;
  for (int i = 0; i < m.rows(); ++i) ld += std::log(llt.matrixLLT()(i, i));
  return 2.0 * ld;
}

Eigen::MatrixXd submatrix(const std::vector<double>& row_major, int dim, const std::vector<int>& idx) {
  Eigen::MatrixXd out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          row_major[static_cast<std::size_t>(idx[i]) * dim + idx[j]];
  return out;
}

// Scatter matrix X^T X over all columns.
std::vector<double> scatter(const DataMatrix& x) {
  const int n = x.n_cols;
  std::vector<double> s(static_cast<std::size_t>(n) * n, 0.0);
  for (int r = 0; r < x.n_obs; ++r)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(i) * n + j] += x.at(r, i) * x.at(r, j);
  return s;
}

double marginal_from_blocks(double delta, int m, const Eigen::MatrixXd& phi_a, const Eigen::MatrixXd& phi_plus_s) {
  const int q = static_cast<int>(phi_a.rows());
  if (q == 0 || m == 0) return 0.0;
  const double a_post = (delta + m + q - 1) / 2.0;
  const double a_prior = (delta + q - 1) / 2.0;
  return -0.5 * m * q * std::log(std::numbers::pi) + lgamma_q(q, a_post) - lgamma_q(q, a_prior) +
         a_prior * log_det_spd(phi_a) - a_post * log_det_spd(phi_plus_s);
}

}  // namespace

void validate_data(const DataMatrix& x) {
  if (x.n_obs < 0 || x.n_cols < 0) fail(ErrorCode::BadInput, "data shape must be non-negative");
  if (x.values.size() != static_cast<std::size_t>(x.n_obs) * x.n_cols) fail(ErrorCode::BadInput, "data size does not match its shape");
  for (double v : x.values)
    if (!std::isfinite(v)) fail(ErrorCode::BadInput, "data entries must be finite");
}

GaussHyper::GaussHyper(double delta, int dim, std::vector<double> phi_row_major)
    : delta_(delta), dim_(dim), phi_(std::move(phi_row_major)) {
  if (!(delta > 0) || !std::isfinite(delta)) fail(ErrorCode::BadInput, "degrees of freedom must be positive");
  if (dim < 0 || phi_.size() != static_cast<std::size_t>(dim) * dim) fail(ErrorCode::BadInput, "scale matrix size does not match its dimension");
  for (double v : phi_)
    if (!std::isfinite(v)) fail(ErrorCode::BadInput, "scale entries must be finite");
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (std::abs(phi(i, j) - phi(j, i)) > 1e-12) fail(ErrorCode::BadInput, "scale matrix must be symmetric");
  if (dim > 0) {
    std::vector<int> all(dim);
    for (int i = 0; i < dim; ++i) all[i] = i;
    log_det_spd(submatrix(phi_, dim, all));
  }
}

double lgamma_q(int q, double a) {
  if (q < 0 || !(a > (q - 1) / 2.0)) fail(ErrorCode::BadInput, "multivariate gamma needs a > (q-1)/2");
  double out = 0.25 * q * (q - 1) * std::log(std::numbers::pi);
  for (int j = 1; j <= q; ++j) out += std::lgamma(a + (1.0 - j) / 2.0);
  return out;
}

double clique_log_marginal(const GaussHyper& h, const DataMatrix& x, VertexSet a) {
  validate_data(x);
  if (x.n_cols != h.dim()) fail(ErrorCode::BadInput, "data and scale dimensions differ");
  if (!VertexSet::full(h.dim()).contains_all(a)) fail(ErrorCode::BadInput, "subset outside the vertex set");
  std::vector<int> idx = a.to_vector();
  Eigen::MatrixXd phi_a = submatrix(h.phi_values(), h.dim(), idx);
  Eigen::MatrixXd s_a = submatrix(scatter(x), x.n_cols, idx);
  return marginal_from_blocks(h.delta(), x.n_obs, phi_a, phi_a + s_a);
}

CliqueMarginalTable::CliqueMarginalTable(const GaussHyper& h, const DataMatrix& x) : n_(h.dim()) {
  check_lattice_cap(n_);
  validate_data(x);
  if (x.n_cols != n_) fail(ErrorCode::BadInput, "data and scale dimensions differ");
  std::vector<double> s = scatter(x);
  lp_.assign(std::size_t{1} << n_, 0.0);
  for (std::uint64_t mask = 1; mask < lp_.size(); ++mask) {
    std::vector<int> idx = VertexSet(mask).to_vector();
    Eigen::MatrixXd phi_a = submatrix(h.phi_values(), n_, idx);
    Eigen::MatrixXd s_a = submatrix(s, n_, idx);
    lp_[mask] = marginal_from_blocks(h.delta(), x.n_obs, phi_a, phi_a + s_a);
  }
}

double graph_log_marginal(const CliqueMarginalTable& table, const UGraph& g) {
  double out = 0.0;
  SubsetVector t = clique_vector(g);
  for (const auto& [mask, coeff] : t.entries()) out += coeff * table.at(VertexSet(mask));
  return out;
}

double dagoid_log_marginal(const CliqueMarginalTable& table, const Dagoid& dg) {
  double out = 0.0;
  for (const auto& [mask, coeff] : dg.tvec().entries()) out += coeff * table.at(VertexSet(mask));
  return out;
}

double graph_log_marginal(const GaussHyper& h, const DataMatrix& x, const UGraph& g) {
  return graph_log_marginal(CliqueMarginalTable(h, x), g);
}

double dagoid_log_marginal(const GaussHyper& h, const DataMatrix& x, const Dagoid& dg) {
  return dagoid_log_marginal(CliqueMarginalTable(h, x), dg);
}

GaussHyper posterior_hyper(const GaussHyper& h, const DataMatrix& x) {
  validate_data(x);
  if (x.n_cols != h.dim()) fail(ErrorCode::BadInput, "data and scale dimensions differ");
  std::vector<double> phi = h.phi_values();
  std::vector<double> s = scatter(x);
  for (std::size_t i = 0; i < phi.size(); ++i) phi[i] += s[i];
  return GaussHyper(h.delta() + x.n_obs, h.dim(), std::move(phi));
}

SubsetVector posterior_omega(const SubsetVector& omega, const GaussHyper& h, const DataMatrix& x) {
  CliqueMarginalTable table(h, x);
  SubsetVector out = omega;
  for (std::uint64_t mask = 0; mask < table.dense().size(); ++mask) out.add(VertexSet(mask), table.dense()[mask]);
  return out;
}

UGraph map_graph(const SubsetVector& omega, int n) {
  bool have = false;
  UGraph best;
  double best_score = 0.0;
  std::vector<Edge> best_edges;
  for (const UGraph& g : enumerate_decomposable(n)) {
    double score = omega.dot(clique_vector(g));
    std::vector<Edge> edges = g.edges();
    if (!have || score > best_score || (score == best_score && edges < best_edges)) {
      have = true;
      best = g;
      best_score = score;
      best_edges = std::move(edges);
    }
  }
  return best;
}

Dagoid map_dagoid(const SubsetVector& omega, int n) {
  bool have = false;
  Dagoid best;
  double best_score = 0.0;
  std::pair<std::vector<Edge>, std::vector<std::array<int, 3>>> best_shape;
  for (const auto& [dg, count] : enumerate_dagoids(n)) {
    double score = omega.dot(dg.tvec());
    auto shape = std::make_pair(dg.skeleton().edges(), dg.immoralities());
    if (!have || score > best_score || (score == best_score && shape < best_shape)) {
      have = true;
      best = dg;
      best_score = score;
      best_shape = std::move(shape);
    }
  }
  return best;
}

}  // namespace graphlaw
