#include "graphlaw/graph_law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "graphlaw/chordal.hpp"
#include "graphlaw/clique_stats.hpp"
#include "graphlaw/enumerate.hpp"
#include "graphlaw/error.hpp"

namespace graphlaw {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& xs) {
  double top = kNegInf;
  for (double x : xs) top = std::max(top, x);
  if (top == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double x : xs) sum += std::exp(x - top);
  return top + std::log(sum);
}

void check_finite_omega(const SubsetVector& omega) {
  for (const auto& [k, v] : omega.entries())
    if (!std::isfinite(v)) fail(ErrorCode::BadInput, "omega entries must be finite");
}

int binom2(int k) { return k * (k - 1) / 2; }

}  // namespace

GraphLaw GraphLaw::exponential(int n, SubsetVector omega) {
  return exponential_on(n, VertexSet::full(n), std::move(omega));
}

GraphLaw GraphLaw::exponential_on(int n, VertexSet verts, SubsetVector omega) {
  check_finite_omega(omega);
  GraphLaw law;
  law.kind_ = LawKind::exponential;
  law.n_ = n;
  law.verts_ = verts;
  law.omega_ = std::move(omega);
  return law;
}

GraphLaw GraphLaw::restricted(GraphLaw law, const std::vector<UGraph>& support) {
  if (law.kind_ != LawKind::exponential)
    fail(ErrorCode::BadInput, "support restriction applies to exponential laws");
  std::set<std::uint64_t> keys;
  for (const UGraph& g : support) {
    if (g.verts() != law.verts_ || !is_chordal(g))
      fail(ErrorCode::BadInput, "restriction members must be decomposable on the law's vertices");
    keys.insert(g.edge_mask());
  }
  law.restriction_ = std::move(keys);
  return law;
}

GraphLaw GraphLaw::table(int n, const std::vector<std::pair<UGraph, double>>& log_probs) {
  return table_on(n, VertexSet::full(n), log_probs);
}

GraphLaw GraphLaw::table_on(int n, VertexSet verts,
                            const std::vector<std::pair<UGraph, double>>& log_probs) {
  GraphLaw law;
  law.kind_ = LawKind::table;
  law.n_ = n;
  law.verts_ = verts;
  std::vector<double> lps;
  for (const auto& [g, lp] : log_probs) {
    if (g.verts() != verts)
      fail(ErrorCode::BadInput, "table graphs must share the law's vertex set");
    if (!is_chordal(g)) fail(ErrorCode::BadInput, "table graphs must be decomposable");
    if (!std::isfinite(lp)) fail(ErrorCode::BadInput, "table log-probabilities must be finite");
    if (!law.table_.emplace(g.edge_mask(), lp).second)
      fail(ErrorCode::BadInput, "duplicate graph in table law");
    lps.push_back(lp);
  }
  if (std::abs(log_sum_exp(lps)) > 1e-12)
    fail(ErrorCode::BadInput, "table law must sum to 1 over its support");
  return law;
}

const SubsetVector& GraphLaw::omega() const {
  if (kind_ != LawKind::exponential)
    fail(ErrorCode::BadInput, "table laws have no omega");
  return omega_;
}

const std::map<std::uint64_t, double>& GraphLaw::table_entries() const {
  if (kind_ != LawKind::table) fail(ErrorCode::BadInput, "exponential laws have no table");
  return table_;
}

bool GraphLaw::in_support(const UGraph& g) const {
  if (g.verts() != verts_) return false;
  if (kind_ == LawKind::table) return table_.count(g.edge_mask()) > 0;
  if (restriction_) return restriction_->count(g.edge_mask()) > 0;
  return is_chordal(g);
}

double GraphLaw::log_density(const UGraph& g) const {
  if (!in_support(g)) fail(ErrorCode::OutOfSupport, "graph outside the law's support");
  if (kind_ == LawKind::table) return table_.at(g.edge_mask());
  return omega_.dot(clique_vector(g));
}

std::vector<UGraph> GraphLaw::support_graphs() const {
  std::vector<UGraph> out;
  if (kind_ == LawKind::table) {
    for (const auto& [mask, lp] : table_) out.push_back(graph_from_edge_mask(n_, mask, verts_));
    return out;
  }
  if (restriction_) {
    for (std::uint64_t mask : *restriction_) out.push_back(graph_from_edge_mask(n_, mask, verts_));
    return out;
  }
  return enumerate_decomposable_on(n_, verts_);
}

double normalize(const GraphLaw& law) {
  std::vector<double> lps;
  for (const UGraph& g : law.support_graphs()) lps.push_back(law.log_density(g));
  if (lps.empty()) fail(ErrorCode::ZeroMassEvent, "law has empty support");
  return log_sum_exp(lps);
}

SubsetVector standardize_omega(const SubsetVector& omega, int n) {
  // omega . t is invariant under adding a*1 + sum_v b_v*1_{A contains v}
  // because sum_A t_A = 1 and sum_{A contains v} t_A = 1.  Choose a, b to
  // zero the empty-set and singleton coordinates.  The shift touches every
  // subset, so the result is dense unless those coordinates already vanish.
  const double at_empty = omega.at(VertexSet());
  std::vector<double> at_single(static_cast<std::size_t>(n), 0.0);
  bool already = at_empty == 0.0;
  for (int v = 0; v < n; ++v) {
    at_single[v] = omega.at(VertexSet::single(v));
    already = already && at_single[v] == 0.0;
  }
  if (already) return omega;

  if (n > 16) fail(ErrorCode::CapExceeded, "standardization is dense; capped at n <= 16");
  SubsetVector out;
  for (VertexSet a : subsets_of(VertexSet::full(n))) {
    double val = omega.at(a) + (a.size() - 1) * at_empty;
    for (int v : members(a)) val -= at_single[v];
    out.set(a, val);
  }
  return out;
}

GraphLaw builtin_law(const std::string& name, const LawParams& params, int n) {
  if (n < 0 || n > 16) fail(ErrorCode::CapExceeded, "built-in laws capped at n <= 16");
  const VertexSet all = VertexSet::full(n);

  if (name == "uniform") return GraphLaw::exponential(n, SubsetVector());

  if (name == "edge-bernoulli") {
    if (!(params.psi > 0.0 && params.psi < 1.0))
      fail(ErrorCode::BadInput, "edge-bernoulli needs 0 < psi < 1");
    const double logit = std::log(params.psi / (1.0 - params.psi));
    SubsetVector omega;
    for (VertexSet a : subsets_of(all))
      if (a.size() >= 2) omega.set(a, binom2(a.size()) * logit);
    return GraphLaw::exponential(n, omega);
  }

  if (name == "per-edge-bernoulli") {
    std::map<std::uint64_t, double> logit;
    for (const auto& [e, psi] : params.psi_edges) {
      auto [u, v] = e;
      if (u < 0 || v < 0 || u >= n || v >= n || u == v)
        fail(ErrorCode::BadInput, "per-edge-bernoulli edge outside the vertex range");
      if (!(psi > 0.0 && psi < 1.0))
        fail(ErrorCode::BadInput, "per-edge-bernoulli needs 0 < psi < 1");
      VertexSet pair = VertexSet::single(u) | VertexSet::single(v);
      logit[pair.bits()] = std::log(psi / (1.0 - psi));
    }
    SubsetVector omega;
    for (VertexSet a : subsets_of(all)) {
      if (a.size() < 2) continue;
      double sum = 0.0;
      for (const auto& [pair, lg] : logit)
        if (a.contains_all(VertexSet(pair))) sum += lg;
      omega.set(a, sum);
    }
    return GraphLaw::exponential(n, omega);
  }

  if (name == "forest-penalty") {
    SubsetVector omega;
    for (VertexSet a : subsets_of(all)) {
      if (a.size() < 2) continue;
      double val = binom2(a.size()) * params.rho -
                   params.kappa * std::max(0, a.size() - 2);
      omega.set(a, val);
    }
    return GraphLaw::exponential(n, omega);
  }

  if (name == "armstrong") {
    // Uniform over edge counts, then uniform among graphs with that count.
    std::vector<UGraph> universe = enumerate_decomposable(n);
    std::map<int, int> count_by_edges;
    for (const UGraph& g : universe) ++count_by_edges[g.num_edges()];
    if (static_cast<int>(count_by_edges.size()) != num_pairs(n) + 1)
      fail(ErrorCode::BadInput, "edge-count law needs every edge count represented");
    const double log_counts = std::log(static_cast<double>(num_pairs(n) + 1));
    std::vector<std::pair<UGraph, double>> entries;
    for (UGraph& g : universe) {
      double lp = -log_counts - std::log(static_cast<double>(count_by_edges[g.num_edges()]));
      entries.emplace_back(std::move(g), lp);
    }
    return GraphLaw::table(n, entries);
  }

  fail(ErrorCode::UnknownLaw, "unknown law name: " + name);
}

GraphLaw conditional_given_decomposition(const GraphLaw& law, VertexSet a, VertexSet b) {
  if (law.verts().size() > 5)
    fail(ErrorCode::CapExceeded, "conditioning capped at 5 active vertices");
  std::vector<std::pair<UGraph, double>> kept;
  std::vector<double> lps;
  for (const UGraph& g : law.support_graphs()) {
    if (!is_decomposition(g, a, b)) continue;
    double lp = law.log_density(g);
    kept.emplace_back(g, lp);
    lps.push_back(lp);
  }
  if (kept.empty())
    fail(ErrorCode::ZeroMassEvent, "no mass on the decomposition event");
  const double log_z = log_sum_exp(lps);
  for (auto& [g, lp] : kept) lp -= log_z;
  return GraphLaw::table_on(law.n(), law.verts(), kept);
}

GraphLaw margin_law(const GraphLaw& law, VertexSet a) {
  a &= law.verts();
  const double log_z = law.kind() == LawKind::table ? 0.0 : normalize(law);
  std::map<std::uint64_t, std::vector<double>> buckets;
  for (const UGraph& g : law.support_graphs())
    buckets[g.induced(a).edge_mask()].push_back(law.log_density(g) - log_z);
  std::vector<std::pair<UGraph, double>> entries;
  for (const auto& [mask, lps] : buckets)
    entries.emplace_back(graph_from_edge_mask(law.n(), mask, a), log_sum_exp(lps));
  return GraphLaw::table_on(law.n(), a, entries);
}

}  // namespace graphlaw
