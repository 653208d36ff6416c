#include "graphlaw/dagoid_law.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "graphlaw/error.hpp"

namespace graphlaw {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double logsumexp(const std::vector<double>& xs) {
  double hi = kNegInf;
  for (double x : xs) hi = std::max(hi, x);
  if (!std::isfinite(hi)) return hi;
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - hi);
  return hi + std::log(acc);
}

// -inf sides must match exactly; finite sides compare with relative slack.
bool close_log(double lhs, double rhs, double tol) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) return lhs == rhs;
  return std::abs(lhs - rhs) <= tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace

std::vector<std::pair<Dagoid, int>> enumerate_dagoids(int n) {
  if (n > 5) fail(ErrorCode::CapExceeded, "enumerate_dagoids supports at most 5 vertices");
  std::vector<std::pair<Dagoid, int>> out;
  std::map<Dagoid::Key, std::size_t> index;
  for (const Dag& d : all_dags(n)) {
    Dagoid dg(d);
    auto [it, fresh] = index.try_emplace(dg.key(), out.size());
    if (fresh)
      out.emplace_back(std::move(dg), 1);
    else
      ++out[it->second].second;
  }
  return out;
}

DagoidLaw DagoidLaw::exponential(int n, SubsetVector omega) {
  for (auto& [mask, value] : omega.entries())
    if (!std::isfinite(value)) fail(ErrorCode::BadInput, "omega entries must be finite");
  DagoidLaw law;
  law.kind_ = LawKind::exponential;
  law.n_ = n;
  law.verts_ = VertexSet::full(n);
  law.omega_ = std::move(omega);
  return law;
}

DagoidLaw DagoidLaw::table(int n, const std::vector<std::pair<Dagoid, double>>& log_probs) {
  DagoidLaw law;
  law.kind_ = LawKind::table;
  law.n_ = n;
  law.verts_ = VertexSet::full(n);
  std::vector<double> lps;
  for (const auto& [dg, lp] : log_probs) {
    if (dg.n() != n || !(dg.verts() == law.verts_)) fail(ErrorCode::BadInput, "table keys must share the vertex set");
    if (!std::isfinite(lp)) fail(ErrorCode::BadInput, "log-probabilities must be finite");
    if (!law.table_.emplace(dg, lp).second) fail(ErrorCode::BadInput, "duplicate table key");
    lps.push_back(lp);
  }
  if (lps.empty() || std::abs(logsumexp(lps)) > 1e-12) fail(ErrorCode::BadInput, "table must sum to 1");
  return law;
}

const SubsetVector& DagoidLaw::omega() const {
  if (kind_ != LawKind::exponential) fail(ErrorCode::BadInput, "law has no omega");
  return omega_;
}

const std::map<Dagoid, double>& DagoidLaw::table_entries() const {
  if (kind_ != LawKind::table) fail(ErrorCode::BadInput, "law has no table");
  return table_;
}

bool DagoidLaw::in_support(const Dagoid& dg) const {
  if (dg.n() != n_ || !(dg.verts() == verts_)) return false;
  return kind_ == LawKind::exponential || table_.count(dg) > 0;
}

double DagoidLaw::log_density(const Dagoid& dg) const {
  if (!in_support(dg)) fail(ErrorCode::OutOfSupport, "class is outside the law's support");
  if (kind_ == LawKind::exponential) return omega_.dot(dg.tvec());
  return table_.at(dg);
}

DagoidLaw builtin_dagoid_law(const std::string& name, double rho, int n) {
  if (name == "uniform") return DagoidLaw::exponential(n, SubsetVector());
  if (name == "edge-geometric") {
    if (!(rho > 0) || !std::isfinite(rho)) fail(ErrorCode::BadInput, "rho must be positive and finite");
    check_lattice_cap(n);
    SubsetVector omega;
    for (VertexSet a : subsets_of(VertexSet::full(n))) {
      double pairs = 0.5 * a.size() * (a.size() - 1);
      omega.set(a, pairs * std::log(rho));
    }
    return DagoidLaw::exponential(n, omega);
  }
  if (name == "class-size") {
    std::vector<std::pair<Dagoid, int>> classes = enumerate_dagoids(n);
    double total = 0;
    for (const auto& [dg, count] : classes) total += count;
    std::vector<std::pair<Dagoid, double>> entries;
    for (const auto& [dg, count] : classes) entries.emplace_back(dg, std::log(count / total));
    return DagoidLaw::table(n, entries);
  }
  fail(ErrorCode::UnknownLaw, "unknown dagoid law: " + name);
}

DagoidSmResult check_dagoid_structural_markov(const DagoidLaw& law, double tol) {
  const int n = law.n();
  if (n > 4) fail(ErrorCode::CapExceeded, "check supports at most 4 vertices");

  std::vector<Dagoid> universe;
  for (auto& [dg, count] : enumerate_dagoids(n)) universe.push_back(dg);
  std::map<Dagoid::Key, std::size_t> index;
  std::vector<double> lp(universe.size());
  std::vector<std::vector<Dag>> membs(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    index.emplace(universe[i].key(), i);
    lp[i] = law.in_support(universe[i]) ? law.log_density(universe[i]) : kNegInf;
    membs[i] = dagoid_members(universe[i]);
  }

  auto first_ancestral = [&](std::size_t i, VertexSet a) -> const Dag* {
    for (const Dag& d : membs[i])
      if (d.is_ancestral(a)) return &d;
    return nullptr;
  };

  DagoidSmResult res;
  for (std::uint64_t amask = 0; amask < (std::uint64_t{1} << n); ++amask) {
    VertexSet a(amask);
    std::vector<std::size_t> anc;
    std::vector<const Dag*> host;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (const Dag* d = first_ancestral(i, a)) {
        anc.push_back(i);
        host.push_back(d);
      }
    for (std::size_t ii = 0; ii < anc.size(); ++ii) {
      for (std::size_t jj = 0; jj < anc.size(); ++jj) {
        ++res.events;
        std::size_t i = anc[ii], j = anc[jj];
        Dagoid sij(ancestral_insert(host[ii]->induced(a), *host[jj]));
        Dagoid sji(ancestral_insert(host[jj]->induced(a), *host[ii]));
        double lhs = lp[i] + lp[j];
        double rhs = lp[index.at(sij.key())] + lp[index.at(sji.key())];
        if (close_log(lhs, rhs, tol)) {
          ++res.identities;
          continue;
        }
        res.witness = DagoidSmWitness{a, universe[i], universe[j], std::move(sij), std::move(sji), lhs, rhs};
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

SubsetVector recover_dagoid_omega(const DagoidLaw& law, double tol) {
  if (law.kind() != LawKind::table) fail(ErrorCode::BadInput, "recovery needs a table law");
  DagoidSmResult check = check_dagoid_structural_markov(law, tol);
  if (!check.ok) fail(ErrorCode::NotStructurallyMarkov, "law fails the class product identity");

  const int n = law.n();
  SubsetVector omega;
  for (std::uint64_t amask = 0; amask < (std::uint64_t{1} << n); ++amask) {
    VertexSet a(amask);
    Dagoid anchor = anchor_dagoid(n, law.verts(), a);
    if (!law.in_support(anchor)) fail(ErrorCode::IncompleteSupport, "law must cover every anchor class");
    omega.set(a, law.log_density(anchor));
  }
  for (const auto& [dg, target] : law.table_entries()) {
    if (!close_log(omega.dot(dg.tvec()), target, tol))
      fail(ErrorCode::NotStructurallyMarkov, "recovered omega does not reproduce the table");
  }
  return omega;
}

double ordered_law_log_density(const OrderedLaw& law, const Dag& d) {
  const int n = law.n;
  check_lattice_cap(n);
  if (static_cast<int>(law.order.size()) != n || static_cast<int>(law.weights.size()) != n)
    fail(ErrorCode::BadInput, "law must carry an order and weights for every vertex");
  if (d.n() != n || !(d.verts() == VertexSet::full(n))) fail(ErrorCode::BadInput, "graph must live on the law's vertex set");

  VertexSet seen;
  double total = 0.0;
  for (int v : law.order) {
    if (v < 0 || v >= n || seen.contains(v)) fail(ErrorCode::BadInput, "order must be a permutation");
    if (!seen.contains_all(d.parents(v))) fail(ErrorCode::IncompatibleOrder, "an arc points against the order");
    std::vector<double> terms;
    for (VertexSet s : subsets_of(seen)) terms.push_back(law.weights[v].at(s));
    total += law.weights[v].at(d.parents(v)) - logsumexp(terms);
    seen.add(v);
  }
  return total;
}

bool check_ordered_independence(const OrderedLaw& law, double tol) {
  const int n = law.n;
  if (n > 5) fail(ErrorCode::CapExceeded, "check supports at most 5 vertices");

  // Odometer over per-vertex parent-set choices enumerates every DAG the
  // order admits.
  std::vector<std::vector<VertexSet>> choices(n);
  VertexSet seen;
  for (int v : law.order) {
    for (VertexSet s : subsets_of(seen)) choices[v].push_back(s);
    seen.add(v);
  }
  std::vector<std::size_t> pick(n, 0);
  std::vector<double> all_lp;
  std::vector<std::map<std::uint64_t, std::vector<double>>> marg(n);
  for (;;) {
    Dag d(n);
    for (int v = 0; v < n; ++v)
      for (int u : members(choices[v][pick[v]])) d.add_arc(u, v);
    double lp = ordered_law_log_density(law, d);
    all_lp.push_back(lp);
    for (int v = 0; v < n; ++v) marg[v][choices[v][pick[v]].bits()].push_back(lp);
    int v = 0;
    while (v < n && ++pick[v] == choices[v].size()) pick[v++] = 0;
    if (v == n) break;
  }

  if (std::abs(logsumexp(all_lp)) > tol) return false;
  for (int v = 0; v < n; ++v) {
    std::vector<double> terms;
    for (const VertexSet& s : choices[v]) terms.push_back(law.weights[v].at(s));
    double norm = logsumexp(terms);
    for (const VertexSet& s : choices[v]) {
      double want = law.weights[v].at(s) - norm;
      double got = logsumexp(marg[v].at(s.bits()));
      if (!close_log(got, want, tol)) return false;
    }
  }
  return true;
}

}  // namespace graphlaw
