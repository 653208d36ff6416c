#include "graphlaw/mcmc.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "graphlaw/clique_stats.hpp"
#include "graphlaw/enumerate.hpp"
#include "graphlaw/error.hpp"

namespace graphlaw {

namespace {

bool toggle_delta(const UGraph& g, int u, int v, SubsetVector& out) {
  try {
    out = delta_t(g, {u, v});
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotDecomposableAfterToggle) return false;
    throw;
  }
}

}  // namespace

ChainState make_chain(const SubsetVector& omega, int n, std::uint64_t seed) {
  ChainState s;
  s.current = UGraph(n);
  s.t = clique_vector(s.current);
  s.log_density = omega.dot(s.t);
  s.rng = SplitMix64(seed);
  return s;
}

double accept_probability(const UGraph& g, const SubsetVector& omega, int u, int v) {
  SubsetVector d;
  if (!toggle_delta(g, u, v, d)) return 0.0;
  return std::min(1.0, std::exp(omega.dot(d)));
}

void mh_step(ChainState& s, const SubsetVector& omega) {
  ++s.proposals;
  const int n = s.current.n();
  auto [u, v] = pair_from_index(n, static_cast<int>(s.rng.below(num_pairs(n))));
  SubsetVector d;
  if (!toggle_delta(s.current, u, v, d)) return;
  double log_ratio = omega.dot(d);
  if (s.rng.uniform01() >= std::exp(std::min(0.0, log_ratio))) return;
  ++s.accepted;
  s.current.toggle_edge(u, v);
  s.t += d;
  s.log_density = omega.dot(s.t);
  assert(s.t == clique_vector(s.current));
}

double acceptance_rate(const ChainReport& r) {
  return r.proposals == 0 ? 0.0 : static_cast<double>(r.accepted) / static_cast<double>(r.proposals);
}

ChainReport run_chain(const SubsetVector& omega, int n, std::uint64_t steps, std::uint64_t burn_in, std::uint64_t seed) {
  if (steps <= burn_in) fail(ErrorCode::BadInput, "steps must exceed burn-in");
  ChainState s = make_chain(omega, n, seed);
  ChainReport rep;
  rep.n = n;
  for (std::uint64_t i = 0; i < steps; ++i) {
    mh_step(s, omega);
    if (i >= burn_in) {
      ++rep.visits[s.current.edge_mask()];
      ++rep.counted;
    }
  }
  rep.proposals = s.proposals;
  rep.accepted = s.accepted;
  return rep;
}

ChainReport merge_reports(const std::vector<ChainReport>& reports) {
  if (reports.empty()) fail(ErrorCode::BadInput, "nothing to merge");
  ChainReport out;
  out.n = reports.front().n;
  for (const ChainReport& r : reports) {
    if (r.n != out.n) fail(ErrorCode::BadInput, "reports must share a vertex count");
    out.counted += r.counted;
    out.proposals += r.proposals;
    out.accepted += r.accepted;
    for (const auto& [mask, count] : r.visits) out.visits[mask] += count;
  }
  return out;
}

std::map<std::uint64_t, double> exact_distribution(const SubsetVector& omega, int n) {
  if (n > 6) fail(ErrorCode::CapExceeded, "exact distribution supports at most 6 vertices");
  std::vector<UGraph> universe = enumerate_decomposable(n);
  std::vector<double> lp;
  lp.reserve(universe.size());
  double hi = -std::numeric_limits<double>::infinity();
  for (const UGraph& g : universe) {
    lp.push_back(omega.dot(clique_vector(g)));
    hi = std::max(hi, lp.back());
  }
  double z = 0.0;
  for (double x : lp) z += std::exp(x - hi);
  std::map<std::uint64_t, double> out;
  for (std::size_t i = 0; i < universe.size(); ++i) out[universe[i].edge_mask()] = std::exp(lp[i] - hi) / z;
  return out;
}

double tv_distance(const ChainReport& r, const std::map<std::uint64_t, double>& exact) {
  if (r.counted == 0) fail(ErrorCode::BadInput, "report is empty");
  double tv = 0.0;
  for (const auto& [mask, p] : exact) {
    auto it = r.visits.find(mask);
    double emp = it == r.visits.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(r.counted);
    tv += std::abs(emp - p);
  }
  for (const auto& [mask, count] : r.visits)
    if (exact.find(mask) == exact.end()) tv += static_cast<double>(count) / static_cast<double>(r.counted);
  return 0.5 * tv;
}

std::vector<std::tuple<int, int, double>> edge_frequencies(const ChainReport& r) {
  if (r.counted == 0) fail(ErrorCode::BadInput, "report is empty");
  std::vector<std::tuple<int, int, double>> out;
  for (int i = 0; i < num_pairs(r.n); ++i) {
    auto [u, v] = pair_from_index(r.n, i);
    std::uint64_t hits = 0;
    for (const auto& [mask, count] : r.visits)
      if (mask >> i & 1) hits += count;
    out.emplace_back(u, v, static_cast<double>(hits) / static_cast<double>(r.counted));
  }
  return out;
}

}  // namespace graphlaw
