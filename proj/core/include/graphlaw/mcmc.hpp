#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "graphlaw/rng.hpp"
#include "graphlaw/subset_vector.hpp"
#include "graphlaw/ugraph.hpp"

namespace graphlaw {

// Metropolis-Hastings over decomposable graphs.  Proposals toggle a vertex
// pair drawn uniformly from all C(n,2) pairs; toggles that break
// decomposability are rejected outright, everything else is accepted with
// min(1, exp(omega . delta_t)).  The proposal is symmetric, so no Hastings
// correction appears.
struct ChainState {
  UGraph current;
  SubsetVector t;
  double log_density = 0.0;
  SplitMix64 rng{0};
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;
};

// Chain started at the empty graph.
ChainState make_chain(const SubsetVector& omega, int n, std::uint64_t seed);

// Probability of accepting the toggle of (u, v); 0 when the toggled graph
// is not decomposable.
double accept_probability(const UGraph& g, const SubsetVector& omega, int u, int v);

// One proposal.  Rejected non-decomposable toggles consume no uniform
// variate; all other proposals consume exactly one.  The cached t updates
// incrementally and the log-density re-derives from it, so caches match a
// full recompute exactly (asserted in debug mode).
void mh_step(ChainState& s, const SubsetVector& omega);

struct ChainReport {
  int n = 0;
  std::uint64_t counted = 0;    // states recorded after burn-in; sum of visits
  std::uint64_t proposals = 0;  // every MH step, burn-in included
  std::uint64_t accepted = 0;
  std::map<std::uint64_t, std::uint64_t> visits;  // edge mask -> count
};

double acceptance_rate(const ChainReport& r);

// steps proposals from the empty graph, recording the state after each of
// the final steps - burn_in.  Deterministic given the seed.
ChainReport run_chain(const SubsetVector& omega, int n, std::uint64_t steps, std::uint64_t burn_in, std::uint64_t seed);

// Counter-wise sum; reports must share n.
ChainReport merge_reports(const std::vector<ChainReport>& reports);

// Normalized stationary probabilities by exhaustive summation.  n <= 6.
std::map<std::uint64_t, double> exact_distribution(const SubsetVector& omega, int n);

// Half the L1 distance between visit frequencies and the exact law.
double tv_distance(const ChainReport& r, const std::map<std::uint64_t, double>& exact);

// Inclusion frequency of every vertex pair, lexicographic pair order.
std::vector<std::tuple<int, int, double>> edge_frequencies(const ChainReport& r);

}  // namespace graphlaw
