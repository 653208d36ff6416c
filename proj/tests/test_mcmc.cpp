#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "graphlaw/chordal.hpp"
#include "graphlaw/clique_stats.hpp"
#include "graphlaw/enumerate.hpp"
#include "graphlaw/error.hpp"
#include "graphlaw/graph_law.hpp"
#include "graphlaw/mcmc.hpp"
#include "graphlaw/rng.hpp"

using namespace graphlaw;

namespace {

SubsetVector random_omega(int n, SplitMix64& rng) {
  SubsetVector w;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet a(mask);
    if (a.size() >= 2) w.set(a, 0.5 * rng.normal());
  }
  return w;
}

}  // namespace

TEST_SUITE("mcmc") {

TEST_CASE("acceptance matches the dense ratio") {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 3; ++trial) {
    SubsetVector omega = random_omega(4, rng);
    for (const UGraph& g : enumerate_decomposable(4))
      for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) {
          UGraph toggled = g;
          toggled.toggle_edge(u, v);
          double got = accept_probability(g, omega, u, v);
          if (!is_chordal(toggled)) {
            CHECK(got == 0.0);
          } else {
            double ratio = std::exp(omega.dot(clique_vector(toggled)) - omega.dot(clique_vector(g)));
            CHECK(got == doctest::Approx(std::min(1.0, ratio)).epsilon(1e-12));
          }
        }
  }
}

TEST_CASE("closing a chordless cycle is rejected outright") {
  UGraph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  SubsetVector omega;
  omega.set(VertexSet({0, 3}), 50.0);
  CHECK(accept_probability(path, omega, 0, 3) == 0.0);
}

TEST_CASE("detailed balance holds edge by edge") {
  SplitMix64 rng(62);
  SubsetVector omega = random_omega(3, rng);
  GraphLaw law = GraphLaw::exponential(3, omega);
  for (const UGraph& g : enumerate_decomposable(3))
    for (const auto& [edge, h] : decomposable_neighbors(g)) {
      double fwd = law.log_density(g) + std::log(accept_probability(g, omega, edge.first, edge.second));
      double bwd = law.log_density(h) + std::log(accept_probability(h, omega, edge.first, edge.second));
      CHECK(fwd == doctest::Approx(bwd).epsilon(1e-12));
    }
}

TEST_CASE("chain state starts empty and keeps caches consistent") {
  SplitMix64 rng(63);
  SubsetVector omega = random_omega(4, rng);
  ChainState s = make_chain(omega, 4, 7);
  CHECK(s.current == UGraph(4));
  CHECK(s.t == clique_vector(UGraph(4)));
  CHECK(s.log_density == doctest::Approx(omega.dot(s.t)));

  for (int i = 0; i < 10000; ++i) mh_step(s, omega);
  CHECK(s.proposals == 10000);
  CHECK(s.accepted <= s.proposals);
  CHECK(is_chordal(s.current));
  CHECK(s.t == clique_vector(s.current));
  CHECK(s.log_density == doctest::Approx(omega.dot(clique_vector(s.current))).epsilon(1e-12));
}

TEST_CASE("runs are deterministic in the seed") {
  SplitMix64 rng(64);
  SubsetVector omega = random_omega(3, rng);
  ChainReport a = run_chain(omega, 3, 20000, 1000, 99);
  ChainReport b = run_chain(omega, 3, 20000, 1000, 99);
  CHECK(a.visits == b.visits);
  CHECK(a.accepted == b.accepted);
  CHECK(a.proposals == b.proposals);
  CHECK(a.counted == b.counted);
}

TEST_CASE("report counters are consistent") {
  SubsetVector omega;
  ChainReport r = run_chain(omega, 3, 5000, 500, 11);
  CHECK(r.n == 3);
  CHECK(r.proposals == 5000);
  CHECK(r.counted == 4500);
  std::uint64_t total = 0;
  for (const auto& [mask, count] : r.visits) total += count;
  CHECK(total == r.counted);
  CHECK(acceptance_rate(r) == doctest::Approx(static_cast<double>(r.accepted) / r.proposals));
}

TEST_CASE("flat chain visits every graph uniformly") {
  ChainReport r = run_chain(SubsetVector(), 3, 100000, 5000, 12);
  CHECK(r.visits.size() == 8);
  for (const auto& [mask, count] : r.visits)
    CHECK(std::abs(static_cast<double>(count) / r.counted - 0.125) < 0.02);
}

TEST_CASE("long chain approaches the exact distribution") {
  SplitMix64 rng(65);
  SubsetVector omega = random_omega(4, rng);
  ChainReport r = run_chain(omega, 4, 500000, 20000, 13);
  CHECK(tv_distance(r, exact_distribution(omega, 4)) < 0.02);
}

TEST_CASE("exact distribution") {
  std::map<std::uint64_t, double> flat = exact_distribution(SubsetVector(), 3);
  CHECK(flat.size() == 8);
  for (const auto& [mask, p] : flat) CHECK(p == doctest::Approx(0.125).epsilon(1e-12));

  double psi = 0.25;
  LawParams params;
  params.psi = psi;
  GraphLaw law = builtin_law("edge-bernoulli", params, 3);
  std::map<std::uint64_t, double> exact = exact_distribution(law.omega(), 3);
  double z = 0.0;
  for (const UGraph& g : enumerate_decomposable(3))
    z += std::pow(psi, g.num_edges()) * std::pow(1 - psi, 3 - g.num_edges());
  for (const UGraph& g : enumerate_decomposable(3)) {
    double want = std::pow(psi, g.num_edges()) * std::pow(1 - psi, 3 - g.num_edges()) / z;
    CHECK(exact.at(g.edge_mask()) == doctest::Approx(want).epsilon(1e-10));
  }

  CHECK_THROWS_AS(exact_distribution(SubsetVector(), 7), Error);
}

TEST_CASE("tv distance") {
  std::map<std::uint64_t, double> flat = exact_distribution(SubsetVector(), 3);
  ChainReport ideal;
  ideal.n = 3;
  ideal.counted = 8;
  for (const auto& [mask, p] : flat) ideal.visits[mask] = 1;
  CHECK(tv_distance(ideal, flat) == doctest::Approx(0.0).epsilon(1e-12));

  ChainReport stuck;
  stuck.n = 3;
  stuck.counted = 4;
  stuck.visits[0] = 4;
  CHECK(tv_distance(stuck, flat) == doctest::Approx(1.0 - 0.125).epsilon(1e-12));
}

TEST_CASE("reports merge counter-wise") {
  SubsetVector omega;
  ChainReport a = run_chain(omega, 3, 4000, 200, 21);
  ChainReport b = run_chain(omega, 3, 6000, 300, 22);
  ChainReport m = merge_reports({a, b});
  CHECK(m.n == 3);
  CHECK(m.proposals == a.proposals + b.proposals);
  CHECK(m.accepted == a.accepted + b.accepted);
  CHECK(m.counted == a.counted + b.counted);
  for (const auto& [mask, count] : m.visits) {
    std::uint64_t av = a.visits.count(mask) ? a.visits.at(mask) : 0;
    std::uint64_t bv = b.visits.count(mask) ? b.visits.at(mask) : 0;
    CHECK(count == av + bv);
  }
}

TEST_CASE("edge frequencies") {
  ChainReport r;
  r.n = 3;
  r.counted = 4;
  UGraph e01(3);
  e01.add_edge(0, 1);
  r.visits[UGraph(3).edge_mask()] = 2;
  r.visits[e01.edge_mask()] = 2;
  std::vector<std::tuple<int, int, double>> freq = edge_frequencies(r);
  REQUIRE(freq.size() == 3);
  CHECK(freq[0] == std::tuple<int, int, double>{0, 1, 0.5});
  CHECK(freq[1] == std::tuple<int, int, double>{0, 2, 0.0});
  CHECK(freq[2] == std::tuple<int, int, double>{1, 2, 0.0});
}

}
