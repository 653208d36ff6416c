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
#include "graphlaw/rng.hpp"
#include "graphlaw/subset_vector.hpp"

using namespace graphlaw;

namespace {

SubsetVector random_omega(int n, SplitMix64& rng) {
  SubsetVector w;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) w.set(VertexSet(mask), 0.5 * rng.normal());
  return w;
}

double logsumexp(const std::vector<double>& xs) {
  double hi = *std::max_element(xs.begin(), xs.end());
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - hi);
  return hi + std::log(acc);
}

UGraph path3() {
  UGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

}  // namespace

TEST_SUITE("graph_law") {

TEST_CASE("uniform law is flat") {
  GraphLaw law = builtin_law("uniform", LawParams{}, 4);
  for (const UGraph& g : law.support_graphs()) CHECK(law.log_density(g) == 0.0);
  CHECK(normalize(law) == doctest::Approx(std::log(61.0)));
}

TEST_CASE("edge-bernoulli with even odds degenerates to uniform") {
  LawParams p;
  p.psi = 0.5;
  GraphLaw law = builtin_law("edge-bernoulli", p, 3);
  for (const UGraph& g : law.support_graphs()) CHECK(law.log_density(g) == doctest::Approx(0.0));
}

TEST_CASE("edge-bernoulli matches conditioned coin flips") {
  LawParams p;
  p.psi = 0.25;
  GraphLaw law = builtin_law("edge-bernoulli", p, 3);
  UGraph tri = UGraph::complete(3, VertexSet::full(3));
  CHECK(law.log_density(tri) - law.log_density(UGraph(3)) == doctest::Approx(3.0 * std::log(1.0 / 3.0)));

  // Oracle: flip each of the C(n,2) edges with probability psi, condition on
  // the result being decomposable.
  p.psi = 0.3;
  GraphLaw law4 = builtin_law("edge-bernoulli", p, 4);
  double log_z = normalize(law4);
  std::vector<UGraph> support = law4.support_graphs();
  double total = 0.0;
  std::map<std::uint64_t, double> oracle;
  for (const UGraph& g : support) {
    double w = std::pow(p.psi, g.num_edges()) * std::pow(1 - p.psi, num_pairs(4) - g.num_edges());
    oracle[g.edge_mask()] = w;
    total += w;
  }
  for (const UGraph& g : support)
    CHECK(std::exp(law4.log_density(g) - log_z) == doctest::Approx(oracle[g.edge_mask()] / total).epsilon(1e-10));
}

TEST_CASE("per-edge-bernoulli weights edges separately") {
  LawParams p;
  p.psi_edges[{0, 1}] = 0.5;
  p.psi_edges[{0, 2}] = 0.2;
  p.psi_edges[{1, 2}] = 0.5;
  GraphLaw law = builtin_law("per-edge-bernoulli", p, 3);
  UGraph e02(3);
  e02.add_edge(0, 2);
  CHECK(law.log_density(e02) - law.log_density(UGraph(3)) == doctest::Approx(std::log(0.2 / 0.8)));
}

TEST_CASE("forest penalty crushes cliques as kappa grows") {
  double prev = 0.0;
  for (int k = 0; k < 4; ++k) {
    LawParams p;
    p.rho = 0.4;
    p.kappa = 1.0 + 3.0 * k;
    GraphLaw law = builtin_law("forest-penalty", p, 3);
    UGraph tri = UGraph::complete(3, VertexSet::full(3));
    double gap = law.log_density(tri) - law.log_density(path3());
    CHECK(gap == doctest::Approx(p.rho - p.kappa));
    if (k > 0) CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("armstrong table values at n=3") {
  GraphLaw law = builtin_law("armstrong", LawParams{}, 3);
  double total = 0.0;
  for (const UGraph& g : law.support_graphs()) {
    double p = std::exp(law.log_density(g));
    total += p;
    double want = (g.num_edges() == 0 || g.num_edges() == 3) ? 1.0 / 4.0 : 1.0 / 12.0;
    CHECK(p == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unknown names are rejected") {
  CHECK_THROWS_AS(builtin_law("no-such-law", LawParams{}, 3), Error);
}

TEST_CASE("normalize equals direct summation") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    GraphLaw law = GraphLaw::exponential(4, random_omega(4, rng));
    std::vector<double> lds;
    for (const UGraph& g : law.support_graphs()) lds.push_back(law.log_density(g));
    CHECK(normalize(law) == doctest::Approx(logsumexp(lds)).epsilon(1e-12));
  }
}

TEST_CASE("table laws must be normalized and finite") {
  UGraph e(2);
  UGraph f(2);
  f.add_edge(0, 1);
  CHECK_NOTHROW(GraphLaw::table(2, {{e, std::log(0.5)}, {f, std::log(0.5)}}));
  CHECK_THROWS_AS(GraphLaw::table(2, {{e, std::log(0.5)}, {f, std::log(0.4)}}), Error);
  CHECK_THROWS_AS(GraphLaw::table(2, {{e, 0.0}, {e, 0.0}}), Error);
}

TEST_CASE("out-of-support graphs are rejected") {
  GraphLaw law = GraphLaw::restricted(GraphLaw::exponential(3, SubsetVector()), {UGraph(3)});
  CHECK(law.in_support(UGraph(3)));
  CHECK(!law.in_support(path3()));
  CHECK_THROWS_AS(law.log_density(path3()), Error);
}

TEST_CASE("standardize_omega zeroes low coordinates and keeps ratios") {
  SplitMix64 rng(12);
  SubsetVector omega = random_omega(4, rng);
  SubsetVector star = standardize_omega(omega, 4);
  CHECK(star.at(VertexSet()) == 0.0);
  for (int v = 0; v < 4; ++v) CHECK(star.at(VertexSet::single(v)) == 0.0);
  CHECK(standardize_omega(star, 4) == star);

  SubsetVector constant;
  for (std::uint64_t mask = 0; mask < 16; ++mask) constant.set(VertexSet(mask), 2.5);
  CHECK(standardize_omega(constant, 4).empty());

  std::vector<UGraph> universe = enumerate_decomposable(4);
  SubsetVector shift = omega - star;
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j = 0; j < universe.size(); ++j) {
      SubsetVector dt = clique_vector(universe[i]) - clique_vector(universe[j]);
      CHECK(std::abs(shift.dot(dt)) < 1e-12);
    }
}

TEST_CASE("conditioning on a decomposition keeps only its event") {
  GraphLaw uni = builtin_law("uniform", LawParams{}, 3);
  GraphLaw cond = conditional_given_decomposition(uni, VertexSet{0, 1}, VertexSet{1, 2});
  std::vector<UGraph> support = cond.support_graphs();
  CHECK(support.size() == 4);
  for (const UGraph& g : support) {
    CHECK(is_decomposition(g, VertexSet{0, 1}, VertexSet{1, 2}).ok);
    CHECK(cond.log_density(g) == doctest::Approx(std::log(0.25)));
  }

  GraphLaw off = GraphLaw::table(3, {{UGraph::complete(3, VertexSet::full(3)), 0.0}});
  CHECK_THROWS_AS(conditional_given_decomposition(off, VertexSet{0, 1}, VertexSet{1, 2}), Error);
}

TEST_CASE("margin of an exponential law keeps subset weights") {
  SplitMix64 rng(13);
  SubsetVector omega = random_omega(3, rng);
  GraphLaw law = GraphLaw::exponential(3, omega);
  VertexSet a{0, 1};
  GraphLaw margin = margin_law(law, a);

  // Oracle: push the full law forward through graph restriction.
  double log_z = normalize(law);
  std::map<std::uint64_t, double> pushed;
  for (const UGraph& g : law.support_graphs())
    pushed[g.induced(a).edge_mask()] += std::exp(law.log_density(g) - log_z);
  for (const UGraph& m : margin.support_graphs())
    CHECK(std::exp(margin.log_density(m)) == doctest::Approx(pushed.at(m.edge_mask())).epsilon(1e-10));
}

}
