#include <doctest.h>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "graphlaw/chordal.hpp"
#include "graphlaw/enumerate.hpp"
#include "graphlaw/error.hpp"
#include "graphlaw/ugraph.hpp"

using namespace graphlaw;

TEST_SUITE("enumerate") {

TEST_CASE("counts match the known sequence") {
  const std::uint64_t want[] = {1, 2, 8, 61, 822, 18154};
  for (int n = 1; n <= 6; ++n) {
    CHECK(count_decomposable(n) == want[n - 1]);
    if (n <= 5) CHECK(enumerate_decomposable(n).size() == want[n - 1]);
  }
}

TEST_CASE("stream equals chordal filter of all graphs") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<UGraph> got = enumerate_decomposable(n);
    std::size_t i = 0;
    std::uint64_t prev_mask = 0;
    for (const UGraph& g : all_graphs(n)) {
      if (!is_chordal(g)) continue;
      REQUIRE(i < got.size());
      CHECK(got[i] == g);
      if (i > 0) CHECK(prev_mask < got[i].edge_mask());
      prev_mask = got[i].edge_mask();
      ++i;
    }
    CHECK(i == got.size());
  }
}

TEST_CASE("all_graphs covers every mask once") {
  std::vector<UGraph> graphs = all_graphs(3);
  REQUIRE(graphs.size() == 8);
  for (std::uint64_t mask = 0; mask < 8; ++mask) CHECK(graphs[mask].edge_mask() == mask);
}

TEST_CASE("enumerate_decomposable_on keeps ambient labels") {
  VertexSet verts{1, 3};
  std::vector<UGraph> graphs = enumerate_decomposable_on(4, verts);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0].verts() == verts);
  CHECK(graphs[0].num_edges() == 0);
  CHECK(graphs[1].edges() == std::vector<Edge>{{1, 3}});
}

TEST_CASE("caps are enforced") {
  CHECK_THROWS_AS(enumerate_decomposable(8), Error);
  CHECK_THROWS_AS(all_graphs(7), Error);
}

TEST_CASE("neighbors are the decomposable single-edge toggles") {
  for (int n = 2; n <= 4; ++n)
    for (const UGraph& g : enumerate_decomposable(n)) {
      std::map<Edge, UGraph> got;
      for (const auto& [e, h] : decomposable_neighbors(g)) got.emplace(e, h);
      int expected = 0;
      for (int i = 0; i < num_pairs(n); ++i) {
        Edge e = pair_from_index(n, i);
        UGraph h = g;
        h.toggle_edge(e.first, e.second);
        if (!is_chordal(h)) continue;
        ++expected;
        REQUIRE(got.count(e) == 1);
        CHECK(got.at(e) == h);
      }
      CHECK(static_cast<int>(got.size()) == expected);
    }
}

TEST_CASE("neighbor relation is symmetric and connected at n=4") {
  std::vector<UGraph> universe = enumerate_decomposable(4);
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < universe.size(); ++i) index[universe[i].edge_mask()] = i;

  std::vector<std::set<std::size_t>> adj(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (const auto& [e, h] : decomposable_neighbors(universe[i])) adj[i].insert(index.at(h.edge_mask()));

  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j : adj[i]) CHECK(adj[j].count(i) == 1);

  std::set<std::size_t> seen{0};
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  CHECK(seen.size() == universe.size());
}

}
