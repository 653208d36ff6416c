#include <doctest.h>

#include <cstdint>
#include <vector>

#include "graphlaw/ugraph.hpp"

using namespace graphlaw;

namespace {

// Reachability oracle: depth-first search over explicit adjacency, used to
// cross-check separates().
bool reachable_avoiding(const UGraph& g, int from, int to, VertexSet sep) {
  if (sep.contains(from) || sep.contains(to)) return false;
  VertexSet seen = VertexSet::single(from);
  std::vector<int> stack{from};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (int w : members(g.adj(v) - sep))
      if (!seen.contains(w)) {
        seen.add(w);
        stack.push_back(w);
      }
  }
  return false;
}

}  // namespace

TEST_SUITE("ugraph") {

TEST_CASE("edges sorted lower index first") {
  UGraph g(4);
  g.add_edge(2, 0);
  g.add_edge(3, 1);
  g.add_edge(0, 1);
  std::vector<Edge> want{{0, 1}, {0, 2}, {1, 3}};
  CHECK(g.edges() == want);
  CHECK(g.num_edges() == 3);
  g.toggle_edge(0, 1);
  CHECK(!g.has_edge(1, 0));
  g.toggle_edge(1, 0);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("pair index is a bijection") {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 0; i < num_pairs(n); ++i) {
      auto [u, v] = pair_from_index(n, i);
      CHECK(u < v);
      CHECK(v < n);
      CHECK(pair_index(n, u, v) == i);
    }
    CHECK(num_pairs(n) == n * (n - 1) / 2);
  }
}

TEST_CASE("edge mask round trip") {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    UGraph g = graph_from_edge_mask(4, mask);
    CHECK(g.edge_mask() == mask);
  }
}

TEST_CASE("induced subgraph keeps ambient labels") {
  UGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  UGraph h = g.induced(VertexSet{1, 2, 3});
  CHECK(h.n() == 4);
  CHECK(h.verts() == VertexSet{1, 2, 3});
  std::vector<Edge> want{{1, 2}, {2, 3}};
  CHECK(h.edges() == want);
  CHECK(!h.has_edge(0, 1));
}

TEST_CASE("complete and is_complete_on") {
  UGraph k = UGraph::complete(5, VertexSet{0, 2, 4});
  CHECK(k.num_edges() == 3);
  CHECK(k.is_complete_on(VertexSet{0, 2, 4}));
  CHECK(k.is_complete_on(VertexSet{0, 4}));
  CHECK(k.is_complete_on(VertexSet()));
  UGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(!path.is_complete_on(VertexSet{0, 2}));
}

TEST_CASE("components") {
  UGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(3, 4);
  std::vector<VertexSet> comps = g.components(g.verts());
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet{0, 1});
  CHECK(comps[1] == VertexSet{2});
  CHECK(comps[2] == VertexSet{3, 4});
}

TEST_CASE("separates agrees with reachability oracle") {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    UGraph g = graph_from_edge_mask(4, mask);
    for (std::uint64_t sep_bits = 0; sep_bits < 16; ++sep_bits) {
      VertexSet sep(sep_bits);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          if (a == b) continue;
          VertexSet sa = VertexSet::single(a), sb = VertexSet::single(b);
          bool oracle = sep.contains(a) || sep.contains(b) || !reachable_avoiding(g, a, b, sep);
          CHECK(g.separates(sep, sa, sb) == oracle);
        }
    }
  }
}

}
