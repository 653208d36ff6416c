#include "graphlaw/enumerate.hpp"

#include "graphlaw/chordal.hpp"
#include "graphlaw/error.hpp"

namespace graphlaw {

namespace {

void check_enum_cap(int n, int cap) {
  if (n < 0) fail(ErrorCode::BadInput, "vertex count must be non-negative");
  if (n > cap)
    fail(ErrorCode::CapExceeded, "exhaustive enumeration capped at n <= " + std::to_string(cap));
}

}  // namespace

std::vector<UGraph> enumerate_decomposable(int n) {
  check_enum_cap(n, 7);
  std::vector<UGraph> out;
  const std::uint64_t total = std::uint64_t{1} << num_pairs(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    UGraph g = graph_from_edge_mask(n, mask);
    if (is_chordal(g)) out.push_back(std::move(g));
  }
  return out;
}

std::uint64_t count_decomposable(int n) {
  check_enum_cap(n, 7);
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << num_pairs(n);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (is_chordal(graph_from_edge_mask(n, mask))) ++count;
  return count;
}

std::vector<UGraph> all_graphs(int n) {
  check_enum_cap(n, 6);
  std::vector<UGraph> out;
  const std::uint64_t total = std::uint64_t{1} << num_pairs(n);
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back(graph_from_edge_mask(n, mask));
  return out;
}

std::vector<UGraph> enumerate_decomposable_on(int n, VertexSet verts) {
  check_enum_cap(verts.size(), 7);
  std::vector<int> vs = verts.to_vector();
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) pairs.emplace_back(vs[i], vs[j]);
  // Ascending masks over the local pair list give ascending ambient edge
  // masks: the local list is an order-preserving subsequence of pair order.
  std::vector<UGraph> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    UGraph g(n, verts);
    for (std::uint64_t b = mask; b; b &= b - 1) {
      auto [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(b))];
      g.add_edge(u, v);
    }
    if (is_chordal(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::pair<Edge, UGraph>> decomposable_neighbors(const UGraph& g) {
  if (!is_chordal(g)) fail(ErrorCode::NotDecomposable, "neighborhood of a non-decomposable graph");
  std::vector<std::pair<Edge, UGraph>> out;
  std::vector<int> vs = g.verts().to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      UGraph h = g;
      h.toggle_edge(vs[i], vs[j]);
      if (is_chordal(h)) out.emplace_back(Edge{vs[i], vs[j]}, std::move(h));
    }
  }
  return out;
}

}  // namespace graphlaw
