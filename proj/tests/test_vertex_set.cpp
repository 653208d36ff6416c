#include <doctest.h>

#include <set>
#include <vector>

#include "graphlaw/vertex_set.hpp"

using namespace graphlaw;

TEST_SUITE("vertex_set") {

TEST_CASE("construction and membership") {
  VertexSet s{0, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(0));
  CHECK(s.contains(3));
  CHECK(s.contains(5));
  CHECK(!s.contains(1));
  CHECK(s.bits() == 0b101001);
  CHECK(VertexSet::single(4).bits() == 16);
  CHECK(VertexSet::full(3) == VertexSet{0, 1, 2});
  CHECK(VertexSet().empty());
}

TEST_CASE("set algebra") {
  VertexSet a{0, 1, 2}, b{1, 2, 3};
  CHECK((a | b) == VertexSet{0, 1, 2, 3});
  CHECK((a & b) == VertexSet{1, 2});
  CHECK((a - b) == VertexSet{0});
  CHECK((a ^ b) == VertexSet{0, 3});
  CHECK(a.contains_all(VertexSet{0, 2}));
  CHECK(!a.contains_all(b));
  CHECK(a.intersects(b));
  CHECK(!a.intersects(VertexSet{4}));
}

TEST_CASE("add remove min to_vector") {
  VertexSet s;
  s.add(7).add(2).add(2);
  CHECK(s.size() == 2);
  CHECK(s.min() == 2);
  s.remove(2);
  CHECK(s.to_vector() == std::vector<int>{7});
  CHECK(VertexSet{2, 5, 9}.to_vector() == std::vector<int>{2, 5, 9});
  CHECK(VertexSet{1, 4}.to_string() == "{1,4}");
}

TEST_CASE("members iterates low to high") {
  std::vector<int> got;
  for (int v : members(VertexSet{1, 4, 6})) got.push_back(v);
  CHECK(got == std::vector<int>{1, 4, 6});
  for (int v : members(VertexSet())) { (void)v; CHECK(false); }
}

TEST_CASE("subsets_of yields each subset exactly once") {
  VertexSet base{0, 2, 5};
  std::set<std::uint64_t> seen;
  for (VertexSet s : subsets_of(base)) {
    CHECK(base.contains_all(s));
    CHECK(seen.insert(s.bits()).second);
  }
  CHECK(seen.size() == 8);
  CHECK(seen.count(0) == 1);
  CHECK(seen.count(base.bits()) == 1);

  int empty_count = 0;
  for (VertexSet s : subsets_of(VertexSet())) { (void)s; ++empty_count; }
  CHECK(empty_count == 1);
}

}
