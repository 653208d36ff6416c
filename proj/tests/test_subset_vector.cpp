#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "graphlaw/error.hpp"
#include "graphlaw/rng.hpp"
#include "graphlaw/subset_vector.hpp"

using namespace graphlaw;

namespace {

SubsetVector random_vector(int n, SplitMix64& rng) {
  SubsetVector v;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    if (rng.uniform01() < 0.6) v.set(VertexSet(mask), rng.normal());
  return v;
}

// Quadratic-time zeta oracle.
std::vector<double> zeta_oracle(const std::vector<double>& in, int n) {
  std::vector<double> out(in.size(), 0.0);
  for (std::uint64_t a = 0; a < in.size(); ++a)
    for (std::uint64_t b = 0; b < in.size(); ++b)
      if ((a & b) == a) out[a] += in[b];
  return out;
}

}  // namespace

TEST_SUITE("subset_vector") {

TEST_CASE("sparse storage drops exact zeros") {
  SubsetVector v;
  v.set(VertexSet{0}, 2.0);
  v.set(VertexSet{1}, 0.0);
  CHECK(v.support_size() == 1);
  v.add(VertexSet{0}, -2.0);
  CHECK(v.empty());
  CHECK(v.at(VertexSet{0}) == 0.0);
}

TEST_CASE("delta and arithmetic") {
  SubsetVector v = SubsetVector::delta(VertexSet{0, 2});
  CHECK(v.at(VertexSet{0, 2}) == 1.0);
  CHECK(v.support_size() == 1);

  SubsetVector w = v * 3.0 - SubsetVector::delta(VertexSet{1});
  CHECK(w.at(VertexSet{0, 2}) == 3.0);
  CHECK(w.at(VertexSet{1}) == -1.0);
  CHECK((w - w).empty());
  CHECK(w.is_integer());
  CHECK(!(w * 0.5).is_integer());
}

TEST_CASE("dot product") {
  SubsetVector a, b;
  a.set(VertexSet{0}, 2.0);
  a.set(VertexSet{1}, -1.0);
  b.set(VertexSet{1}, 4.0);
  b.set(VertexSet{0, 1}, 9.0);
  CHECK(a.dot(b) == -4.0);
  CHECK(b.dot(a) == -4.0);
  CHECK(a.dot(SubsetVector()) == 0.0);
}

TEST_CASE("dense round trip") {
  SplitMix64 rng(3);
  SubsetVector v = random_vector(4, rng);
  std::vector<double> dense = to_dense(v, 4);
  REQUIRE(dense.size() == 16);
  for (std::uint64_t mask = 0; mask < 16; ++mask) CHECK(dense[mask] == v.at(VertexSet(mask)));
  CHECK(to_sparse(dense) == v);
}

TEST_CASE("zeta matches the quadratic oracle and mobius inverts it") {
  SplitMix64 rng(4);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      SubsetVector v = random_vector(n, rng);
      std::vector<double> dense = to_dense(v, n);
      std::vector<double> z = superset_zeta(dense, n);
      std::vector<double> want = zeta_oracle(dense, n);
      for (std::size_t i = 0; i < z.size(); ++i) CHECK(z[i] == doctest::Approx(want[i]).epsilon(1e-12));

      std::vector<double> back = superset_mobius(z, n);
      for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == doctest::Approx(dense[i]).epsilon(1e-12));

      SubsetVector sparse_back = mobius_superset_inverse(superset_zeta(v, n), n);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        CHECK(sparse_back.at(VertexSet(mask)) == doctest::Approx(v.at(VertexSet(mask))).epsilon(1e-12));
    }
}

TEST_CASE("lattice cap") {
  CHECK_NOTHROW(check_lattice_cap(16));
  CHECK_THROWS_AS(check_lattice_cap(17), Error);
  CHECK_THROWS_AS(check_lattice_cap(-1), Error);
  CHECK_THROWS_AS(superset_zeta(std::vector<double>(4), 17), Error);
}

}
