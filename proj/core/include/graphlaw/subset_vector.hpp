#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "graphlaw/vertex_set.hpp"

namespace graphlaw {

// Sparse real-valued vector indexed by vertex subsets.  Entries that are
// exactly zero are never stored; arithmetic erases entries that cancel.
// Integer-valued uses (clique vectors, imsets) share this type; integrality
// is asserted where required, not encoded in the type.
class SubsetVector {
 public:
  SubsetVector() = default;

  // Point mass: 1 at a, 0 elsewhere.
  static SubsetVector delta(VertexSet a);

  double at(VertexSet a) const;
  void set(VertexSet a, double value);
  void add(VertexSet a, double value);

  SubsetVector& operator+=(const SubsetVector& o);
  SubsetVector& operator-=(const SubsetVector& o);
  SubsetVector& operator*=(double s);

  friend SubsetVector operator+(SubsetVector x, const SubsetVector& y) { return x += y; }
  friend SubsetVector operator-(SubsetVector x, const SubsetVector& y) { return x -= y; }
  friend SubsetVector operator*(SubsetVector x, double s) { return x *= s; }

  bool operator==(const SubsetVector& o) const { return entries_ == o.entries_; }

  double dot(const SubsetVector& o) const;

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  bool is_integer(double tol = 0.0) const;

  // Keys in ascending bit-mask order.
  const std::map<std::uint64_t, double>& entries() const { return entries_; }

 private:
  std::map<std::uint64_t, double> entries_;
};

// Throws CapExceeded past n = 16, BadInput on negative n.
void check_lattice_cap(int n);

// Dense transforms over the full lattice of subsets of 0..n-1; index = bit
// mask.  n <= 16.
//   superset_zeta:   out[A] = sum_{B >= A} in[B]
//   superset_mobius: out[A] = sum_{B >= A} (-1)^{|B \ A|} in[B]; inverse of zeta
std::vector<double> superset_zeta(std::vector<double> v, int n);
std::vector<double> superset_mobius(std::vector<double> v, int n);

std::vector<double> to_dense(const SubsetVector& v, int n);
SubsetVector to_sparse(const std::vector<double>& dense);

// Sparse wrappers around the dense transforms.  n <= 16.
SubsetVector superset_zeta(const SubsetVector& v, int n);
SubsetVector mobius_superset_inverse(const SubsetVector& v, int n);

}  // namespace graphlaw
