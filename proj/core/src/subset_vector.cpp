#include "graphlaw/subset_vector.hpp"

#include <cmath>

#include "graphlaw/error.hpp"

namespace graphlaw {

SubsetVector SubsetVector::delta(VertexSet a) {
  SubsetVector v;
  v.entries_[a.bits()] = 1.0;
  return v;
}

double SubsetVector::at(VertexSet a) const {
  auto it = entries_.find(a.bits());
  return it == entries_.end() ? 0.0 : it->second;
}

void SubsetVector::set(VertexSet a, double value) {
  if (value == 0.0)
    entries_.erase(a.bits());
  else
    entries_[a.bits()] = value;
}

void SubsetVector::add(VertexSet a, double value) {
  auto [it, inserted] = entries_.try_emplace(a.bits(), value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0.0) entries_.erase(it);
  } else if (value == 0.0) {
    entries_.erase(it);
  }
}

SubsetVector& SubsetVector::operator+=(const SubsetVector& o) {
  for (const auto& [k, v] : o.entries_) add(VertexSet(k), v);
  return *this;
}

SubsetVector& SubsetVector::operator-=(const SubsetVector& o) {
  for (const auto& [k, v] : o.entries_) add(VertexSet(k), -v);
  return *this;
}

SubsetVector& SubsetVector::operator*=(double s) {
  if (s == 0.0) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= s;
  return *this;
}

double SubsetVector::dot(const SubsetVector& o) const {
  const auto& small = entries_.size() <= o.entries_.size() ? entries_ : o.entries_;
  const auto& large = entries_.size() <= o.entries_.size() ? o.entries_ : entries_;
  double sum = 0.0;
  for (const auto& [k, v] : small) {
    auto it = large.find(k);
    if (it != large.end()) sum += v * it->second;
  }
  return sum;
}

bool SubsetVector::is_integer(double tol) const {
  for (const auto& [k, v] : entries_)
    if (std::abs(v - std::round(v)) > tol) return false;
  return true;
}

void check_lattice_cap(int n) {
  if (n < 0) fail(ErrorCode::BadInput, "vertex count must be non-negative");
  if (n > 16) fail(ErrorCode::CapExceeded, "dense lattice transforms capped at n <= 16");
}

std::vector<double> superset_zeta(std::vector<double> v, int n) {
  check_lattice_cap(n);
  const std::size_t size = std::size_t{1} << n;
  if (v.size() != size) fail(ErrorCode::BadInput, "dense vector size must be 2^n");
  for (int d = 0; d < n; ++d) {
    const std::size_t bit = std::size_t{1} << d;
    for (std::size_t m = 0; m < size; ++m)
      if (!(m & bit)) v[m] += v[m | bit];
  }
  return v;
}

std::vector<double> superset_mobius(std::vector<double> v, int n) {
  check_lattice_cap(n);
  const std::size_t size = std::size_t{1} << n;
  if (v.size() != size) fail(ErrorCode::BadInput, "dense vector size must be 2^n");
  for (int d = 0; d < n; ++d) {
    const std::size_t bit = std::size_t{1} << d;
    for (std::size_t m = 0; m < size; ++m)
      if (!(m & bit)) v[m] -= v[m | bit];
  }
  return v;
}

std::vector<double> to_dense(const SubsetVector& v, int n) {
  check_lattice_cap(n);
  std::vector<double> dense(std::size_t{1} << n, 0.0);
  for (const auto& [k, val] : v.entries()) {
    if (k >= dense.size()) fail(ErrorCode::BadInput, "subset key outside the 2^n lattice");
    dense[k] = val;
  }
  return dense;
}

SubsetVector to_sparse(const std::vector<double>& dense) {
  SubsetVector v;
  for (std::size_t m = 0; m < dense.size(); ++m)
    if (dense[m] != 0.0) v.set(VertexSet(m), dense[m]);
  return v;
}

SubsetVector superset_zeta(const SubsetVector& v, int n) {
  return to_sparse(superset_zeta(to_dense(v, n), n));
}

SubsetVector mobius_superset_inverse(const SubsetVector& v, int n) {
  return to_sparse(superset_mobius(to_dense(v, n), n));
}

}  // namespace graphlaw
