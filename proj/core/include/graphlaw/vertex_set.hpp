#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace graphlaw {

// Subset of vertex indices 0..63 packed into one machine word.
// Enumeration-heavy code paths cap n at 16 or lower; everything else works up
// to 64. Invariant: no bit at index >= the owning structure's vertex count.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> verts) {
    for (int v : verts) bits_ |= std::uint64_t{1} << v;
  }

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr bool contains_all(VertexSet s) const {
    return (bits_ & s.bits_) == s.bits_;
  }
  constexpr bool intersects(VertexSet s) const { return (bits_ & s.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet s) const { return VertexSet(bits_ | s.bits_); }
  constexpr VertexSet operator&(VertexSet s) const { return VertexSet(bits_ & s.bits_); }
  constexpr VertexSet operator-(VertexSet s) const { return VertexSet(bits_ & ~s.bits_); }
  constexpr VertexSet operator^(VertexSet s) const { return VertexSet(bits_ ^ s.bits_); }
  VertexSet& operator|=(VertexSet s) { bits_ |= s.bits_; return *this; }
  VertexSet& operator&=(VertexSet s) { bits_ &= s.bits_; return *this; }
  VertexSet& operator-=(VertexSet s) { bits_ &= ~s.bits_; return *this; }

  VertexSet& add(int v) { bits_ |= std::uint64_t{1} << v; return *this; }
  VertexSet& remove(int v) { bits_ &= ~(std::uint64_t{1} << v); return *this; }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr bool operator<(VertexSet s) const { return bits_ < s.bits_; }

  // Lowest-index member; only valid on nonempty sets.
  int min() const { return std::countr_zero(bits_); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : to_vector()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

// Iterates members of `set` low to high: for (int v : members(set)) ...
class members {
 public:
  explicit members(VertexSet s) : bits_(s.bits()) {}
  class iterator {
   public:
    explicit iterator(std::uint64_t b) : b_(b) {}
    int operator*() const { return std::countr_zero(b_); }
    iterator& operator++() { b_ &= b_ - 1; return *this; }
    bool operator!=(const iterator& o) const { return b_ != o.b_; }
   private:
    std::uint64_t b_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_;
};

// Iterates all subsets of `set` in ascending bit order, including the empty
// set and `set` itself. Standard submask walk.
class subsets_of {
 public:
  explicit subsets_of(VertexSet s) : mask_(s.bits()) {}
  class iterator {
   public:
    iterator(std::uint64_t sub, std::uint64_t mask, bool done)
        : sub_(sub), mask_(mask), done_(done) {}
    VertexSet operator*() const { return VertexSet(sub_); }
    iterator& operator++() {
      if (sub_ == mask_) { done_ = true; sub_ = 0; return *this; }
      sub_ = (sub_ - mask_) & mask_;
      return *this;
    }
    bool operator!=(const iterator& o) const {
      return done_ != o.done_ || sub_ != o.sub_;
    }
   private:
    std::uint64_t sub_, mask_;
    bool done_;
  };
  iterator begin() const { return iterator(0, mask_, false); }
  iterator end() const { return iterator(0, mask_, true); }

 private:
  std::uint64_t mask_;
};

}  // namespace graphlaw
