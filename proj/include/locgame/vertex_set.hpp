#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace locgame {

using Vertex = int;

/// Raised for malformed graphs, files, or arguments that violate a precondition.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a search exceeds its state or evaluation budget. Never means "no".
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Set of vertices of a graph with at most 64 vertices, stored as a bitmask.
/// The exact solvers (beliefs, bush states, locating sets) all run on this.
class VertexSet {
 public:
  static constexpr int capacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet all(int n) {
    return VertexSet(n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
  template <typename Range>
  static VertexSet of(const Range& vertices) {
    VertexSet s;
    for (Vertex v : vertices) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr Vertex first() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls `fn(const std::vector<Vertex>&)` for every r-subset of {0..n-1} in
/// lexicographic order. Stops early and returns false if `fn` returns false.
template <typename Fn>
bool for_each_combination(int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return true;
  std::vector<Vertex> c(r);
  for (int i = 0; i < r; ++i) c[i] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<Vertex>&>(c))) return false;
    int i = r - 1;
    while (i >= 0 && c[i] == n - r + i) --i;
    if (i < 0) return true;
    ++c[i];
    for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace locgame
