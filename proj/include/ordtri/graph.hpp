#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "ordtri/point_set.hpp"

namespace ordtri {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adj_(n) {}
  // Duplicate edges are merged; self-loops are rejected.
  static SimpleGraph from_edges(std::size_t n, std::span<const std::pair<Index, Index>> edges);
  // Takes ownership of adjacency lists that are already sorted and symmetric.
  static SimpleGraph from_sorted_adjacency(std::vector<std::vector<Index>> adj);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }
  const std::vector<Index>& neighbors(Index v) const { return adj_[v]; }
  bool adjacent(Index u, Index v) const;

 private:
  std::vector<std::vector<Index>> adj_;
  std::size_t edges_ = 0;
};

// Exact triangle count; dispatches between the two kernels below by density.
std::uint64_t count_triangles(const SimpleGraph& g);
// Sorted-adjacency merge over edges u < v, counting w > v once.
std::uint64_t count_triangles_merge(const SimpleGraph& g);
// Same enumeration with forward-neighbor bitsets and popcount.
std::uint64_t count_triangles_bitset(const SimpleGraph& g);

// Visits every triangle once as (i, j, k) with i < j < k, in lexicographic order.
// The visitor returns false to stop early.
void for_each_triangle(const SimpleGraph& g, const std::function<bool(Index, Index, Index)>& visit);

}  // namespace ordtri
