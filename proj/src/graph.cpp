#include "ordtri/graph.hpp"

#include <algorithm>
#include <bit>

#include "ordtri/error.hpp"

namespace ordtri {

SimpleGraph SimpleGraph::from_edges(std::size_t n, std::span<const std::pair<Index, Index>> edges) {
  std::vector<std::vector<Index>> adj(n);
  for (auto [u, v] : edges) {
    if (u == v) throw Error("self-loop");
    if (u >= n || v >= n) throw Error("edge endpoint out of range");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return from_sorted_adjacency(std::move(adj));
}

SimpleGraph SimpleGraph::from_sorted_adjacency(std::vector<std::vector<Index>> adj) {
  SimpleGraph g;
  g.adj_ = std::move(adj);
  std::size_t degree_sum = 0;
  for (const auto& list : g.adj_) degree_sum += list.size();
  g.edges_ = degree_sum / 2;
  return g;
}

bool SimpleGraph::adjacent(Index u, Index v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::uint64_t count_triangles_merge(const SimpleGraph& g) {
  std::uint64_t total = 0;
  const auto n = static_cast<Index>(g.vertex_count());
  for (Index u = 0; u < n; ++u) {
    const auto& nu = g.neighbors(u);
    for (auto vi = std::upper_bound(nu.begin(), nu.end(), u); vi != nu.end(); ++vi) {
      const auto& nv = g.neighbors(*vi);
      auto a = vi + 1;
      auto b = std::upper_bound(nv.begin(), nv.end(), *vi);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++total;
          ++a;
          ++b;
        }
      }
    }
  }
  return total;
}

std::uint64_t count_triangles_bitset(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> bits(n * words, 0);
  for (Index u = 0; u < n; ++u) {
    for (Index v : g.neighbors(u)) {
      if (v > u) bits[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  std::uint64_t total = 0;
  for (Index u = 0; u < n; ++u) {
    const std::uint64_t* fu = &bits[u * words];
    for (Index v : g.neighbors(u)) {
      if (v <= u) continue;
      // Forward neighbors of v are all > v, so no masking is needed.
      const std::uint64_t* fv = &bits[v * words];
      for (std::size_t w = v / 64; w < words; ++w) total += std::popcount(fu[w] & fv[w]);
    }
  }
  return total;
}

std::uint64_t count_triangles(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  const bool dense = n > 0 && g.edge_count() >= 8 * n && n <= (std::size_t{1} << 15);
  return dense ? count_triangles_bitset(g) : count_triangles_merge(g);
}

void for_each_triangle(const SimpleGraph& g, const std::function<bool(Index, Index, Index)>& visit) {
  const auto n = static_cast<Index>(g.vertex_count());
  for (Index u = 0; u < n; ++u) {
    const auto& nu = g.neighbors(u);
    for (auto vi = std::upper_bound(nu.begin(), nu.end(), u); vi != nu.end(); ++vi) {
      const auto& nv = g.neighbors(*vi);
      auto a = vi + 1;
      auto b = std::upper_bound(nv.begin(), nv.end(), *vi);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          if (!visit(u, *vi, *a)) return;
          ++a;
          ++b;
        }
      }
    }
  }
}

}  // namespace ordtri
