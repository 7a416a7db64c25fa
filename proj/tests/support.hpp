#pragma once

#include <cstddef>
#include <queue>
#include <vector>

#include "shortcut_forge/graph.hpp"

namespace testing_support {

using shortcut_forge::Edge;
using shortcut_forge::EdgeList;
using shortcut_forge::Vertex;

inline constexpr std::size_t kInf = static_cast<std::size_t>(-1);

// Plain all-pairs BFS over an explicit edge list, independent of the
// library's HopGraph.
inline std::vector<std::vector<std::size_t>> all_pairs(std::size_t n, const EdgeList& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : edges) adj[e.from].push_back(e.to);
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, kInf));
  for (Vertex s = 0; s < n; ++s) {
    std::queue<Vertex> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : adj[u]) {
        if (dist[s][w] == kInf) {
          dist[s][w] = dist[s][u] + 1;
          q.push(w);
        }
      }
    }
  }
  return dist;
}

inline EdgeList joined(const EdgeList& a, const EdgeList& b) {
  EdgeList out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Max distance over ordered pairs (u != v) that `reach` marks reachable;
// kInf when one is disconnected in `edges`.
inline std::size_t max_reachable_dist(std::size_t n, const EdgeList& edges,
                                      const std::vector<std::vector<std::size_t>>& reach) {
  const auto dist = all_pairs(n, edges);
  std::size_t worst = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || reach[u][v] == kInf) continue;
      if (dist[u][v] == kInf) return kInf;
      worst = std::max(worst, dist[u][v]);
    }
  }
  return worst;
}

}  // namespace testing_support
