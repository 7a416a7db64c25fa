#include "shortcut_forge/decompose.hpp"

#include <algorithm>
#include <string>

namespace shortcut_forge {

namespace {

// Longest chain of G^T restricted to `remaining`; among longest chains the
// lexicographically smallest vertex sequence.
std::vector<Vertex> longest_chain(const DiGraph& g, const Bitset& remaining) {
  const auto& order = g.topological_order();
  std::vector<std::size_t> best(g.num_vertices(), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (!remaining.test(v)) continue;
    std::size_t tail = 0;
    const Bitset& below = g.descendants(v);
    for (auto w = below.find_first(); w != Bitset::npos; w = below.find_next(w)) {
      if (remaining.test(w)) tail = std::max(tail, best[w]);
    }
    best[v] = tail + 1;
  }

  std::vector<Vertex> chain;
  std::size_t length = 0;
  for (auto v = remaining.find_first(); v != Bitset::npos; v = remaining.find_next(v)) {
    if (best[v] > length) {
      length = best[v];
      chain.assign(1, static_cast<Vertex>(v));
    }
  }
  while (!chain.empty() && chain.size() < length) {
    const Vertex cur = chain.back();
    const Bitset& below = g.descendants(cur);
    for (auto w = below.find_first(); w != Bitset::npos; w = below.find_next(w)) {
      if (remaining.test(w) && best[w] + 1 == best[cur]) {
        chain.push_back(static_cast<Vertex>(w));
        break;
      }
    }
  }
  return chain;
}

}  // namespace

Decomposition chain_antichain_decompose(const DiGraph& g, std::size_t k) {
  g.require_dag("chain_antichain_decompose");
  const std::size_t n = g.num_vertices();
  if (k < 1 || k > std::max<std::size_t>(n, 1)) {
    throw Error(ErrorCode::BadK, "k=" + std::to_string(k) + " outside [1," + std::to_string(n) + "]");
  }

  Decomposition dec;
  dec.k = k;
  Bitset remaining(n);
  remaining.set();

  // Each extracted chain removes >= 2n/k vertices, so fewer than k/2 + 1
  // extractions ever happen.
  while (remaining.any()) {
    std::vector<Vertex> chain = longest_chain(g, remaining);
    if (chain.size() * k < 2 * n) break;
    for (Vertex v : chain) remaining.reset(v);
    dec.chains.push_back(std::move(chain));
  }

  // Mirsky layering: level = vertices on the longest chain ending here.
  std::vector<std::size_t> level(n, 0);
  std::size_t levels = 0;
  for (Vertex v : g.topological_order()) {
    if (!remaining.test(v)) continue;
    std::size_t head = 0;
    const Bitset& above = g.ancestors(v);
    for (auto u = above.find_first(); u != Bitset::npos; u = above.find_next(u)) {
      if (remaining.test(u)) head = std::max(head, level[u]);
    }
    level[v] = head + 1;
    levels = std::max(levels, level[v]);
  }
  dec.antichains.assign(levels, {});
  for (auto v = remaining.find_first(); v != Bitset::npos; v = remaining.find_next(v)) {
    dec.antichains[level[v] - 1].push_back(static_cast<Vertex>(v));
  }
  return dec;
}

std::vector<std::pair<std::size_t, std::size_t>> two_hop_index_pairs(std::size_t vertex_count) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  // Closed index ranges [lo, hi] still to be handled.
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  if (vertex_count >= 3) pending.push_back({0, vertex_count - 1});
  while (!pending.empty()) {
    const auto [lo, hi] = pending.back();
    pending.pop_back();
    if (hi - lo < 2) continue;
    const std::size_t mid = lo + (hi - lo) / 2;
    for (std::size_t i = lo; i < mid; ++i) pairs.push_back({i, mid});
    for (std::size_t j = mid + 1; j <= hi; ++j) pairs.push_back({mid, j});
    if (mid > lo) pending.push_back({lo, mid - 1});
    if (mid < hi) pending.push_back({mid + 1, hi});
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

EdgeList path_two_shortcut(const DiGraph& g, std::span<const Vertex> chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i] >= g.num_vertices() || chain[i + 1] >= g.num_vertices() ||
        chain[i] == chain[i + 1] || !g.reaches(chain[i], chain[i + 1])) {
      throw Error(ErrorCode::NotAChain, "chain position " + std::to_string(i) +
                                            " does not reach its successor");
    }
  }
  EdgeList out;
  for (const auto& [i, j] : two_hop_index_pairs(chain.size())) {
    if (!g.has_edge(chain[i], chain[j])) out.push_back({chain[i], chain[j]});
  }
  normalize(out);
  return out;
}

}  // namespace shortcut_forge
