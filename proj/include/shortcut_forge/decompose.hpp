#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "shortcut_forge/graph.hpp"

namespace shortcut_forge {

// Partition of a DAG's vertices into chains (totally ordered by
// reachability, listed source-first) and antichains (pairwise unreachable).
struct Decomposition {
  std::vector<std::vector<Vertex>> chains;
  std::vector<std::vector<Vertex>> antichains;
  std::size_t k = 0;
};

// Extracts lexicographically smallest longest chains while they hold at
// least 2n/k vertices, then splits the remainder into Mirsky layers.
// Guarantees at most k chains and at most 2n/k antichains.
Decomposition chain_antichain_decompose(const DiGraph& g, std::size_t k);

// Index pairs (i, j), i < j, added by midpoint recursion over a chain of
// `vertex_count` vertices. Together with the consecutive pairs (i, i+1)
// they put every ordered pair of the chain within two hops.
std::vector<std::pair<std::size_t, std::size_t>> two_hop_index_pairs(std::size_t vertex_count);

// The 2-shortcut of `chain` (a sequence totally ordered by reachability in
// `g`), with edges already present in E dropped. Throws NotAChain.
EdgeList path_two_shortcut(const DiGraph& g, std::span<const Vertex> chain);

}  // namespace shortcut_forge
