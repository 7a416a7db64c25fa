#pragma once

#include <cstddef>
#include <optional>

#include "shortcut_forge/graph.hpp"

namespace shortcut_forge {

// Caps for exhaustive search; larger inputs raise BudgetExceeded.
struct OracleBudget {
  std::size_t max_n = 7;
  std::size_t max_candidates = 24;
  // Largest subset size tried; 0 means no limit.
  std::size_t max_size = 0;
};

struct OracleResult {
  std::size_t size = 0;
  EdgeList edges;
};

// Smallest set of E^T \ E edges bringing every reachable pair within d
// hops. Subsets are tried by size, each size in colexicographic order.
OracleResult min_shortcut_exact(const DiGraph& g, std::size_t d, const OracleBudget& budget = {});

// Smallest H ⊆ E^T with the same closure and diameter at most d.
OracleResult min_tc_spanner_exact(const DiGraph& g, std::size_t d, const OracleBudget& budget = {});

// Minimum closure-preserving subgraph of E (brute force).
EdgeList min_equivalent_subgraph_exact(const DiGraph& g, const OracleBudget& budget = {});

bool exists_shortcut(const DiGraph& g, std::size_t s, std::size_t d, const OracleBudget& budget = {});

}  // namespace shortcut_forge
