#include "shortcut_forge/oracle.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace shortcut_forge {

namespace {

using Mask = std::uint32_t;
constexpr std::size_t kHardVertexCap = 32;
constexpr std::size_t kHardCandidateCap = 62;

void check_caps(const DiGraph& g, std::size_t candidates, const OracleBudget& budget) {
  const std::size_t n = g.num_vertices();
  if (n > budget.max_n || n > kHardVertexCap) {
    throw Error(ErrorCode::BudgetExceeded, "n=" + std::to_string(n) + " exceeds the oracle cap " + std::to_string(budget.max_n));
  }
  if (candidates > budget.max_candidates || candidates > kHardCandidateCap) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(candidates) + " candidate edges exceed the oracle cap " +
                                               std::to_string(budget.max_candidates));
  }
}

std::vector<Mask> adjacency(std::size_t n, const EdgeList& edges) {
  std::vector<Mask> adj(n, 0);
  for (const Edge& e : edges) adj[e.from] |= Mask{1} << e.to;
  return adj;
}

// Vertices reachable from u in at most `limit` hops (u itself excluded
// unless it lies on a short enough cycle).
Mask reach_within(const std::vector<Mask>& adj, Vertex u, std::size_t limit) {
  Mask reached = 0;
  Mask frontier = Mask{1} << u;
  for (std::size_t step = 0; step < limit && frontier; ++step) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached;
}

std::vector<Mask> target_reach(const DiGraph& g) {
  std::vector<Mask> out(g.num_vertices(), 0);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const Bitset& b = g.descendants(u);
    for (auto v = b.find_first(); v != Bitset::npos; v = b.find_next(v)) {
      if (v != u) out[u] |= Mask{1} << v;
    }
  }
  return out;
}

// Walks subsets of `pool` by size then colex order; returns the first
// accepted one.
std::optional<EdgeList> first_subset(const EdgeList& pool, std::size_t max_size,
                                     const std::function<bool(const EdgeList&)>& accept) {
  const std::size_t m = pool.size();
  const std::size_t top = max_size ? std::min(max_size, m) : m;
  EdgeList chosen;
  for (std::size_t k = 0; k <= top; ++k) {
    if (k == 0) {
      if (accept(chosen)) return chosen;
      continue;
    }
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t c = (std::uint64_t{1} << k) - 1; c < limit;) {
      chosen.clear();
      for (std::uint64_t b = c; b; b &= b - 1) chosen.push_back(pool[static_cast<std::size_t>(std::countr_zero(b))]);
      if (accept(chosen)) return chosen;
      // Gosper's hack: next integer with the same popcount.
      const std::uint64_t low = c & (~c + 1);
      const std::uint64_t ripple = c + low;
      c = (((ripple ^ c) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

bool within(const std::vector<Mask>& adj, const std::vector<Mask>& target, std::size_t d) {
  for (Vertex u = 0; u < adj.size(); ++u) {
    if (!target[u]) continue;
    if ((reach_within(adj, u, d) & target[u]) != target[u]) return false;
  }
  return true;
}

std::optional<OracleResult> search_shortcut(const DiGraph& g, std::size_t d, std::size_t max_size,
                                            const OracleBudget& budget) {
  const EdgeList pool = candidate_edges(g);
  check_caps(g, pool.size(), budget);
  const std::size_t n = g.num_vertices();
  const auto target = target_reach(g);
  const auto base = adjacency(n, g.edges());
  auto found = first_subset(pool, max_size, [&](const EdgeList& extra) {
    auto adj = base;
    for (const Edge& e : extra) adj[e.from] |= Mask{1} << e.to;
    return within(adj, target, d);
  });
  if (!found) return std::nullopt;
  return OracleResult{found->size(), std::move(*found)};
}

}  // namespace

OracleResult min_shortcut_exact(const DiGraph& g, std::size_t d, const OracleBudget& budget) {
  auto out = search_shortcut(g, d, budget.max_size, budget);
  if (!out) throw Error(ErrorCode::BudgetExceeded, "no shortcut within the oracle's max_size");
  return *out;
}

OracleResult min_tc_spanner_exact(const DiGraph& g, std::size_t d, const OracleBudget& budget) {
  const std::size_t n = g.num_vertices();
  const auto target = target_reach(g);
  // On a DAG every closure-preserving H contains the transitive reduction.
  EdgeList required;
  EdgeList pool = closure_edges(g);
  if (g.is_acyclic()) {
    required = transitive_reduction(g).edges();
    pool = set_difference(pool, required);
  }
  check_caps(g, pool.size(), budget);
  const std::size_t max_extra = budget.max_size ? (budget.max_size > required.size() ? budget.max_size - required.size() : 0) : 0;
  if (budget.max_size && budget.max_size < required.size()) {
    throw Error(ErrorCode::BudgetExceeded, "no spanner within the oracle's max_size");
  }
  auto found = first_subset(pool, budget.max_size ? max_extra : 0, [&](const EdgeList& extra) {
    auto adj = adjacency(n, required);
    for (const Edge& e : extra) adj[e.from] |= Mask{1} << e.to;
    for (Vertex u = 0; u < n; ++u) {
      Mask all = reach_within(adj, u, n);
      if (all != (target[u] | (g.reaches(u, u) ? Mask{1} << u : 0))) return false;
    }
    return within(adj, target, d);
  });
  if (!found) throw Error(ErrorCode::BudgetExceeded, "no spanner within the oracle's max_size");
  EdgeList h = set_union(required, *found);
  return OracleResult{h.size(), std::move(h)};
}

EdgeList min_equivalent_subgraph_exact(const DiGraph& g, const OracleBudget& budget) {
  const std::size_t n = g.num_vertices();
  check_caps(g, g.num_edges(), budget);
  const auto target = target_reach(g);
  auto found = first_subset(g.edges(), 0, [&](const EdgeList& kept) {
    const auto adj = adjacency(n, kept);
    for (Vertex u = 0; u < n; ++u) {
      if ((reach_within(adj, u, n) & ~(Mask{1} << u)) != target[u]) return false;
    }
    return true;
  });
  return *found;
}

bool exists_shortcut(const DiGraph& g, std::size_t s, std::size_t d, const OracleBudget& budget) {
  OracleBudget capped = budget;
  capped.max_size = budget.max_size ? std::min(budget.max_size, s) : s;
  if (s == 0) {
    // first_subset treats 0 as unlimited; handle the empty set directly.
    const auto target = target_reach(g);
    check_caps(g, candidate_edges(g).size(), budget);
    return within(adjacency(g.num_vertices(), g.edges()), target, d);
  }
  return search_shortcut(g, d, capped.max_size, capped).has_value();
}

}  // namespace shortcut_forge
