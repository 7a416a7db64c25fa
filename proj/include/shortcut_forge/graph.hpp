#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "shortcut_forge/error.hpp"

namespace shortcut_forge {

using Vertex = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  auto operator<=>(const Edge&) const = default;
};

// Sorted, duplicate-free unless stated otherwise.
using EdgeList = std::vector<Edge>;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

void normalize(EdgeList& edges);
bool contains(const EdgeList& sorted, Edge e);
EdgeList set_union(const EdgeList& a, const EdgeList& b);
EdgeList set_difference(const EdgeList& a, const EdgeList& b);

struct Closure {
  // descendants[u][v] iff a path of length >= 1 leads from u to v. The
  // diagonal is set exactly for vertices lying on a cycle.
  std::vector<Bitset> descendants;
  std::vector<Bitset> ancestors;
  std::optional<std::vector<Vertex>> topological_order;
};

// Immutable directed graph on dense vertices [0, n). Adjacency lists are
// sorted; the reachability closure is computed on first use and shared
// between copies.
class DiGraph {
 public:
  DiGraph();
  DiGraph(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const EdgeList& edges() const { return edges_; }
  std::span<const Vertex> out(Vertex v) const;
  std::span<const Vertex> in(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  const Closure& closure() const;
  bool reaches(Vertex u, Vertex v) const { return closure().descendants[u][v]; }
  const Bitset& descendants(Vertex u) const { return closure().descendants[u]; }
  const Bitset& ancestors(Vertex v) const { return closure().ancestors[v]; }
  bool is_acyclic() const { return closure().topological_order.has_value(); }
  // Throws NotADag on cyclic graphs.
  const std::vector<Vertex>& topological_order() const;
  void require_dag(std::string_view context) const;

  // Stable 64-bit fingerprint of (n, edges), used to tie shortcut sets to
  // the graph they extend.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<Closure> closure;
  };

  std::size_t n_ = 0;
  EdgeList edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Vertex> in_sources_;
  std::uint64_t fingerprint_ = 0;
  std::shared_ptr<Cache> cache_;
};

DiGraph build_graph(std::size_t n, std::span<const Edge> edges);

struct ShortcutSet {
  EdgeList edges;
  std::uint64_t base_graph_id = 0;

  std::size_t size() const { return edges.size(); }
};

// Normalizes `edges` and checks every edge lies in E^T \ E of `g`.
ShortcutSet make_shortcut_set(const DiGraph& g, EdgeList edges);

// Ordered reachable pairs, sorted.
using PairSet = EdgeList;

// E^T as a sorted edge list (distinct endpoints only).
EdgeList closure_edges(const DiGraph& g);
// E^T \ E.
EdgeList candidate_edges(const DiGraph& g);
PairSet reachable_pairs(const DiGraph& g);

// CSR adjacency over E plus an extra edge set, for repeated BFS queries.
class HopGraph {
 public:
  HopGraph(const DiGraph& g, std::span<const Edge> extra);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  // Fills `dist` with hop counts from `source`, exploring at most `limit`
  // hops; unexplored vertices get kUnreachable.
  void bfs(Vertex source, std::size_t limit, std::vector<std::size_t>& dist) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

std::optional<std::size_t> bounded_dist(const DiGraph& g, std::span<const Edge> extra, Vertex u,
                                        Vertex v, std::size_t limit);

// Longest finite distance over reachable ordered pairs of distinct vertices.
std::size_t diameter(const DiGraph& g, std::span<const Edge> extra = {});

struct Condensation {
  DiGraph dag;
  std::vector<Vertex> component_of;
  // Minimum-index member of each component.
  std::vector<Vertex> representative;
  std::vector<std::vector<Vertex>> members;
};

Condensation scc_condense(const DiGraph& g);

DiGraph transitive_reduction(const DiGraph& g);

struct VerifyReport {
  bool valid = true;
  std::string reason;
  std::optional<Edge> worst_pair;
  // Largest distance seen over the checked pairs; kUnreachable when some
  // pair is not connected at all in the augmented graph.
  std::size_t worst_dist = 0;
  std::size_t size = 0;
};

VerifyReport verify_shortcut(const DiGraph& g, const ShortcutSet& f, std::size_t bound);
VerifyReport verify_shortcut(const DiGraph& g, std::span<const Edge> f, std::size_t bound);
VerifyReport verify_tc_spanner(const DiGraph& g, std::span<const Edge> h, std::size_t bound);

// Lexicographically smallest pair of `pairs` (sorted) whose distance in
// E ∪ extra exceeds `bound`.
std::optional<Edge> first_unsettled(const DiGraph& g, std::span<const Edge> extra,
                                    const PairSet& pairs, std::size_t bound);

}  // namespace shortcut_forge
