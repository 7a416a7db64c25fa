#include "shortcut_forge/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace shortcut_forge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NotADag: return "NotADag";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::NotReachable: return "NotReachable";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorCode::RetryExhausted: return "RetryExhausted";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BadBudget: return "BadBudget";
    case ErrorCode::PromiseViolated: return "PromiseViolated";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BadRho: return "BadRho";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

void normalize(EdgeList& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool contains(const EdgeList& sorted, Edge e) {
  return std::binary_search(sorted.begin(), sorted.end(), e);
}

EdgeList set_union(const EdgeList& a, const EdgeList& b) {
  EdgeList out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeList set_difference(const EdgeList& a, const EdgeList& b) {
  EdgeList out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffu;
    h *= 1099511628211ull;
  }
  return h;
}

void build_csr(std::size_t n, const EdgeList& edges, bool forward, std::vector<std::size_t>& offsets,
               std::vector<Vertex>& targets) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) ++offsets[(forward ? e.from : e.to) + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  targets.resize(edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    const Vertex key = forward ? e.from : e.to;
    targets[cursor[key]++] = forward ? e.to : e.from;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              targets.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
  }
}

}  // namespace

DiGraph::DiGraph() : DiGraph(0, {}) {}

DiGraph::DiGraph(std::size_t n, std::span<const Edge> edges)
    : n_(n), edges_(edges.begin(), edges.end()), cache_(std::make_shared<Cache>()) {
  for (const Edge& e : edges_) {
    if (e.from >= n || e.to >= n) {
      std::ostringstream msg;
      msg << "edge (" << e.from << "," << e.to << ") outside [0," << n << ")";
      throw Error(ErrorCode::IndexOutOfRange, msg.str());
    }
    if (e.from == e.to) {
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.from));
    }
  }
  normalize(edges_);
  build_csr(n_, edges_, true, out_offsets_, out_targets_);
  build_csr(n_, edges_, false, in_offsets_, in_sources_);
  fingerprint_ = fnv1a(14695981039346656037ull, n_);
  for (const Edge& e : edges_) fingerprint_ = fnv1a(fnv1a(fingerprint_, e.from), e.to);
}

std::span<const Vertex> DiGraph::out(Vertex v) const {
  return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const Vertex> DiGraph::in(Vertex v) const {
  return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

bool DiGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  const auto targets = out(u);
  return std::binary_search(targets.begin(), targets.end(), v);
}

const Closure& DiGraph::closure() const {
  std::call_once(cache_->once, [this] {
    auto c = std::make_unique<Closure>();
    c->descendants.assign(n_, Bitset(n_));
    c->ancestors.assign(n_, Bitset(n_));

    // Kahn's algorithm; a complete order means the graph is acyclic.
    std::vector<std::size_t> indegree(n_);
    for (const Edge& e : edges_) ++indegree[e.to];
    std::vector<Vertex> order;
    order.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (indegree[v] == 0) order.push_back(v);
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (Vertex w : out(order[head])) {
        if (--indegree[w] == 0) order.push_back(w);
      }
    }

    if (order.size() == n_) {
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Bitset& reach = c->descendants[*it];
        for (Vertex w : out(*it)) {
          reach.set(w);
          reach |= c->descendants[w];
        }
      }
      c->topological_order = std::move(order);
    } else {
      std::vector<Vertex> queue;
      for (Vertex s = 0; s < n_; ++s) {
        Bitset& reach = c->descendants[s];
        queue.assign(out(s).begin(), out(s).end());
        for (Vertex w : queue) reach.set(w);
        for (std::size_t head = 0; head < queue.size(); ++head) {
          for (Vertex w : out(queue[head])) {
            if (!reach.test(w)) {
              reach.set(w);
              queue.push_back(w);
            }
          }
        }
      }
    }

    for (Vertex u = 0; u < n_; ++u) {
      const Bitset& reach = c->descendants[u];
      for (auto v = reach.find_first(); v != Bitset::npos; v = reach.find_next(v)) {
        c->ancestors[v].set(u);
      }
    }
    cache_->closure = std::move(c);
  });
  return *cache_->closure;
}

const std::vector<Vertex>& DiGraph::topological_order() const {
  require_dag("topological_order");
  return *closure().topological_order;
}

void DiGraph::require_dag(std::string_view context) const {
  if (!is_acyclic()) throw Error(ErrorCode::NotADag, std::string(context) + " requires an acyclic graph");
}

DiGraph build_graph(std::size_t n, std::span<const Edge> edges) { return DiGraph(n, edges); }

ShortcutSet make_shortcut_set(const DiGraph& g, EdgeList edges) {
  normalize(edges);
  for (const Edge& e : edges) {
    if (e.from >= g.num_vertices() || e.to >= g.num_vertices() || e.from == e.to ||
        !g.reaches(e.from, e.to) || g.has_edge(e.from, e.to)) {
      throw Error(ErrorCode::PreconditionViolated,
                  "edge (" + std::to_string(e.from) + "," + std::to_string(e.to) + ") not in E^T \\ E");
    }
  }
  return ShortcutSet{std::move(edges), g.fingerprint()};
}

EdgeList closure_edges(const DiGraph& g) {
  EdgeList out;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const Bitset& reach = g.descendants(u);
    for (auto v = reach.find_first(); v != Bitset::npos; v = reach.find_next(v)) {
      if (v != u) out.push_back({u, static_cast<Vertex>(v)});
    }
  }
  return out;
}

EdgeList candidate_edges(const DiGraph& g) { return set_difference(closure_edges(g), g.edges()); }

PairSet reachable_pairs(const DiGraph& g) { return closure_edges(g); }

HopGraph::HopGraph(const DiGraph& g, std::span<const Edge> extra) {
  EdgeList all(g.edges());
  all.insert(all.end(), extra.begin(), extra.end());
  normalize(all);
  build_csr(g.num_vertices(), all, true, offsets_, targets_);
}

void HopGraph::bfs(Vertex source, std::size_t limit, std::vector<std::size_t>& dist) const {
  dist.assign(num_vertices(), kUnreachable);
  dist[source] = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    if (dist[u] >= limit) continue;
    for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
      const Vertex w = targets_[i];
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

std::optional<std::size_t> bounded_dist(const DiGraph& g, std::span<const Edge> extra, Vertex u,
                                        Vertex v, std::size_t limit) {
  HopGraph hops(g, extra);
  std::vector<std::size_t> dist;
  hops.bfs(u, limit, dist);
  if (dist[v] == kUnreachable || dist[v] > limit) return std::nullopt;
  return dist[v];
}

std::size_t diameter(const DiGraph& g, std::span<const Edge> extra) {
  HopGraph hops(g, extra);
  std::vector<std::size_t> dist;
  std::size_t best = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    hops.bfs(u, kUnreachable, dist);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (v != u && dist[v] != kUnreachable) best = std::max(best, dist[v]);
    }
  }
  return best;
}

Condensation scc_condense(const DiGraph& g) {
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kNone), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> components;
  std::size_t counter = 0;

  // Iterative Tarjan: frames hold (vertex, next out-neighbour position).
  std::vector<std::pair<Vertex, std::size_t>> frames;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    frames.push_back({root, 0});
    index[root] = lowlink[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto targets = g.out(v);
      if (pos < targets.size()) {
        const Vertex w = targets[pos++];
        if (index[w] == kNone) {
          index[w] = lowlink[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      if (lowlink[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      const Vertex finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        Vertex parent = frames.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[finished]);
      }
    }
  }

  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  Condensation out;
  out.component_of.assign(n, 0);
  for (Vertex c = 0; c < components.size(); ++c) {
    out.representative.push_back(components[c].front());
    for (Vertex v : components[c]) out.component_of[v] = c;
  }
  EdgeList dag_edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = out.component_of[e.from];
    const Vertex b = out.component_of[e.to];
    if (a != b) dag_edges.push_back({a, b});
  }
  normalize(dag_edges);
  out.dag = DiGraph(components.size(), dag_edges);
  out.members = std::move(components);
  return out;
}

DiGraph transitive_reduction(const DiGraph& g) {
  g.require_dag("transitive_reduction");
  EdgeList kept;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const Bitset& below = g.descendants(u);
    for (auto v = below.find_first(); v != Bitset::npos; v = below.find_next(v)) {
      // (u,v) is essential iff no intermediate w has u ->+ w ->+ v.
      if (!below.intersects(g.ancestors(static_cast<Vertex>(v)))) {
        kept.push_back({u, static_cast<Vertex>(v)});
      }
    }
  }
  return DiGraph(g.num_vertices(), kept);
}

namespace {

// Checks every distinct reachable pair of `g` against distances in `hops`.
void check_distances(const DiGraph& g, const HopGraph& hops, std::size_t bound, VerifyReport& report) {
  std::vector<std::size_t> dist;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    hops.bfs(u, kUnreachable, dist);
    const Bitset& reach = g.descendants(u);
    for (auto v = reach.find_first(); v != Bitset::npos; v = reach.find_next(v)) {
      if (v == u) continue;
      if (!report.worst_pair || dist[v] > report.worst_dist) {
        report.worst_dist = dist[v];
        report.worst_pair = Edge{u, static_cast<Vertex>(v)};
      }
    }
  }
  if (report.worst_pair && report.worst_dist > bound) {
    report.valid = false;
    report.reason = "distance exceeds bound";
  }
}

std::string describe(Edge e) {
  return "(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
}

}  // namespace

VerifyReport verify_shortcut(const DiGraph& g, const ShortcutSet& f, std::size_t bound) {
  return verify_shortcut(g, std::span<const Edge>(f.edges), bound);
}

VerifyReport verify_shortcut(const DiGraph& g, std::span<const Edge> f, std::size_t bound) {
  VerifyReport report;
  EdgeList edges(f.begin(), f.end());
  normalize(edges);
  report.size = edges.size();
  for (const Edge& e : edges) {
    const bool in_range = e.from < g.num_vertices() && e.to < g.num_vertices();
    if (!in_range || e.from == e.to || !g.reaches(e.from, e.to)) {
      report.valid = false;
      report.reason = "not in closure: " + describe(e);
      report.worst_pair = e;
      return report;
    }
    if (g.has_edge(e.from, e.to)) {
      report.valid = false;
      report.reason = "already in E: " + describe(e);
      report.worst_pair = e;
      return report;
    }
  }
  check_distances(g, HopGraph(g, edges), bound, report);
  return report;
}

VerifyReport verify_tc_spanner(const DiGraph& g, std::span<const Edge> h, std::size_t bound) {
  VerifyReport report;
  EdgeList edges(h.begin(), h.end());
  normalize(edges);
  report.size = edges.size();
  for (const Edge& e : edges) {
    const bool in_range = e.from < g.num_vertices() && e.to < g.num_vertices();
    if (!in_range || e.from == e.to || !g.reaches(e.from, e.to)) {
      report.valid = false;
      report.reason = "not in closure: " + describe(e);
      report.worst_pair = e;
      return report;
    }
  }
  const DiGraph spanner(g.num_vertices(), edges);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (spanner.descendants(u) != g.descendants(u)) {
      report.valid = false;
      report.reason = "closure mismatch at source " + std::to_string(u);
      return report;
    }
  }
  check_distances(spanner, HopGraph(spanner, {}), bound, report);
  return report;
}

std::optional<Edge> first_unsettled(const DiGraph& g, std::span<const Edge> extra, const PairSet& pairs,
                                    std::size_t bound) {
  if (pairs.empty()) return std::nullopt;
  HopGraph hops(g, extra);
  std::vector<std::size_t> dist;
  std::optional<Vertex> source;
  for (const Edge& p : pairs) {
    if (!source || *source != p.from) {
      source = p.from;
      hops.bfs(p.from, bound, dist);
    }
    if (dist[p.to] == kUnreachable || dist[p.to] > bound) return p;
  }
  return std::nullopt;
}

}  // namespace shortcut_forge
