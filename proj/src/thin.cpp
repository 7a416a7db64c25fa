#include "shortcut_forge/thin.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "shortcut_forge/covering_lp.hpp"

namespace shortcut_forge {

double FractionalSolution::value(Edge e) const {
  const auto it = std::lower_bound(candidates.begin(), candidates.end(), e);
  if (it == candidates.end() || *it != e) return 0.0;
  return values[static_cast<std::size_t>(it - candidates.begin())];
}

double FractionalSolution::mass(const EdgeList& edges) const {
  double total = 0.0;
  for (const Edge& e : edges) total += value(e);
  return total;
}

double FractionalSolution::total() const {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

namespace {

void require_reachable(const DiGraph& g, Vertex u, Vertex v) {
  if (u >= g.num_vertices() || v >= g.num_vertices() || u == v || !g.reaches(u, v)) {
    throw Error(ErrorCode::NotReachable,
                "(" + std::to_string(u) + "," + std::to_string(v) + ") is not a reachable pair");
  }
}

Bitset local_vertices(const DiGraph& g, Vertex u, Vertex v) {
  Bitset local = g.descendants(u);
  local.set(u);
  Bitset to_v = g.ancestors(v);
  to_v.set(v);
  local &= to_v;
  return local;
}

// Clears from `targets` every head of a removed edge leaving `w`.
void drop_removed(const EdgeList& removed, Vertex w, Bitset& targets) {
  for (auto it = std::lower_bound(removed.begin(), removed.end(), Edge{w, 0});
       it != removed.end() && it->from == w; ++it) {
    targets.reset(it->to);
  }
}

EdgeList without(const EdgeList& edges, std::size_t skip) {
  EdgeList out;
  out.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i != skip) out.push_back(edges[i]);
  }
  return out;
}

// Greedy pruning in sorted order. Criticality is monotone in the removed
// set, so a single pass leaves a minimal set.
EdgeList prune_to_minimal(const DiGraph& g, EdgeList edges, Vertex u, Vertex v, std::size_t k) {
  const Bitset local = local_vertices(g, u, v);
  std::erase_if(edges, [&](const Edge& e) { return !local.test(e.from) || !local.test(e.to); });
  for (std::size_t i = 0; i < edges.size();) {
    EdgeList trial = without(edges, i);
    if (is_critical(g, trial, u, v, k)) {
      edges = std::move(trial);
    } else {
      ++i;
    }
  }
  return edges;
}

std::string describe(const CriticalSet& set) {
  std::ostringstream out;
  out << set.bound << " " << set.witness.from << " " << set.witness.to << " :";
  for (const Edge& e : set.edges) out << " " << e.from << "," << e.to;
  return out.str();
}

}  // namespace

bool is_critical(const DiGraph& g, const EdgeList& removed, Vertex u, Vertex v, std::size_t k) {
  require_reachable(g, u, v);
  const std::size_t n = g.num_vertices();
  const Bitset local = local_vertices(g, u, v);
  Bitset visited(n);
  visited.set(u);
  std::vector<Vertex> frontier{u};
  for (std::size_t step = 1; step <= k && !frontier.empty(); ++step) {
    Bitset next(n);
    for (Vertex w : frontier) {
      Bitset targets = g.descendants(w);
      targets &= local;
      targets -= visited;
      drop_removed(removed, w, targets);
      next |= targets;
    }
    if (next.test(v)) return false;
    visited |= next;
    frontier.clear();
    for (auto w = next.find_first(); w != Bitset::npos; w = next.find_next(w)) {
      frontier.push_back(static_cast<Vertex>(w));
    }
  }
  return true;
}

bool is_minimal_critical(const DiGraph& g, const CriticalSet& set) {
  for (const Edge& e : set.edges) {
    if (e.from >= g.num_vertices() || e.to >= g.num_vertices() || e.from == e.to) return false;
    if (!g.reaches(e.from, e.to) || g.has_edge(e.from, e.to)) return false;
  }
  if (!std::is_sorted(set.edges.begin(), set.edges.end())) return false;
  const Vertex u = set.witness.from;
  const Vertex v = set.witness.to;
  if (!is_critical(g, set.edges, u, v, set.bound)) return false;
  for (std::size_t i = 0; i < set.edges.size(); ++i) {
    if (is_critical(g, without(set.edges, i), u, v, set.bound)) return false;
  }
  return true;
}

CriticalSet minimal_critical_set(const DiGraph& g, Vertex u, Vertex v, std::size_t k,
                                 const EdgeList& protected_edges) {
  require_reachable(g, u, v);
  if (bounded_dist(g, protected_edges, u, v, k)) {
    throw Error(ErrorCode::PreconditionViolated,
                "pair (" + std::to_string(u) + "," + std::to_string(v) + ") already within " +
                    std::to_string(k) + " hops of E and the protected edges");
  }
  // Only closure edges inside the local graph can lie on a u -> v path.
  const Bitset local = local_vertices(g, u, v);
  EdgeList start;
  for (auto a = local.find_first(); a != Bitset::npos; a = local.find_next(a)) {
    Bitset heads = g.descendants(static_cast<Vertex>(a));
    heads &= local;
    for (auto b = heads.find_first(); b != Bitset::npos; b = heads.find_next(b)) {
      const Edge e{static_cast<Vertex>(a), static_cast<Vertex>(b)};
      if (e.from != e.to && !g.has_edge(e.from, e.to) && !contains(protected_edges, e)) start.push_back(e);
    }
  }
  return CriticalSet{prune_to_minimal(g, std::move(start), u, v, k), Edge{u, v}, k};
}

CriticalSet decompose_critical(const DiGraph& g, const CriticalSet& wide, const FractionalSolution& x,
                               std::size_t d, std::size_t alpha_d) {
  g.require_dag("decompose_critical");
  if (d < 1 || alpha_d < 1) throw Error(ErrorCode::BadParams, "d and alpha_d must be positive");
  const double wide_mass = x.mass(wide.edges);
  if (!(wide_mass < static_cast<double>(alpha_d) / 9.0)) {
    throw Error(ErrorCode::PreconditionViolated, "critical set mass " + std::to_string(wide_mass) +
                                                     " is not below alpha_d/9");
  }
  const Vertex s = wide.witness.from;
  const Vertex t = wide.witness.to;
  const std::size_t wide_bound = alpha_d * d;
  if (!is_critical(g, wide.edges, s, t, wide_bound)) {
    throw Error(ErrorCode::PreconditionViolated, "input set is not critical at alpha_d * d");
  }

  CriticalSet out;
  out.bound = d;
  if (d == 1) {
    // Minimal 1-critical sets are single non-E closure edges. The layered
    // argument below needs 2d - 1 > d, so pick the lightest edge instead:
    // A' contains all (p_j, p_{j+2}) along a shortest-path tree branch, at
    // least alpha_d - 1 edges, which forces its lightest edge below 1.
    auto lightest = std::min_element(wide.edges.begin(), wide.edges.end(), [&](const Edge& a, const Edge& b) {
      return x.value(a) < x.value(b);
    });
    if (lightest == wide.edges.end()) throw std::logic_error("empty critical set at bound >= 1");
    out.edges = {*lightest};
    out.witness = *lightest;
  } else if (alpha_d < 3) {
    // A' is already d-critical for (s,t) and lighter than 2/9.
    out.edges = prune_to_minimal(g, wide.edges, s, t, d);
    out.witness = wide.witness;
  } else {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> layer(n, kUnreachable);
    std::vector<std::vector<Vertex>> layers{{s}};
    layer[s] = 0;
    Bitset visited(n);
    visited.set(s);
    while (layers.size() <= wide_bound && !layers.back().empty()) {
      Bitset next(n);
      for (Vertex w : layers.back()) {
        Bitset targets = g.descendants(w);
        targets -= visited;
        drop_removed(wide.edges, w, targets);
        next |= targets;
      }
      visited |= next;
      std::vector<Vertex> members;
      for (auto w = next.find_first(); w != Bitset::npos; w = next.find_next(w)) {
        members.push_back(static_cast<Vertex>(w));
        layer[w] = layers.size();
      }
      layers.push_back(std::move(members));
    }

    struct Batch {
      double mass;
      std::size_t index;
      EdgeList edges;
    };
    std::vector<Batch> batches;
    for (std::size_t i = 1; 2 * i * d - 1 <= wide_bound; ++i) {
      const std::size_t lo = 2 * (i - 1) * d;
      const std::size_t hi = 2 * i * d - 1;
      auto inside = [&](Vertex w) { return layer[w] != kUnreachable && layer[w] >= lo && layer[w] <= hi; };
      Batch batch{0.0, i, {}};
      for (const Edge& e : wide.edges) {
        if (inside(e.from) || inside(e.to)) batch.edges.push_back(e);
      }
      batch.mass = x.mass(batch.edges);
      batches.push_back(std::move(batch));
    }
    std::sort(batches.begin(), batches.end(), [](const Batch& a, const Batch& b) {
      return a.mass != b.mass ? a.mass < b.mass : a.index < b.index;
    });

    for (const Batch& batch : batches) {
      if (!(batch.mass < 1.0)) break;
      const std::size_t lo = 2 * (batch.index - 1) * d;
      const std::size_t hi = 2 * batch.index * d - 1;
      if (hi >= layers.size()) continue;
      const auto& first = layers[lo];
      const auto& last = layers[hi];
      // S: vertices of the batch's first layer with a closure edge into its
      // last layer; u must have no closure edge to another member of S.
      std::vector<Vertex> starts;
      for (Vertex w : first) {
        if (std::any_of(last.begin(), last.end(), [&](Vertex y) { return g.reaches(w, y); })) starts.push_back(w);
      }
      for (Vertex u : starts) {
        const bool sink = std::none_of(starts.begin(), starts.end(),
                                       [&](Vertex w) { return w != u && g.reaches(u, w); });
        if (!sink) continue;
        for (Vertex v : last) {
          if (!g.reaches(u, v) || !is_critical(g, batch.edges, u, v, d)) continue;
          out.edges = prune_to_minimal(g, batch.edges, u, v, d);
          out.witness = Edge{u, v};
          return out;
        }
      }
    }
    throw std::logic_error("decompose_critical: no batch yields a critical set");
  }
  return out;
}

void ConstraintPool::add(CriticalSet set) {
  if (!is_minimal_critical(*g_, set)) {
    throw Error(ErrorCode::PreconditionViolated, "rejected constraint " + describe(set));
  }
  constraints_.push_back(std::move(set));
}

void ConstraintPool::dump(std::ostream& out) const {
  for (const auto& c : constraints_) out << describe(c) << "\n";
}

namespace {

std::vector<std::size_t> candidate_indices(const EdgeList& candidates, const EdgeList& edges) {
  std::vector<std::size_t> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) {
    const auto it = std::lower_bound(candidates.begin(), candidates.end(), e);
    if (it == candidates.end() || *it != e) {
      throw Error(ErrorCode::PreconditionViolated,
                  "constraint edge (" + std::to_string(e.from) + "," + std::to_string(e.to) + ") is not a candidate");
    }
    out.push_back(static_cast<std::size_t>(it - candidates.begin()));
  }
  return out;
}

constexpr double kLpTolerance = 1e-9;

}  // namespace

std::optional<FractionalSolution> lp_feasible(const std::vector<CriticalSet>& pool, const EdgeList& candidates,
                                              double budget) {
  CoveringLp lp(candidates.size(), kLpTolerance);
  for (const auto& c : pool) {
    const auto idx = candidate_indices(candidates, c.edges);
    lp.add_row(idx);
  }
  auto sol = lp.solve();
  if (sol.objective > budget + kLpTolerance) return std::nullopt;
  return FractionalSolution{candidates, std::move(sol.values), budget};
}

CutOrRoundResult cut_or_round(const DiGraph& g, const FractionalSolution& x, const PairSet& thin,
                              const ThinParams& params, std::uint64_t stream_seed) {
  const std::size_t n = g.num_vertices();
  const double lg = log2_clamped(n);
  const double ratio = params.beta / static_cast<double>(params.alpha_d);
  const double scale = params.constants.thin_sampling * lg * ratio;

  CutOrRoundResult result;
  std::mt19937_64 rng(stream_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < x.candidates.size(); ++i) {
    if (x.values[i] <= 0.0) continue;
    const double p = std::min(1.0, scale * x.values[i]);
    if (p >= 1.0 || unit(rng) < p) result.f2.push_back(x.candidates[i]);
  }

  const std::size_t bound = params.bound();
  result.unsettled = first_unsettled(g, result.f2, thin, bound);
  if (!result.unsettled) {
    const double cap = params.constants.thin_size_cap * lg * lg * ratio * static_cast<double>(params.s);
    result.kind = static_cast<double>(result.f2.size()) <= cap ? CutOrRoundResult::Kind::Rounded
                                                               : CutOrRoundResult::Kind::Fail;
    return result;
  }

  const auto [u, v] = *result.unsettled;
  result.wide = minimal_critical_set(g, u, v, bound, result.f2);
  if (!(x.mass(result.wide->edges) < static_cast<double>(params.alpha_d) / 9.0)) {
    result.kind = CutOrRoundResult::Kind::Fail;
    return result;
  }
  result.violated = decompose_critical(g, *result.wide, x, params.d, params.alpha_d);
  result.kind = CutOrRoundResult::Kind::Violated;
  return result;
}

InfeasibleError::InfeasibleError(std::vector<CriticalSet> certificate, double lp_value, double budget)
    : Error(ErrorCode::Infeasible, [&] {
        std::ostringstream msg;
        msg << "covering LP minimum " << lp_value << " exceeds budget " << budget << " over "
            << certificate.size() << " certifying constraints";
        return msg.str();
      }()),
      certificate_(std::move(certificate)),
      lp_value_(lp_value),
      budget_(budget) {}

ThinResult settle_thin(const DiGraph& g, const ThinParams& params, const ThinObserver& observer) {
  g.require_dag("settle_thin");
  const std::size_t n = g.num_vertices();
  if (params.s < n) throw Error(ErrorCode::BadParams, "budget s must be at least n");
  if (params.d < 1 || params.alpha_d < 1) throw Error(ErrorCode::BadParams, "d and alpha_d must be positive");

  ThinResult result;
  result.thin = classify_pairs(g, params.beta).thin;
  const EdgeList candidates = candidate_edges(g);
  const std::size_t cap = params.iteration_cap ? params.iteration_cap : std::max<std::size_t>(4 * n * n, 1);
  const std::size_t retries = std::max<std::size_t>(params.max_retries, 1);

  CoveringLp lp(candidates.size(), kLpTolerance);
  ConstraintPool pool(g);
  std::uint64_t stream = params.seed;

  for (;;) {
    auto sol = lp.solve();
    result.lp_value = sol.objective;
    if (sol.objective > static_cast<double>(params.s) + kLpTolerance) {
      throw InfeasibleError(pool.constraints(), sol.objective, static_cast<double>(params.s));
    }
    const FractionalSolution x{candidates, std::move(sol.values), static_cast<double>(params.s)};

    bool cut = false;
    for (std::size_t attempt = 0; attempt < retries && !cut; ++attempt) {
      const CutOrRoundResult r = cut_or_round(g, x, result.thin, params, stream++);
      ++result.rounds;
      if (observer) observer(CutOrRoundTrace{x, r});
      switch (r.kind) {
        case CutOrRoundResult::Kind::Rounded:
          result.f2 = make_shortcut_set(g, r.f2);
          result.pool = pool.constraints();
          return result;
        case CutOrRoundResult::Kind::Violated:
          if (!(x.mass(r.violated->edges) < 1.0)) throw std::logic_error("cut_or_round returned a satisfied constraint");
          pool.add(*r.violated);
          lp.add_row(candidate_indices(candidates, r.violated->edges));
          cut = true;
          break;
        case CutOrRoundResult::Kind::Fail:
          ++result.fails;
          break;
      }
    }
    if (!cut) {
      throw Error(ErrorCode::RetryExhausted,
                  "cut-or-round failed " + std::to_string(retries) + " times on one fractional point");
    }
    if (pool.size() > cap) {
      throw Error(ErrorCode::IterationCapExceeded, std::to_string(pool.size()) + " constraints added");
    }
  }
}

}  // namespace shortcut_forge
