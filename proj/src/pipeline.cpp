#include "shortcut_forge/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>

namespace shortcut_forge {

std::size_t default_max_retries() {
  if (const char* env = std::getenv("SHORTCUT_FORGE_MAX_RETRIES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 50;
}

double raw_beta(std::size_t n, const SolveParams& p) {
  return static_cast<double>(n) /
         (static_cast<double>(p.d) * std::sqrt(static_cast<double>(p.s) * static_cast<double>(p.alpha_d)));
}

double clamped_beta(std::size_t n, const SolveParams& p) {
  return std::clamp(raw_beta(n, p), 1.0, std::max(1.0, static_cast<double>(n)));
}

bool use_fallback(std::size_t n, const SolveParams& p) {
  return static_cast<double>(p.bound()) >= std::pow(static_cast<double>(n), 0.45) || raw_beta(n, p) < 1.0;
}

double thin_size_cap(std::size_t n, double beta, const SolveParams& p) {
  const double lg = log2_clamped(n);
  return p.constants.thin_size_cap * lg * lg * beta / static_cast<double>(p.alpha_d) * static_cast<double>(p.s);
}

namespace {

void check_params(const DiGraph& g, const SolveParams& p) {
  if (p.s < g.num_vertices()) {
    throw Error(ErrorCode::BadParams, "budget s=" + std::to_string(p.s) + " is below n=" + std::to_string(g.num_vertices()));
  }
  if (p.d < 1) throw Error(ErrorCode::BadParams, "d must be at least 1");
  if (p.alpha_d < 1) throw Error(ErrorCode::BadParams, "alpha_d must be at least 1");
}

std::size_t retries_of(const SolveParams& p) { return p.max_retries ? p.max_retries : default_max_retries(); }

}  // namespace

SolveReport approx_shortcut_dag(const DiGraph& g, const SolveParams& p, const ThinObserver& observer) {
  g.require_dag("approx_shortcut_dag");
  check_params(g, p);
  const std::size_t n = g.num_vertices();
  const std::size_t bound = p.bound();
  const std::size_t retries = retries_of(p);

  SolveReport report;
  report.bound = bound;
  const bool fallback = use_fallback(n, p);
  report.beta = fallback ? 1.0 : clamped_beta(n, p);
  report.f1_cap = thick_size_cap(n, report.beta, bound, p.constants);
  report.f2_cap = fallback ? 0.0 : thin_size_cap(n, report.beta, p);
  report.regime = fallback ? std::string(to_string(ThickRegime::UniversalFallback))
                           : std::string(to_string(select_regime(n, bound, p.constants)));

  if (verify_shortcut(g, EdgeList{}, bound).valid) {
    report.shortcut = make_shortcut_set(g, {});
    return report;
  }

  ThickConfig thick_cfg;
  thick_cfg.beta = report.beta;
  thick_cfg.alpha_d = p.alpha_d;
  thick_cfg.d = p.d;
  thick_cfg.seed = p.seed;
  thick_cfg.max_attempts = retries;
  thick_cfg.constants = p.constants;
  const ThickResult thick = settle_thick(g, thick_cfg);
  report.f1_size = thick.f1.size();
  report.retries = thick.attempts - 1;

  EdgeList combined = thick.f1.edges;
  if (!fallback) {
    ThinParams thin_params;
    thin_params.s = p.s;
    thin_params.d = p.d;
    thin_params.alpha_d = p.alpha_d;
    thin_params.beta = report.beta;
    thin_params.seed = p.seed;
    thin_params.max_retries = retries;
    thin_params.constants = p.constants;
    const ThinResult thin = settle_thin(g, thin_params, observer);
    report.f2_size = thin.f2.size();
    report.retries += thin.fails;
    report.thin_rounds = thin.rounds;
    report.constraints = thin.pool.size();
    combined = set_union(combined, thin.f2.edges);
  }

  report.shortcut = make_shortcut_set(g, std::move(combined));
  const VerifyReport check = verify_shortcut(g, report.shortcut, bound);
  if (!check.valid) throw std::logic_error("approx_shortcut_dag produced an invalid set: " + check.reason);
  return report;
}

namespace {

// Shortest path between two condensation nodes over E ∪ extra.
std::vector<Vertex> condensed_path(const DiGraph& dag, const EdgeList& extra, Vertex from, Vertex to) {
  const HopGraph hops(dag, extra);
  std::vector<std::size_t> dist;
  hops.bfs(from, kUnreachable, dist);
  if (dist[to] == kUnreachable) throw std::logic_error("condensation lost a reachable pair");
  EdgeList all = set_union(dag.edges(), extra);
  std::vector<Vertex> path{to};
  Vertex cur = to;
  while (cur != from) {
    // Predecessor with distance one less; smallest index for determinism.
    Vertex next = cur;
    for (const Edge& e : all) {
      if (e.to == cur && dist[e.from] != kUnreachable && dist[e.from] + 1 == dist[cur]) {
        next = e.from;
        break;
      }
    }
    cur = next;
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

SccReport approx_shortcut(const DiGraph& g, const SolveParams& p, const ThinObserver& observer) {
  check_params(g, p);
  const Condensation cond = scc_condense(g);
  SccReport out;
  out.components = cond.members.size();
  out.bound = 3 * p.bound();
  out.condensed = approx_shortcut_dag(cond.dag, p, observer);

  EdgeList edges;
  auto add = [&](Vertex a, Vertex b) {
    if (a != b && !g.has_edge(a, b)) edges.push_back({a, b});
  };
  for (const Edge& e : out.condensed.shortcut.edges) add(cond.representative[e.from], cond.representative[e.to]);
  normalize(edges);
  out.lifted = edges.size();
  for (std::size_t c = 0; c < cond.members.size(); ++c) {
    const Vertex center = cond.representative[c];
    for (Vertex m : cond.members[c]) {
      add(center, m);
      add(m, center);
    }
  }
  normalize(edges);
  out.star_edges = edges.size() - out.lifted;

  for (;;) {
    const VerifyReport check = verify_shortcut(g, edges, out.bound);
    if (check.valid) break;
    if (!check.worst_pair || check.reason != "distance exceeds bound") {
      throw std::logic_error("approx_shortcut produced an invalid set: " + check.reason);
    }
    const Vertex cu = cond.component_of[check.worst_pair->from];
    const Vertex cv = cond.component_of[check.worst_pair->to];
    const auto path = condensed_path(cond.dag, out.condensed.shortcut.edges, cu, cv);
    const std::size_t before = edges.size();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) add(cond.representative[path[i]], cond.representative[path[i + 1]]);
    normalize(edges);
    if (edges.size() == before) throw std::logic_error("approx_shortcut repair made no progress");
    out.repair_edges += edges.size() - before;
  }
  out.shortcut = make_shortcut_set(g, std::move(edges));
  return out;
}

SpannerReport approx_tc_spanner(const DiGraph& g, const SolveParams& p) {
  g.require_dag("approx_tc_spanner");
  check_params(g, p);
  const DiGraph reduction = transitive_reduction(g);
  SpannerReport out;
  out.reduction_size = reduction.num_edges();
  if (out.reduction_size > p.s) {
    throw Error(ErrorCode::PromiseViolated, "transitive reduction has " + std::to_string(out.reduction_size) +
                                                " edges, more than s=" + std::to_string(p.s) +
                                                "; no TC spanner of that size exists");
  }
  out.inner = approx_shortcut_dag(reduction, p);
  out.spanner = set_union(reduction.edges(), out.inner.shortcut.edges);
  const VerifyReport check = verify_tc_spanner(g, out.spanner, p.bound());
  if (!check.valid) throw std::logic_error("approx_tc_spanner produced an invalid spanner: " + check.reason);
  return out;
}

ShortcutSet shortcut_from_tcspanner(const DiGraph& g, const SolveParams& p) {
  if (p.s < g.num_edges()) {
    throw Error(ErrorCode::BadBudget, "s=" + std::to_string(p.s) + " is below m=" + std::to_string(g.num_edges()));
  }
  SolveParams doubled = p;
  doubled.s = 2 * p.s;
  const SpannerReport spanner = approx_tc_spanner(g, doubled);
  ShortcutSet out = make_shortcut_set(g, set_difference(spanner.spanner, g.edges()));
  const VerifyReport check = verify_shortcut(g, out, p.bound());
  if (!check.valid) throw std::logic_error("shortcut_from_tcspanner produced an invalid set: " + check.reason);
  return out;
}

}  // namespace shortcut_forge
