#include "shortcut_forge/thick.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace shortcut_forge {

std::string_view to_string(ThickRegime regime) {
  switch (regime) {
    case ThickRegime::Unit: return "unit";
    case ThickRegime::SmallLog: return "small_log";
    case ThickRegime::General: return "general";
    case ThickRegime::UniversalFallback: return "universal_fallback";
  }
  return "unknown";
}

double log2_clamped(std::size_t n) { return std::max(1.0, std::log2(static_cast<double>(std::max<std::size_t>(n, 1)))); }

std::size_t ceil_log2(std::size_t n) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

ThickRegime select_regime(std::size_t n, std::size_t bound, const Constants& constants) {
  if (bound <= 1) return ThickRegime::Unit;
  if (static_cast<double>(bound) <= constants.small_regime_log * log2_clamped(n)) return ThickRegime::SmallLog;
  return ThickRegime::General;
}

double thick_size_cap(std::size_t n, double beta, std::size_t bound, const Constants& constants) {
  const double nn = static_cast<double>(n);
  const double lg = log2_clamped(n);
  const double b = static_cast<double>(bound);
  return constants.chain_samples * nn * nn * lg * lg / (beta * b * b) +
         nn * static_cast<double>(ceil_log2(n));
}

std::size_t local_graph_size(const DiGraph& g, Vertex u, Vertex v) {
  if (u >= g.num_vertices() || v >= g.num_vertices() || u == v || !g.reaches(u, v)) {
    throw Error(ErrorCode::NotReachable,
                "(" + std::to_string(u) + "," + std::to_string(v) + ") is not a reachable pair");
  }
  Bitset from_u = g.descendants(u);
  from_u.set(u);
  Bitset to_v = g.ancestors(v);
  to_v.set(v);
  from_u &= to_v;
  return from_u.count();
}

PairClassification classify_pairs(const DiGraph& g, double beta) {
  PairClassification out;
  for (const Edge& p : reachable_pairs(g)) {
    if (static_cast<double>(local_graph_size(g, p.from, p.to)) >= beta) {
      out.thick.push_back(p);
    } else {
      out.thin.push_back(p);
    }
  }
  return out;
}

namespace {

std::vector<Vertex> sample_without_replacement(std::size_t population, std::size_t count,
                                               std::mt19937_64& rng) {
  std::vector<Vertex> items(population);
  std::iota(items.begin(), items.end(), Vertex{0});
  count = std::min(count, population);
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, population - 1);
    std::swap(items[i], items[pick(rng)]);
  }
  items.resize(count);
  std::sort(items.begin(), items.end());
  return items;
}

std::size_t ceil_count(double value) {
  return static_cast<std::size_t>(std::ceil(std::max(0.0, value) - 1e-12));
}

void add_if_shortcut(const DiGraph& g, Vertex u, Vertex v, EdgeList& out) {
  if (u != v && !g.has_edge(u, v)) out.push_back({u, v});
}

EdgeList unit_edges(const DiGraph& g, const PairSet& thick) {
  EdgeList out;
  for (const Edge& p : thick) add_if_shortcut(g, p.from, p.to, out);
  return out;
}

EdgeList hub_star_edges(const DiGraph& g, const std::vector<Vertex>& hubs) {
  EdgeList out;
  for (Vertex u : hubs) {
    const Bitset& above = g.ancestors(u);
    for (auto v = above.find_first(); v != Bitset::npos; v = above.find_next(v)) {
      add_if_shortcut(g, static_cast<Vertex>(v), u, out);
    }
    const Bitset& below = g.descendants(u);
    for (auto v = below.find_first(); v != Bitset::npos; v = below.find_next(v)) {
      add_if_shortcut(g, u, static_cast<Vertex>(v), out);
    }
  }
  return out;
}

EdgeList chain_diameter_two_edges(const DiGraph& g, const Decomposition& dec) {
  EdgeList out;
  for (const auto& chain : dec.chains) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) add_if_shortcut(g, chain[i], chain[i + 1], out);
    const EdgeList two = path_two_shortcut(g, chain);
    out.insert(out.end(), two.begin(), two.end());
  }
  normalize(out);
  return out;
}

EdgeList hub_chain_edges(const DiGraph& g, const std::vector<Vertex>& hubs,
                         const std::vector<const std::vector<Vertex>*>& chains) {
  EdgeList out;
  for (Vertex u : hubs) {
    for (const auto* chain : chains) {
      const auto first = std::find_if(chain->begin(), chain->end(),
                                      [&](Vertex c) { return g.reaches(u, c); });
      if (first != chain->end()) add_if_shortcut(g, u, *first, out);
      const auto last = std::find_if(chain->rbegin(), chain->rend(),
                                     [&](Vertex c) { return g.reaches(c, u); });
      if (last != chain->rend()) add_if_shortcut(g, *last, u, out);
    }
  }
  return out;
}

}  // namespace

ThickResult settle_thick(const DiGraph& g, const ThickConfig& cfg) {
  g.require_dag("settle_thick");
  if (cfg.alpha_d * cfg.d < 1) throw Error(ErrorCode::BadParams, "alpha_d * d must be at least 1");
  const std::size_t n = g.num_vertices();
  const double beta = std::clamp(cfg.beta, 1.0, std::max(1.0, static_cast<double>(n)));
  const std::size_t bound = cfg.bound();
  const double lg = log2_clamped(n);

  ThickResult result;
  result.regime = select_regime(n, bound, cfg.constants);
  const PairSet thick = classify_pairs(g, beta).thick;

  if (result.regime == ThickRegime::Unit) {
    result.f1 = make_shortcut_set(g, unit_edges(g, thick));
    result.attempts = 1;
    return result;
  }

  if (result.regime == ThickRegime::General) {
    const std::size_t k =
        std::clamp<std::size_t>(ceil_count(8.0 * static_cast<double>(n) / static_cast<double>(bound)), 1,
                                std::max<std::size_t>(n, 1));
    result.decomposition = chain_antichain_decompose(g, k);
    result.chain_edges = chain_diameter_two_edges(g, result.decomposition);
  }

  const double b = static_cast<double>(bound);
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(cfg.max_attempts, 1); ++attempt) {
    std::mt19937_64 rng(cfg.seed + attempt);
    EdgeList edges;
    if (result.regime == ThickRegime::SmallLog) {
      const auto hubs = sample_without_replacement(n, ceil_count(static_cast<double>(n) / beta * lg), rng);
      result.hubs = hubs.size();
      edges = hub_star_edges(g, hubs);
    } else {
      const auto hubs =
          sample_without_replacement(n, ceil_count(cfg.constants.hub_samples * lg * static_cast<double>(n) / beta), rng);
      const std::size_t want = std::min(
          {ceil_count(cfg.constants.chain_samples * lg * static_cast<double>(n) / (b * b)),
           ceil_count(static_cast<double>(n) / b), result.decomposition.chains.size()});
      const auto picked = sample_without_replacement(result.decomposition.chains.size(), want, rng);
      std::vector<const std::vector<Vertex>*> chains;
      for (Vertex i : picked) chains.push_back(&result.decomposition.chains[i]);
      result.hubs = hubs.size();
      result.sampled_chains = chains.size();
      edges = hub_chain_edges(g, hubs, chains);
      edges.insert(edges.end(), result.chain_edges.begin(), result.chain_edges.end());
    }
    normalize(edges);
    result.attempts = attempt + 1;
    if (!first_unsettled(g, edges, thick, bound)) {
      result.f1 = make_shortcut_set(g, std::move(edges));
      return result;
    }
  }
  throw Error(ErrorCode::RetryExhausted,
              "thick pairs still unsettled after " + std::to_string(cfg.max_attempts) + " samples");
}

ThickResult universal_shortcut(const DiGraph& g, std::size_t bound, std::uint64_t seed,
                               std::size_t max_attempts, const Constants& constants) {
  if (bound < 2) throw Error(ErrorCode::BadParams, "universal_shortcut needs a hop bound of at least 2");
  ThickConfig cfg;
  cfg.beta = 1.0;
  cfg.alpha_d = 1;
  cfg.d = bound;
  cfg.seed = seed;
  cfg.max_attempts = max_attempts;
  cfg.constants = constants;
  return settle_thick(g, cfg);
}

}  // namespace shortcut_forge
