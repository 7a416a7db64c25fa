#include "shortcut_forge/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace shortcut_forge {

namespace {

void check_prob(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::BadParams, "edge probability must lie in [0, 1]");
}

bool coin(std::mt19937_64& rng, double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

}  // namespace

DiGraph gen_random_dag(std::size_t n, double edge_prob, std::uint64_t seed) {
  check_prob(edge_prob);
  std::mt19937_64 rng(seed);
  EdgeList edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng, edge_prob)) edges.push_back({i, j});
    }
  }
  return DiGraph(n, edges);
}

DiGraph gen_path(std::size_t n) {
  EdgeList edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return DiGraph(n, edges);
}

std::vector<std::size_t> layer_of(std::size_t n, std::size_t layers) {
  if (layers < 1) throw Error(ErrorCode::BadParams, "layers must be at least 1");
  std::vector<std::size_t> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = v * layers / std::max<std::size_t>(n, 1);
  return out;
}

DiGraph gen_layered(std::size_t n, std::size_t layers, double edge_prob, std::uint64_t seed) {
  check_prob(edge_prob);
  if (n < 1) throw Error(ErrorCode::BadParams, "n must be at least 1");
  const auto layer = layer_of(n, layers);
  std::mt19937_64 rng(seed);
  EdgeList edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (layer[j] == layer[i] + 1 && coin(rng, edge_prob)) edges.push_back({i, j});
    }
  }
  return DiGraph(n, edges);
}

DiGraph gen_planted_cycles(std::size_t n, double edge_prob, std::size_t cycles, std::size_t max_cycle_len,
                           std::uint64_t seed) {
  check_prob(edge_prob);
  EdgeList edges = gen_random_dag(n, edge_prob, seed).edges();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  const std::size_t longest = std::min(std::max<std::size_t>(max_cycle_len, 2), n);
  std::vector<Vertex> order(n);
  for (std::size_t c = 0; c < cycles && n >= 2; ++c) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(2, longest)(rng);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < len; ++i) edges.push_back({order[i], order[(i + 1) % len]});
  }
  normalize(edges);
  return DiGraph(n, edges);
}

void LabelCoverInstance::validate() const {
  if (relations.size() != edges.size()) throw Error(ErrorCode::BadParams, "one relation per constraint edge required");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].first >= delta || edges[e].second >= delta) throw Error(ErrorCode::IndexOutOfRange, "constraint edge outside [0, delta)");
    if (relations[e].empty()) throw Error(ErrorCode::BadParams, "relation " + std::to_string(e) + " is empty");
    for (const auto& [x, y] : relations[e]) {
      if (x >= labels || y >= labels) throw Error(ErrorCode::IndexOutOfRange, "label outside [0, labels)");
    }
  }
}

bool covers(const LabelCoverInstance& inst, const Labeling& psi) {
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    const auto [i, k] = inst.edges[e];
    const auto want = std::make_pair(psi.a.at(i), psi.b.at(k));
    if (std::find(inst.relations[e].begin(), inst.relations[e].end(), want) == inst.relations[e].end()) return false;
  }
  return true;
}

PlantedInstance gen_labelcover_instance(std::size_t delta, std::size_t labels, double density, bool satisfiable,
                                        std::uint64_t seed) {
  check_prob(density);
  if (delta < 1 || labels < 1) throw Error(ErrorCode::BadParams, "delta and labels must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> label(0, labels - 1);
  PlantedInstance out;
  out.instance.delta = delta;
  out.instance.labels = labels;
  for (std::size_t i = 0; i < delta; ++i) out.labeling.a.push_back(label(rng));
  for (std::size_t i = 0; i < delta; ++i) out.labeling.b.push_back(label(rng));
  for (std::size_t i = 0; i < delta; ++i) {
    for (std::size_t k = 0; k < delta; ++k) {
      if (!coin(rng, density)) continue;
      std::vector<std::pair<std::size_t, std::size_t>> rel;
      for (std::size_t x = 0; x < labels; ++x) {
        for (std::size_t y = 0; y < labels; ++y) {
          if (coin(rng, 0.5)) rel.emplace_back(x, y);
        }
      }
      if (satisfiable) rel.emplace_back(out.labeling.a[i], out.labeling.b[k]);
      if (rel.empty()) rel.emplace_back(label(rng), label(rng));
      std::sort(rel.begin(), rel.end());
      rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
      out.instance.edges.emplace_back(i, k);
      out.instance.relations.push_back(std::move(rel));
    }
  }
  return out;
}

std::size_t labelcover_vertex_count(std::size_t delta, std::size_t labels, std::size_t rho) {
  return 2 * delta + 2 * delta * labels + 2 * delta * labels * (rho - 1);
}

std::size_t labelcover_edge_count(const LabelCoverInstance& inst, std::size_t rho) {
  std::size_t middle = 0;
  for (const auto& rel : inst.relations) middle += rel.size();
  return middle + 4 * inst.delta * inst.labels * rho;
}

Vertex LabelCoverGraph::a(std::size_t i) const { return static_cast<Vertex>(i); }
Vertex LabelCoverGraph::b(std::size_t i) const { return static_cast<Vertex>(delta + i); }
Vertex LabelCoverGraph::alpha(std::size_t i, std::size_t j) const {
  return static_cast<Vertex>(2 * delta + i * labels + j);
}
Vertex LabelCoverGraph::beta(std::size_t i, std::size_t j) const {
  return static_cast<Vertex>(2 * delta + delta * labels + i * labels + j);
}
Vertex LabelCoverGraph::alpha_path(std::size_t i, std::size_t j, std::size_t k) const {
  return static_cast<Vertex>(2 * delta + 2 * delta * labels + (i * labels + j) * (rho - 1) + (k - 1));
}
Vertex LabelCoverGraph::beta_path(std::size_t i, std::size_t j, std::size_t k) const {
  return static_cast<Vertex>(2 * delta + 2 * delta * labels + delta * labels * (rho - 1) +
                             (i * labels + j) * (rho - 1) + (k - 1));
}

LabelCoverGraph gen_labelcover_graph(const LabelCoverInstance& inst, std::size_t rho) {
  if (rho < 2) throw Error(ErrorCode::BadRho, "rho must be at least 2");
  inst.validate();
  LabelCoverGraph lc;
  lc.delta = inst.delta;
  lc.labels = inst.labels;
  lc.rho = rho;
  const std::size_t n = labelcover_vertex_count(inst.delta, inst.labels, rho);
  lc.names.resize(n);

  EdgeList edges;
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    const auto [i, k] = inst.edges[e];
    for (const auto& [x, y] : inst.relations[e]) edges.push_back({lc.alpha(i, x), lc.beta(k, y)});
  }
  for (std::size_t i = 0; i < inst.delta; ++i) {
    const std::string si = std::to_string(i + 1);
    lc.names[lc.a(i)] = "a" + si;
    lc.names[lc.b(i)] = "b" + si;
    for (std::size_t j = 0; j < inst.labels; ++j) {
      const std::string sij = si + "_" + std::to_string(j + 1);
      lc.names[lc.alpha(i, j)] = "alpha" + sij;
      lc.names[lc.beta(i, j)] = "beta" + sij;
      // a_i -> interior -> alpha, with every interior vertex and alpha
      // pointing back to a_i.
      Vertex prev = lc.a(i);
      for (std::size_t k = 1; k < rho; ++k) {
        const Vertex w = lc.alpha_path(i, j, k);
        lc.names[w] = "alpha" + sij + "_" + std::to_string(k);
        edges.push_back({prev, w});
        edges.push_back({w, lc.a(i)});
        prev = w;
      }
      edges.push_back({prev, lc.alpha(i, j)});
      edges.push_back({lc.alpha(i, j), lc.a(i)});
      // beta -> interior -> b_i, with b_i pointing to every interior vertex
      // and to beta.
      prev = lc.beta(i, j);
      for (std::size_t k = 1; k < rho; ++k) {
        const Vertex w = lc.beta_path(i, j, k);
        lc.names[w] = "beta" + sij + "_" + std::to_string(k);
        edges.push_back({prev, w});
        edges.push_back({lc.b(i), w});
        prev = w;
      }
      edges.push_back({prev, lc.b(i)});
      edges.push_back({lc.b(i), lc.beta(i, j)});
    }
  }
  lc.graph = DiGraph(n, edges);
  return lc;
}

ShortcutSet canonical_shortcut(const LabelCoverGraph& lc, const Labeling& psi) {
  if (psi.a.size() != lc.delta || psi.b.size() != lc.delta) throw Error(ErrorCode::BadParams, "labeling must be total");
  EdgeList edges;
  for (std::size_t i = 0; i < lc.delta; ++i) {
    edges.push_back({lc.a(i), lc.alpha(i, psi.a[i])});
    edges.push_back({lc.beta(i, psi.b[i]), lc.b(i)});
  }
  return make_shortcut_set(lc.graph, std::move(edges));
}

}  // namespace shortcut_forge
