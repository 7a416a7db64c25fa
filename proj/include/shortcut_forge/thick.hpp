#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "shortcut_forge/decompose.hpp"
#include "shortcut_forge/graph.hpp"

namespace shortcut_forge {

// Constants from the sampling and size-cap formulas. Defaults are the
// published values; desk-scale experiments may override them.
struct Constants {
  double hub_samples = 9.0;
  double chain_samples = 999.0;
  double small_regime_log = 4.0;
  double thin_sampling = 500.0;
  double thin_size_cap = 1000.0;
};

enum class ThickRegime { Unit, SmallLog, General, UniversalFallback };

std::string_view to_string(ThickRegime regime);

// log2(n) clamped below at 1.
double log2_clamped(std::size_t n);
std::size_t ceil_log2(std::size_t n);

// Unit when the hop bound is 1, SmallLog when it is at most
// small_regime_log * log2(n), General otherwise.
ThickRegime select_regime(std::size_t n, std::size_t bound, const Constants& constants = {});

// 999 n^2 log^2 n / (beta bound^2) + n ceil(log2 n).
double thick_size_cap(std::size_t n, double beta, std::size_t bound, const Constants& constants = {});

struct ThickConfig {
  double beta = 1.0;
  std::size_t alpha_d = 1;
  std::size_t d = 1;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 50;
  Constants constants;

  std::size_t bound() const { return alpha_d * d; }
};

struct ThickResult {
  ShortcutSet f1;
  ThickRegime regime = ThickRegime::Unit;
  // General regime only: the chain decomposition and the edges that bring
  // every chain to diameter two.
  Decomposition decomposition;
  EdgeList chain_edges;
  std::size_t hubs = 0;
  std::size_t sampled_chains = 0;
  std::size_t attempts = 0;
};

// |V^{u,v}|: vertices reachable from u that reach v, u and v included.
std::size_t local_graph_size(const DiGraph& g, Vertex u, Vertex v);

struct PairClassification {
  PairSet thick;
  PairSet thin;
};

PairClassification classify_pairs(const DiGraph& g, double beta);

// Builds F1 settling every beta-thick pair within alpha_d * d hops. Las
// Vegas: a sample that leaves a thick pair unsettled is redrawn with the
// next seed, up to max_attempts times (RetryExhausted afterwards).
ThickResult settle_thick(const DiGraph& g, const ThickConfig& cfg);

// Stand-in for a universal low-diameter shortcut: settle_thick with every
// pair treated as thick.
ThickResult universal_shortcut(const DiGraph& g, std::size_t bound, std::uint64_t seed,
                               std::size_t max_attempts = 50, const Constants& constants = {});

}  // namespace shortcut_forge
