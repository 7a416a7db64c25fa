#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shortcut_forge/graph.hpp"

namespace shortcut_forge {

DiGraph gen_random_dag(std::size_t n, double edge_prob, std::uint64_t seed);
DiGraph gen_path(std::size_t n);
// Vertices split into `layers` near-equal consecutive blocks; edges only
// between consecutive blocks.
DiGraph gen_layered(std::size_t n, std::size_t layers, double edge_prob, std::uint64_t seed);
// Layer index of every vertex as used by gen_layered.
std::vector<std::size_t> layer_of(std::size_t n, std::size_t layers);
// A random DAG on `n` vertices plus `cycles` planted directed cycles of
// length 2..max_cycle_len over random vertex subsets.
DiGraph gen_planted_cycles(std::size_t n, double edge_prob, std::size_t cycles, std::size_t max_cycle_len,
                           std::uint64_t seed);

// Bipartite constraint instance with |A| = |B| = delta. Labels and side
// indices are 0-based; names in generated graphs are 1-based.
struct LabelCoverInstance {
  std::size_t delta = 0;
  std::size_t labels = 0;
  // (i, i'): A-side i constrained with B-side i'.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // Acceptable (label of i, label of i') pairs per edge; each nonempty.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> relations;

  void validate() const;
};

struct Labeling {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
};

bool covers(const LabelCoverInstance& inst, const Labeling& psi);

struct PlantedInstance {
  LabelCoverInstance instance;
  Labeling labeling;
};

// Each of the delta^2 possible edges is kept with probability `density`;
// each relation gets a uniformly random nonempty label-pair set. With
// `satisfiable`, a labeling is fixed first and its pair seeded into every
// relation.
PlantedInstance gen_labelcover_instance(std::size_t delta, std::size_t labels, double density, bool satisfiable,
                                        std::uint64_t seed);

struct LabelCoverGraph {
  DiGraph graph;
  std::vector<std::string> names;
  std::size_t delta = 0;
  std::size_t labels = 0;
  std::size_t rho = 0;

  Vertex a(std::size_t i) const;
  Vertex b(std::size_t i) const;
  Vertex alpha(std::size_t i, std::size_t j) const;
  Vertex beta(std::size_t i, std::size_t j) const;
  // k-th interior vertex (1..rho-1) of the a_i -> alpha_j path, and of the
  // beta_j -> b_i path.
  Vertex alpha_path(std::size_t i, std::size_t j, std::size_t k) const;
  Vertex beta_path(std::size_t i, std::size_t j, std::size_t k) const;
};

std::size_t labelcover_vertex_count(std::size_t delta, std::size_t labels, std::size_t rho);
std::size_t labelcover_edge_count(const LabelCoverInstance& inst, std::size_t rho);

// Throws BadRho for rho < 2.
LabelCoverGraph gen_labelcover_graph(const LabelCoverInstance& inst, std::size_t rho);

// (a_i, alpha^{(i)}_{psi_A(i)}) and (beta^{(i)}_{psi_B(i)}, b_i) for every i.
ShortcutSet canonical_shortcut(const LabelCoverGraph& lc, const Labeling& psi);

}  // namespace shortcut_forge
