#include "doctest.h"

#include <cmath>

#include "../support.hpp"
#include "shortcut_forge/decompose.hpp"
#include "shortcut_forge/generators.hpp"

using namespace shortcut_forge;

namespace {

void check_invariants(const DiGraph& g, const Decomposition& dec) {
  const std::size_t n = g.num_vertices();
  std::vector<int> seen(n, 0);
  for (const auto& c : dec.chains) {
    for (Vertex v : c) ++seen[v];
    for (std::size_t i = 0; i + 1 < c.size(); ++i) CHECK(g.reaches(c[i], c[i + 1]));
  }
  for (const auto& q : dec.antichains) {
    for (Vertex v : q) ++seen[v];
    for (Vertex x : q)
      for (Vertex y : q)
        if (x != y) CHECK_FALSE(g.reaches(x, y));
  }
  for (int count : seen) CHECK(count == 1);
  CHECK(dec.chains.size() <= dec.k);
  CHECK(static_cast<double>(dec.antichains.size()) <= 2.0 * static_cast<double>(n) / static_cast<double>(dec.k));
}

}  // namespace

TEST_CASE("path decomposes into one chain") {
  const auto g = gen_path(8);
  const auto dec = chain_antichain_decompose(g, 2);
  REQUIRE(dec.chains.size() == 1);
  CHECK(dec.chains[0].size() == 8);
  CHECK(dec.antichains.empty());
}

TEST_CASE("edgeless graph is a single antichain") {
  const auto g = build_graph(8, EdgeList{});
  const auto dec = chain_antichain_decompose(g, 4);
  check_invariants(g, dec);
  CHECK(dec.antichains.size() == 1);
}

TEST_CASE("random DAG invariants") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen_random_dag(40, 0.08, seed);
    for (std::size_t k : {std::size_t{2}, std::size_t{7}, std::size_t{8}, std::size_t{40}}) check_invariants(g, chain_antichain_decompose(g, k));
  }
}

TEST_CASE("decompose rejects bad k and cycles") {
  const auto g = gen_path(5);
  CHECK_THROWS_AS(chain_antichain_decompose(g, 0), Error);
  CHECK_THROWS_AS(chain_antichain_decompose(g, 6), Error);
  const auto cyc = build_graph(2, EdgeList{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(chain_antichain_decompose(cyc, 1), Error);
}

TEST_CASE("path_two_shortcut small cases") {
  CHECK(path_two_shortcut(gen_path(2), std::vector<Vertex>{0, 1}).empty());
  const auto five = gen_path(5);
  using P = std::pair<std::size_t, std::size_t>;
  CHECK(two_hop_index_pairs(5) == std::vector<P>{{0, 2}, {1, 2}, {2, 3}, {2, 4}});
  // (1,2) and (2,3) are path edges already.
  CHECK(path_two_shortcut(five, std::vector<Vertex>{0, 1, 2, 3, 4}) == EdgeList{{0, 2}, {2, 4}});
  const auto sparse = build_graph(5, EdgeList{{0, 1}, {1, 3}, {3, 4}, {1, 2}, {2, 3}});
  CHECK(path_two_shortcut(sparse, std::vector<Vertex>{0, 1, 2, 3, 4}) == EdgeList{{0, 2}, {2, 4}});
}

TEST_CASE("path_two_shortcut diameter and size for l up to 64") {
  for (std::size_t len = 1; len <= 64; ++len) {
    const auto g = gen_path(len + 1);
    std::vector<Vertex> chain(len + 1);
    for (Vertex i = 0; i <= len; ++i) chain[i] = i;
    const auto f = path_two_shortcut(g, chain);
    const std::size_t cap = len * static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(len))));
    CHECK(f.size() <= cap);
    const auto dist = testing_support::all_pairs(len + 1, testing_support::joined(g.edges(), f));
    for (Vertex i = 0; i <= len; ++i)
      for (Vertex j = i + 1; j <= len; ++j) CHECK(dist[i][j] <= 2);
  }
}

TEST_CASE("path_two_shortcut on a chain of closure vertices") {
  const auto g = build_graph(6, EdgeList{{0, 2}, {2, 4}, {4, 5}, {1, 3}});
  const auto f = path_two_shortcut(g, std::vector<Vertex>{0, 2, 4, 5});
  for (const Edge& e : f) {
    CHECK(g.reaches(e.from, e.to));
    CHECK_FALSE(g.has_edge(e.from, e.to));
  }
  CHECK_THROWS_AS(path_two_shortcut(g, std::vector<Vertex>{0, 1}), Error);
}
