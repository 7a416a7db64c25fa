#include "doctest.h"

#include "shortcut_forge/generators.hpp"
#include "shortcut_forge/thick.hpp"

using namespace shortcut_forge;

namespace {
const DiGraph diamond = build_graph(4, EdgeList{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("local_graph_size") {
  CHECK(local_graph_size(gen_path(3), 0, 2) == 3);
  CHECK(local_graph_size(build_graph(2, EdgeList{{0, 1}}), 0, 1) == 2);
  CHECK(local_graph_size(diamond, 0, 3) == 4);
  CHECK_THROWS_AS(local_graph_size(diamond, 1, 2), Error);
}

TEST_CASE("classify_pairs thresholds") {
  const auto g = gen_random_dag(10, 0.3, 2);
  const auto all = reachable_pairs(g);
  CHECK(classify_pairs(g, 1.0).thick == all);
  CHECK(classify_pairs(g, 11.0).thin == all);
  const auto d3 = classify_pairs(diamond, 3.0);
  CHECK(d3.thick == EdgeList{{0, 3}});
  CHECK(d3.thin == EdgeList{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("regime selection") {
  CHECK(select_regime(100, 1) == ThickRegime::Unit);
  CHECK(select_regime(100, 20) == ThickRegime::SmallLog);
  CHECK(select_regime(100, 27) == ThickRegime::General);
  CHECK(to_string(ThickRegime::UniversalFallback) == "universal_fallback");
}

TEST_CASE("unit regime connects every thick pair directly") {
  const auto g = gen_random_dag(12, 0.3, 4);
  ThickConfig cfg;
  cfg.beta = 3.0;
  const auto r = settle_thick(g, cfg);
  CHECK(r.regime == ThickRegime::Unit);
  for (const Edge& p : classify_pairs(g, 3.0).thick) {
    CHECK((g.has_edge(p.from, p.to) || contains(r.f1.edges, p)));
  }
}

TEST_CASE("general regime on a path settles all pairs") {
  const auto g = gen_path(16);
  ThickConfig cfg;
  cfg.beta = 1.0;
  cfg.d = 4;
  cfg.constants.small_regime_log = 0.5;
  const auto r = settle_thick(g, cfg);
  CHECK(r.regime == ThickRegime::General);
  CHECK(verify_shortcut(g, r.f1, 4).valid);
  CHECK(static_cast<double>(r.f1.size()) <= thick_size_cap(16, 1.0, 4));
}

TEST_CASE("no thick pairs leaves only chain shortcuts") {
  const auto g = gen_random_dag(40, 0.1, 1);
  ThickConfig cfg;
  cfg.beta = 41.0;
  cfg.d = 30;
  const auto r = settle_thick(g, cfg);
  CHECK(r.regime == ThickRegime::General);
  CHECK(r.f1.size() <= 40 * ceil_log2(40));
}

TEST_CASE("settle_thick is deterministic per seed") {
  const auto g = gen_random_dag(30, 0.12, 9);
  ThickConfig cfg;
  cfg.beta = 2.0;
  cfg.d = 3;
  cfg.seed = 17;
  CHECK(settle_thick(g, cfg).f1.edges == settle_thick(g, cfg).f1.edges);
}

TEST_CASE("general regime shortest paths meet each chain at most three times") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = gen_layered(60, 20, 0.3, seed);
    ThickConfig cfg;
    cfg.beta = 1.0;
    cfg.d = 30;
    cfg.seed = seed;
    const auto r = settle_thick(g, cfg);
    REQUIRE(r.regime == ThickRegime::General);
    std::vector<int> chain_of(60, -1);
    for (std::size_t c = 0; c < r.decomposition.chains.size(); ++c)
      for (Vertex v : r.decomposition.chains[c]) chain_of[v] = static_cast<int>(c);
    std::vector<int> antichain_of(60, -1);
    for (std::size_t c = 0; c < r.decomposition.antichains.size(); ++c)
      for (Vertex v : r.decomposition.antichains[c]) antichain_of[v] = static_cast<int>(c);

    // BFS with parent pointers over E plus the chain edges.
    const HopGraph hops(g, r.chain_edges);
    EdgeList all = set_union(g.edges(), r.chain_edges);
    for (Vertex u = 0; u < 60; ++u) {
      std::vector<std::size_t> dist;
      hops.bfs(u, kUnreachable, dist);
      for (Vertex v = 0; v < 60; ++v) {
        if (u == v || dist[v] == kUnreachable) continue;
        std::vector<Vertex> path{v};
        Vertex cur = v;
        while (cur != u) {
          for (const Edge& e : all) {
            if (e.to == cur && dist[e.from] != kUnreachable && dist[e.from] + 1 == dist[cur]) {
              cur = e.from;
              break;
            }
          }
          path.push_back(cur);
        }
        std::vector<int> per_chain(r.decomposition.chains.size(), 0);
        std::vector<int> per_antichain(r.decomposition.antichains.size(), 0);
        for (Vertex w : path) {
          if (chain_of[w] >= 0) ++per_chain[chain_of[w]];
          if (antichain_of[w] >= 0) ++per_antichain[antichain_of[w]];
        }
        for (int c : per_chain) CHECK(c <= 3);
        for (int c : per_antichain) CHECK(c <= 1);
      }
    }
  }
}

TEST_CASE("universal_shortcut") {
  const auto path = gen_path(64);
  const auto r = universal_shortcut(path, 8, 0);
  CHECK(verify_shortcut(path, r.f1, 8).valid);
  CHECK(static_cast<double>(r.f1.size()) <= thick_size_cap(64, 1.0, 8));

  const auto layered = gen_layered(100, 10, 0.2, 3);
  const auto lr = universal_shortcut(layered, 16, 1);
  CHECK(verify_shortcut(layered, lr.f1, 16).valid);
  CHECK(static_cast<double>(lr.f1.size()) <= thick_size_cap(100, 1.0, 16));

  CHECK_THROWS_AS(universal_shortcut(path, 1, 0), Error);
}
