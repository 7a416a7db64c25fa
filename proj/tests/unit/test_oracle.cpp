#include "doctest.h"

#include "shortcut_forge/generators.hpp"
#include "shortcut_forge/oracle.hpp"
#include "shortcut_forge/pipeline.hpp"

using namespace shortcut_forge;

TEST_CASE("min_shortcut_exact on paths") {
  const auto p4 = gen_path(4);
  CHECK(min_shortcut_exact(p4, 3).size == 0);
  const auto one = min_shortcut_exact(p4, 1);
  CHECK(one.size == 3);
  CHECK(one.edges == EdgeList{{0, 2}, {0, 3}, {1, 3}});
  const auto p5 = min_shortcut_exact(gen_path(5), 2);
  CHECK(verify_shortcut(gen_path(5), p5.edges, 2).valid);
  CHECK(p5.size == 2);
}

TEST_CASE("min_tc_spanner_exact") {
  const auto p4 = gen_path(4);
  CHECK(min_tc_spanner_exact(p4, 3).size == 3);
  CHECK(min_tc_spanner_exact(p4, 1).size == 6);
  const auto diamond = build_graph(4, EdgeList{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const auto r = min_tc_spanner_exact(diamond, 2);
  CHECK(r.size == 4);
  CHECK(verify_tc_spanner(diamond, r.edges, 2).valid);
}

TEST_CASE("exists_shortcut") {
  const auto p5 = gen_path(5);
  CHECK(exists_shortcut(p5, candidate_edges(p5).size(), 1));
  CHECK(exists_shortcut(p5, 0, 4));
  CHECK_FALSE(exists_shortcut(p5, 0, 2));
  CHECK_FALSE(exists_shortcut(p5, 1, 2));
  CHECK(exists_shortcut(p5, 2, 2));
}

TEST_CASE("oracle caps hard-fail") {
  CHECK_THROWS_AS(min_shortcut_exact(gen_path(8), 2), Error);
  OracleBudget tight;
  tight.max_candidates = 3;
  CHECK_THROWS_AS(min_shortcut_exact(gen_path(5), 2, tight), Error);
}

TEST_CASE("oracle monotone in d and zero at the diameter") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto g = gen_random_dag(6, 0.4, seed);
    if (candidate_edges(g).size() > 24) continue;
    std::size_t prev = static_cast<std::size_t>(-1);
    for (std::size_t d = 1; d <= 5; ++d) {
      const auto size = min_shortcut_exact(g, d).size;
      CHECK(size <= prev);
      prev = size;
    }
    CHECK(min_shortcut_exact(g, std::max<std::size_t>(diameter(g), 1)).size == 0);
  }
}

TEST_CASE("pipeline output is never smaller than the optimum") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto g = gen_random_dag(7, 0.35, seed);
    if (candidate_edges(g).size() > 24) continue;
    SolveParams p;
    p.s = 7;
    p.d = 2;
    p.alpha_d = 1;
    p.seed = seed;
    try {
      const auto r = approx_shortcut_dag(g, p);
      CHECK(r.shortcut.size() >= min_shortcut_exact(g, 2).size);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Infeasible);
      CHECK_FALSE(exists_shortcut(g, 7, 2));
    }
  }
}
