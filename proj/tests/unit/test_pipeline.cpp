#include "doctest.h"

#include "shortcut_forge/generators.hpp"
#include "shortcut_forge/pipeline.hpp"

using namespace shortcut_forge;

namespace {
SolveParams params(std::size_t s, std::size_t d, std::size_t alpha_d, std::uint64_t seed = 0) {
  SolveParams p;
  p.s = s;
  p.d = d;
  p.alpha_d = alpha_d;
  p.seed = seed;
  return p;
}
}  // namespace

TEST_CASE("beta and fallback selection") {
  const auto p = params(32, 4, 2);
  CHECK(raw_beta(32, p) == doctest::Approx(1.0));
  CHECK(use_fallback(32, p));
  CHECK_FALSE(use_fallback(10000, params(10000, 2, 1)));
  CHECK(clamped_beta(10000, params(10000, 2, 1)) == doctest::Approx(50.0));
}

TEST_CASE("approx_shortcut_dag basics") {
  const auto path10 = gen_path(10);
  CHECK(approx_shortcut_dag(path10, params(10, 9, 1)).shortcut.edges.empty());

  const auto path32 = gen_path(32);
  const auto r = approx_shortcut_dag(path32, params(32, 4, 2));
  CHECK(verify_shortcut(path32, r.shortcut, 8).valid);
  CHECK(static_cast<double>(r.shortcut.size()) <= r.cap());

  try {
    approx_shortcut_dag(path32, params(31, 4, 2));
    FAIL("expected BadParams");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadParams);
  }
  CHECK_THROWS_AS(approx_shortcut_dag(build_graph(2, EdgeList{{0, 1}, {1, 0}}), params(2, 1, 1)), Error);
}

TEST_CASE("approx_shortcut_dag runs the thin settler on large-beta instances") {
  const auto g = gen_random_dag(100, 0.04, 3);
  const auto r = approx_shortcut_dag(g, params(100, 2, 1, 3));
  CHECK(r.regime == "small_log");
  CHECK(verify_shortcut(g, r.shortcut, 2).valid);
  CHECK(static_cast<double>(r.f1_size) <= r.f1_cap);
  CHECK(static_cast<double>(r.f2_size) <= r.f2_cap);
}

TEST_CASE("approx_shortcut_dag is deterministic") {
  const auto g = gen_random_dag(50, 0.08, 1);
  const auto a = approx_shortcut_dag(g, params(50, 2, 1, 5));
  const auto b = approx_shortcut_dag(g, params(50, 2, 1, 5));
  CHECK(a.shortcut.edges == b.shortcut.edges);
}

TEST_CASE("SCC wrapper") {
  SUBCASE("strongly connected graph needs only stars") {
    const auto g = build_graph(5, EdgeList{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const auto r = approx_shortcut(g, params(5, 1, 1));
    CHECK(r.components == 1);
    CHECK(diameter(g, r.shortcut.edges) <= 2);
    CHECK(r.lifted == 0);
  }
  SUBCASE("DAG input matches the DAG solver") {
    const auto g = gen_random_dag(20, 0.15, 2);
    const auto r = approx_shortcut(g, params(20, 2, 1, 2));
    CHECK(r.star_edges == 0);
    CHECK(r.shortcut.edges == approx_shortcut_dag(g, params(20, 2, 1, 2)).shortcut.edges);
  }
  SUBCASE("two bridged cycles at d = 1") {
    const auto g = build_graph(8, EdgeList{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {2, 6}});
    const auto r = approx_shortcut(g, params(8, 1, 1));
    CHECK(verify_shortcut(g, r.shortcut, 3).valid);
    CHECK(r.overhead() <= 16);
  }
}

TEST_CASE("approx_tc_spanner") {
  const auto g = gen_random_dag(12, 0.5, 4);
  const auto diam = diameter(g);
  const auto r = approx_tc_spanner(g, params(std::max<std::size_t>(12, transitive_reduction(g).num_edges()), diam, 1));
  CHECK(verify_tc_spanner(g, r.spanner, diam).valid);

  const auto path = gen_path(9);
  const auto pr = approx_tc_spanner(path, params(9, 2, 1));
  CHECK(verify_tc_spanner(path, pr.spanner, 2).valid);
  for (const Edge& e : path.edges()) CHECK(contains(pr.spanner, e));

  const auto dense = gen_random_dag(10, 0.9, 1);
  try {
    approx_tc_spanner(dense, params(10, 2, 1));
    if (transitive_reduction(dense).num_edges() > 10) FAIL("expected PromiseViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PromiseViolated);
  }
}

TEST_CASE("shortcut_from_tcspanner") {
  const auto path = gen_path(8);
  const auto f = shortcut_from_tcspanner(path, params(7, 2, 1));
  CHECK(verify_shortcut(path, f, 2).valid);
  CHECK(shortcut_from_tcspanner(path, params(7, 7, 1)).edges.empty());
  try {
    shortcut_from_tcspanner(path, params(6, 2, 1));
    FAIL("expected BadBudget");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadBudget);
  }
}
