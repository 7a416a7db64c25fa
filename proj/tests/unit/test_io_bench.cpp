#include "doctest.h"

#include <sstream>

#include "shortcut_forge/bench.hpp"
#include "shortcut_forge/generators.hpp"
#include "shortcut_forge/io.hpp"

using namespace shortcut_forge;

TEST_CASE("edge-list round trip") {
  const auto g = gen_random_dag(12, 0.3, 2);
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream in("# comment\n" + out.str());
  const auto back = read_graph(in);
  CHECK(back.num_vertices() == 12);
  CHECK(back.edges() == g.edges());
}

TEST_CASE("edge-list parse errors") {
  std::istringstream no_newline("2 1\n0 1");
  CHECK_THROWS_AS(read_graph(no_newline), Error);
  std::istringstream wrong_count("3 2\n0 1\n");
  CHECK_THROWS_AS(read_graph(wrong_count), Error);
  std::istringstream garbage("3 1\n0 x\n");
  CHECK_THROWS_AS(read_graph(garbage), Error);
  std::istringstream range("3 1\n0 3\n");
  CHECK_THROWS_AS(read_graph(range), Error);
  std::istringstream empty_edges("");
  CHECK(read_edges(empty_edges).empty());
}

TEST_CASE("bench suite expansion and CSV") {
  const auto cells = expand_suite(R"({"kinds":["path"],"n":[10],"d":[2,"diam"],"alpha_d":[1],"seeds":[0]})");
  REQUIRE(cells.size() == 2);
  CHECK(csv_header() == "graph,n,m,s,d,alpha_d,size,cap,ok,regime,retries,ms,seed");
  const auto r = run_cell(cells[1]);
  CHECK(r.ok);
  CHECK(r.d == 9);
  CHECK(r.size == 0);
  const auto row = to_csv(r, false);
  CHECK(row.find(",0.000,0") != std::string::npos);
  CHECK_THROWS_AS(expand_suite("{not json"), Error);
}

TEST_CASE("bench cap matches the size formula") {
  const auto cells = expand_suite(R"({"kinds":["random"],"n":[100],"edge_factor":[4],"d":[2],"alpha_d":[1],"seeds":[1]})");
  const auto r = run_cell(cells[0]);
  const SolveParams p{100, 2, 1, 1, 0, {}};
  const double beta = clamped_beta(100, p);
  CHECK(r.cap == doctest::Approx(thick_size_cap(100, beta, 2) + thin_size_cap(100, beta, p)));
  CHECK(r.ok == verify_shortcut(bench_graph(cells[0]), r.report.shortcut, 2).valid);
}
