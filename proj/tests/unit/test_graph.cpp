#include <filesystem>
#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "essc/edge_list.hpp"
#include "essc/graph.hpp"
#include "unit/fixtures.hpp"

using namespace essc;
using essc::test::graph;

TEST_CASE("parse: simple path") {
  const auto g = parse_edge_list_string("0 1\n1 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.total_edge_count() == 2);
  CHECK(std::vector<std::uint64_t>(g.degrees().begin(), g.degrees().end()) ==
        std::vector<std::uint64_t>{1, 2, 1});
}

TEST_CASE("parse: a self-loop adds 2 to the degree") {
  const auto g = parse_edge_list_string("a a\n");
  CHECK(g.vertex_count() == 1);
  CHECK(g.total_edge_count() == 1);
  CHECK(g.degree(0) == 2);
}

TEST_CASE("parse: repeated lines accumulate") {
  const auto g = parse_edge_list_string("0 1\n0 1\n");
  CHECK(g.degree(0) == 2);
  CHECK(g.total_edge_count() == 2);
  CHECK(g.neighbors(0).size() == 1);
  CHECK(g.neighbors(0)[0].multiplicity == 2);
}

TEST_CASE("parse: labels are dense ids in first-seen order") {
  const auto g = parse_edge_list_string("# header\n\nzeta alpha 3\nalpha 17\n");
  REQUIRE(g.vertex_count() == 3);
  CHECK(g.label(0) == "zeta");
  CHECK(g.label(1) == "alpha");
  CHECK(g.label(2) == "17");
  CHECK(g.degree(1) == 4);
  CHECK(g.total_edge_count() == 4);
}

TEST_CASE("parse: malformed lines report their line number") {
  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list_string(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("0 1\n0\n") == 2);
  CHECK(line_of("0 1 2 3\n") == 1);
  CHECK(line_of("0 1\n# c\n1 2 x\n") == 3);
  CHECK(line_of("0 1 0\n") == 1);
  CHECK(line_of("0 1 -1\n") == 1);
}

TEST_CASE("boundary counts") {
  const auto tri = essc::test::triangle();
  CHECK(tri.boundary_count(0, VertexSet({1, 2})) == 2);
  CHECK(tri.boundary_count(0, VertexSet()) == 0);

  const auto multi = graph(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(multi.boundary_count(0, VertexSet({1})) == 3);

  const auto loop = graph(2, {{0, 0}, {0, 1}});
  CHECK(loop.boundary_count(0, VertexSet({0})) == 2);
  CHECK(loop.boundary_count(0, VertexSet({1})) == 1);
  CHECK(loop.boundary_count(1, VertexSet({0})) == 1);

  CHECK_THROWS_AS(tri.boundary_count(3, VertexSet()), std::out_of_range);
  CHECK_THROWS_AS(tri.boundary_count(0, VertexSet({5})), std::out_of_range);
}

TEST_CASE("volume") {
  CHECK(essc::test::triangle().volume(VertexSet::range(3)) == 6);
  CHECK(essc::test::triangle().volume(VertexSet()) == 0);
  CHECK(essc::test::path3().volume(VertexSet({1})) == 2);
}

TEST_CASE("property: degree and boundary identities on random multigraphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const auto g = essc::test::random_multigraph(n, rng() % 80, rng);
    const auto all = VertexSet::range(n);

    std::uint64_t sum = 0;
    for (auto d : g.degrees()) sum += d;
    CHECK(sum == 2 * g.total_edge_count());
    CHECK(g.volume(all) == 2 * g.total_edge_count());

    const auto b = essc::test::random_subset(n, 0.5, rng);
    const auto counts = g.boundary_counts(b);
    for (vertex_id u = 0; u < n; ++u) {
      CHECK(g.boundary_count(u, all) == g.degree(u));
      // Brute force over the edge classes.
      std::uint64_t expected = 0;
      for (const auto& e : g.edge_classes()) {
        if (e.u == u && e.v == u) {
          if (b.contains(u)) expected += 2 * e.multiplicity;
        } else if (e.u == u && b.contains(e.v)) {
          expected += e.multiplicity;
        } else if (e.v == u && b.contains(e.u)) {
          expected += e.multiplicity;
        }
      }
      CHECK(g.boundary_count(u, b) == expected);
      CHECK(counts[u] == expected);
    }
  }
}

TEST_CASE("serialization round trip preserves the graph") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 20;
    auto g = essc::test::random_multigraph(n, 1 + rng() % 50, rng);
    std::ostringstream out;
    write_edge_list(out, g);
    const auto back = parse_edge_list_string(out.str());
    // Isolated vertices do not survive an edge list, so compare the edges.
    CHECK(back.total_edge_count() == g.total_edge_count());
    for (vertex_id v = 0; v < back.vertex_count(); ++v) {
      CHECK(back.degree(v) == g.degree(static_cast<vertex_id>(std::stoul(back.label(v)))));
    }
  }
}

TEST_CASE("file round trip keeps labels") {
  const auto path = std::filesystem::temp_directory_path() / "essc_graph_roundtrip.txt";
  const auto g = parse_edge_list_string("x y 2\ny z\nz z\n");
  write_edge_list_file(path.string(), g);
  const auto back = read_edge_list_file(path.string());
  CHECK(back == g);
  CHECK(back.label(2) == "z");
  std::filesystem::remove(path);
  CHECK_THROWS(read_edge_list_file(path.string()));
}

TEST_CASE("simplified drops loops and collapses multi-edges") {
  const auto g = graph(3, {{0, 0}, {0, 1}, {0, 1}, {1, 2}});
  const auto s = g.simplified();
  CHECK(s.total_edge_count() == 2);
  CHECK(s.degree(0) == 1);
  CHECK(s.degree(1) == 2);
}
