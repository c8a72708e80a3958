#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "hmin/graph.hpp"
#include "hmin/minimal.hpp"
#include "hmin/oracle.hpp"

using namespace hmin;

TEST_CASE("triangle embeds with two faces") {
  EmbeddedGraph g = fixtures::triangle();
  REQUIRE(g.vertex_count() == 3);
  REQUIRE(g.edge_count() == 3);
  REQUIRE(g.face_count() == 2);

  int outer = 0, bounded = 0;
  for (const Face& f : g.faces()) {
    REQUIRE(f.boundary.size() == 3);
    (f.tag == FaceTag::Outer ? outer : bounded) += 1;
  }
  REQUIRE(outer == 1);
  REQUIRE(bounded == 1);
}

TEST_CASE("path embeds with a single face") {
  EmbeddedGraph g = fixtures::path_xyz();
  REQUIRE(g.face_count() == 1);
  REQUIRE(g.faces()[0].boundary.size() == 4);  // both sides of both edges
  REQUIRE(g.faces()[0].tag == FaceTag::Outer);
}

TEST_CASE("every built graph satisfies the Euler formula") {
  for (const EmbeddedGraph& g : {fixtures::triangle(), fixtures::path_xyz(),
                                 fixtures::figure_eight(), closed_minimal(),
                                 open_minimal()}) {
    REQUIRE(g.vertex_count() - g.edge_count() + g.face_count() == 2);

    // each edge is used exactly twice across face boundaries
    std::vector<int> uses(g.edge_count(), 0);
    for (const Face& f : g.faces())
      for (const DirectedEdge& d : f.boundary) ++uses[d.edge];
    for (int u : uses) REQUIRE(u == 2);

    int outers = 0;
    for (const Face& f : g.faces()) outers += f.tag == FaceTag::Outer ? 1 : 0;
    REQUIRE(outers == 1);
  }
}

TEST_CASE("face tracing is deterministic") {
  EmbeddedGraph g = closed_minimal();
  std::vector<Face> a = trace_faces(g), b = trace_faces(g);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].tag == b[i].tag);
    REQUIRE(a[i].boundary.size() == b[i].boundary.size());
    for (size_t k = 0; k < a[i].boundary.size(); ++k)
      REQUIRE(a[i].boundary[k] == b[i].boundary[k]);
  }
}

TEST_CASE("vertex degree sums to twice the edge count") {
  for (const EmbeddedGraph& g : {closed_minimal(), open_minimal()}) {
    int total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
    REQUIRE(total == 2 * g.edge_count());
  }
}

TEST_CASE("build rejects malformed input") {
  SECTION("duplicate vertex") {
    REQUIRE_THROWS_AS(build_graph({"x", "x"}, {}, {{"x", {}}}, {{"x", {0, 0}}}),
                      std::invalid_argument);
  }
  SECTION("loop edge") {
    REQUIRE_THROWS_AS(build_graph({"x", "y"}, {{"x", "x"}},
                                  {{"x", {"x"}}, {"y", {}}},
                                  {{"x", {0, 0}}, {"y", {1, 0}}}),
                      std::invalid_argument);
  }
  SECTION("rotation mentions unknown edge") {
    REQUIRE_THROWS_AS(build_graph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}},
                                  {{"x", {"y", "z"}}, {"y", {"x", "z"}}, {"z", {"y"}}},
                                  {{"x", {0, 0}}, {"y", {1, 0}}, {"z", {2, 0}}}),
                      std::invalid_argument);
  }
  SECTION("rotation omits an incident edge") {
    REQUIRE_THROWS_AS(build_graph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}},
                                  {{"x", {"y"}}, {"y", {"x"}}, {"z", {"y"}}},
                                  {{"x", {0, 0}}, {"y", {1, 0}}, {"z", {2, 0}}}),
                      std::invalid_argument);
  }
  SECTION("disconnected graph") {
    REQUIRE_THROWS_AS(build_graph({"x", "y", "z", "w"}, {{"x", "y"}, {"z", "w"}},
                                  {{"x", {"y"}}, {"y", {"x"}}, {"z", {"w"}}, {"w", {"z"}}},
                                  {{"x", {0, 0}}, {"y", {1, 0}}, {"z", {0, 1}}, {"w", {1, 1}}}),
                      std::invalid_argument);
  }
  SECTION("bad rotation breaks the Euler formula") {
    // swapping two entries at b merges faces; V - E + F goes to 0
    REQUIRE_THROWS_AS(
        build_graph({"a", "b", "c", "d", "e", "f"},
                    {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"},
                     {"f", "a"}, {"b", "d"}, {"d", "f"}, {"f", "b"}},
                    {{"a", {"b", "f"}},
                     {"b", {"d", "c", "f", "a"}},  // c and d swapped
                     {"c", {"d", "b"}},
                     {"d", {"e", "f", "b", "c"}},
                     {"e", {"f", "d"}},
                     {"f", {"d", "e", "a", "b"}}},
                    {{"a", {0, 0}}, {"b", {2, 0}}, {"c", {4, 0}},
                     {"d", {3, 2}}, {"e", {2, 4}}, {"f", {1, 2}}}),
        std::invalid_argument);
  }
  SECTION("tag names a missing face") {
    REQUIRE_THROWS_AS(build_graph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"z", "x"}},
                                  {{"x", {"y", "z"}}, {"y", {"z", "x"}}, {"z", {"x", "y"}}},
                                  {{"x", {0, 0}}, {"y", {1, 0}}, {"z", {0, 1}}},
                                  {{"abc", FaceTag::Second}}),
                      std::invalid_argument);
  }
}

TEST_CASE("cut vertices") {
  SECTION("path has its middle vertex") {
    REQUIRE(cut_vertices(fixtures::path_xyz()) == std::set<VertexId>{"y"});
  }
  SECTION("triangle has none") {
    REQUIRE(cut_vertices(fixtures::triangle()).empty());
  }
  SECTION("figure eight has the shared vertex") {
    REQUIRE(cut_vertices(fixtures::figure_eight()) == std::set<VertexId>{"x"});
  }
  SECTION("agrees with the vertex-removal oracle on the whole corpus") {
    for (const EmbeddedGraph& g : {fixtures::triangle(), fixtures::path_xyz(),
                                   fixtures::figure_eight(), closed_minimal(),
                                   open_minimal()}) {
      REQUIRE(cut_vertices(g) == oracle::cut_vertices(g));
    }
  }
}
