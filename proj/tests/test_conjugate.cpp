#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "hmin/conjugate.hpp"
#include "hmin/minimal.hpp"
#include "hmin/oracle.hpp"

using namespace hmin;

TEST_CASE("conjugate of the open graph over its cut points") {
  EmbeddedGraph g = open_minimal();
  ConjugateGraph cg = restricted_line_graph(g, {"q", "m"});

  REQUIRE(cg.canonical);
  REQUIRE(cg.nodes.size() == 7);
  REQUIRE(cg.links.size() == 13);

  SECTION("canonical node order and roles") {
    std::vector<std::string> names;
    for (const ConjugateNode& n : cg.nodes) names.push_back(n.name);
    REQUIRE(names == std::vector<std::string>{"qm", "mn", "nq", "qt", "qp", "mc", "md"});
    REQUIRE(cg.nodes[0].role == NodeRole::Main);
    REQUIRE(cg.nodes[1].role == NodeRole::Middle);
    REQUIRE(cg.nodes[2].role == NodeRole::Middle);
    for (int k = 3; k < 7; ++k) REQUIRE(cg.nodes[k].role == NodeRole::Last);
  }

  SECTION("degrees: main 6, middle 4, last 3") {
    REQUIRE(cg.degree(0) == 6);
    REQUIRE(cg.degree(1) == 4);
    REQUIRE(cg.degree(2) == 4);
    for (int k = 3; k < 7; ++k) REQUIRE(cg.degree(k) == 3);
    REQUIRE(cg.degree_multiset() == std::vector<int>{6, 4, 4, 3, 3, 3, 3});
  }

  SECTION("links split 3 middle-middle, 2 last-last, 8 mixed") {
    int mid_mid = 0, last_last = 0, mixed = 0;
    auto is_middleish = [&](int k) {
      return cg.nodes[k].role == NodeRole::Main || cg.nodes[k].role == NodeRole::Middle;
    };
    for (const auto& [i, j] : cg.links) {
      if (is_middleish(i) && is_middleish(j)) ++mid_mid;
      else if (!is_middleish(i) && !is_middleish(j)) ++last_last;
      else ++mixed;
    }
    REQUIRE(mid_mid == 3);
    REQUIRE(last_last == 2);
    REQUIRE(mixed == 8);
  }

  SECTION("exactly two K4 subgraphs") {
    auto linked = [&](int a, int b) { return cg.linked(a, b); };
    auto k4s = oracle::k4_subsets(static_cast<int>(cg.nodes.size()), linked);
    REQUIRE(k4s.size() == 2);
    auto names_of = [&](const std::array<int, 4>& s) {
      std::set<std::string> names;
      for (int k : s) names.insert(cg.nodes[k].name);
      return names;
    };
    std::set<std::set<std::string>> both = {names_of(k4s[0]), names_of(k4s[1])};
    REQUIRE(both == std::set<std::set<std::string>>{{"qm", "nq", "qt", "qp"},
                                                    {"qm", "mn", "mc", "md"}});
  }
}

TEST_CASE("adjacency matrix of the canonical conjugate graph") {
  EmbeddedGraph g = open_minimal();
  AdjacencyMatrix m = adjacency_matrix(restricted_line_graph(g, {"q", "m"}));

  REQUIRE(m.ones() == 13);
  REQUIRE(m.upper[0] == std::array<int, 7>{0, 1, 1, 1, 1, 1, 1});
  REQUIRE(m.row_sums() == std::array<int, 7>{6, 3, 2, 1, 0, 1, 0});
  REQUIRE(m.to_text() ==
          "0111111\n"
          "0010011\n"
          "0001100\n"
          "0000100\n"
          "0000000\n"
          "0000001\n"
          "0000000\n");

  SECTION("symmetrized row sums recover the node degrees") {
    std::array<int, 7> degs{};
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        degs[i] += m.upper[i][j];
        degs[j] += m.upper[i][j];
      }
    std::sort(degs.begin(), degs.end(), std::greater<int>());
    REQUIRE(degs == std::array<int, 7>{6, 4, 4, 3, 3, 3, 3});
  }

  SECTION("byte-identical across rebuilds") {
    EmbeddedGraph g2 = open_minimal();
    REQUIRE(adjacency_matrix(restricted_line_graph(g2, {"q", "m"})).to_text() ==
            m.to_text());
  }

  SECTION("independent of the edge insertion order") {
    EmbeddedGraph permuted = build_graph(
        {"q", "m", "n", "t", "p", "c", "d"},
        {{"c", "d"}, {"m", "d"}, {"m", "c"}, {"t", "p"}, {"q", "p"},
         {"q", "t"}, {"m", "n"}, {"q", "n"}, {"q", "m"}},
        {{"q", {"m", "n", "t", "p"}},
         {"m", {"c", "n", "q", "d"}},
         {"n", {"q", "m"}},
         {"t", {"p", "q"}},
         {"p", {"q", "t"}},
         {"c", {"m", "d"}},
         {"d", {"c", "m"}}},
        {{"q", {0, 0}}, {"m", {4, 0}}, {"n", {2, 2}}, {"t", {-3, 1}},
         {"p", {-3, -1}}, {"c", {7, 1}}, {"d", {7, -1}}});
    ConjugateGraph cg = restricted_line_graph(permuted, {"q", "m"});
    REQUIRE(cg.canonical);
    REQUIRE(adjacency_matrix(cg).to_text() == m.to_text());
  }

  SECTION("rejected for non-canonical sources") {
    ConjugateGraph full = restricted_line_graph(g, {"q", "m", "n", "t", "p", "c", "d"});
    REQUIRE_THROWS_AS(adjacency_matrix(full), std::logic_error);
  }
}

TEST_CASE("restricted line graph generalities") {
  SECTION("anchoring every vertex gives the full line graph") {
    for (const EmbeddedGraph& g : {closed_minimal(), open_minimal()}) {
      std::set<VertexId> all(g.vertex_names().begin(), g.vertex_names().end());
      ConjugateGraph cg = restricted_line_graph(g, all);
      REQUIRE(cg.nodes.size() == static_cast<size_t>(g.edge_count()));
      std::vector<std::pair<int, int>> links;
      for (const auto& [i, j] : cg.links)
        links.push_back({cg.nodes[i].source_edge, cg.nodes[j].source_edge});
      std::sort(links.begin(), links.end());
      REQUIRE(links == oracle::full_line_graph_links(g));
    }
  }

  SECTION("single edge, both endpoints anchored") {
    EmbeddedGraph g = build_graph({"x", "y"}, {{"x", "y"}},
                                  {{"x", {"y"}}, {"y", {"x"}}},
                                  {{"x", {0, 0}}, {"y", {1, 0}}});
    ConjugateGraph cg = restricted_line_graph(g, {"x", "y"});
    REQUIRE(cg.nodes.size() == 1);
    REQUIRE(cg.links.empty());
  }

  SECTION("empty anchor set is rejected") {
    REQUIRE_THROWS_AS(restricted_line_graph(open_minimal(), {}), std::invalid_argument);
  }
}

TEST_CASE("chromatic number") {
  SECTION("triangle needs three colors") {
    EmbeddedGraph tri = fixtures::triangle();
    std::set<VertexId> all = {"x", "y", "z"};
    REQUIRE(chromatic_number(restricted_line_graph(tri, all)) == 3);
  }

  SECTION("single node needs one") {
    EmbeddedGraph g = build_graph({"x", "y"}, {{"x", "y"}},
                                  {{"x", {"y"}}, {"y", {"x"}}},
                                  {{"x", {0, 0}}, {"y", {1, 0}}});
    REQUIRE(chromatic_number(restricted_line_graph(g, {"x", "y"})) == 1);
  }

  SECTION("conjugate graph takes four, within the six-pair bound") {
    ConjugateGraph cg = restricted_line_graph(open_minimal(), {"q", "m"});
    int chi = chromatic_number(cg);
    REQUIRE(chi == 4);
    REQUIRE(chi <= 6);
  }
}
