#ifndef HMIN_TESTS_FIXTURES_HPP
#define HMIN_TESTS_FIXTURES_HPP

#include "hmin/graph.hpp"

namespace fixtures {

// one bounded face plus the outer face
inline hmin::EmbeddedGraph triangle() {
  return hmin::build_graph({"x", "y", "z"},
                           {{"x", "y"}, {"y", "z"}, {"z", "x"}},
                           {{"x", {"y", "z"}}, {"y", {"z", "x"}}, {"z", {"x", "y"}}},
                           {{"x", {0, 0}}, {"y", {1, 0}}, {"z", {0, 1}}});
}

inline hmin::EmbeddedGraph path_xyz() {
  return hmin::build_graph({"x", "y", "z"},
                           {{"x", "y"}, {"y", "z"}},
                           {{"x", {"y"}}, {"y", {"x", "z"}}, {"z", {"y"}}},
                           {{"x", {0, 0}}, {"y", {1, 0}}, {"z", {2, 0}}});
}

// two triangles sharing the vertex x
inline hmin::EmbeddedGraph figure_eight() {
  return hmin::build_graph(
      {"x", "y", "z", "u", "v"},
      {{"x", "y"}, {"y", "z"}, {"z", "x"}, {"x", "u"}, {"u", "v"}, {"v", "x"}},
      {{"x", {"v", "y", "z", "u"}},
       {"y", {"z", "x"}},
       {"z", {"x", "y"}},
       {"u", {"v", "x"}},
       {"v", {"x", "u"}}},
      {{"x", {0, 0}},
       {"y", {-2, 1}},
       {"z", {-2, -1}},
       {"u", {2, -1}},
       {"v", {2, 1}}});
}

}  // namespace fixtures

#endif  // HMIN_TESTS_FIXTURES_HPP
