#ifndef HMIN_MINIMAL_HPP
#define HMIN_MINIMAL_HPP

#include "hmin/graph.hpp"

namespace hmin {

// The closed minimal graph: a triangle a-c-e subdivided at b, d, f, with the
// midpoints joined into a central triangle. 6 vertices, 9 edges, three corner
// faces (first subset), one central face (second subset), hexagonal outer
// boundary. All degrees are even, so the graph is Eulerian.
inline EmbeddedGraph closed_minimal() {
  return build_graph(
      {"a", "b", "c", "d", "e", "f"},
      {{"a", "b"},
       {"b", "c"},
       {"c", "d"},
       {"d", "e"},
       {"e", "f"},
       {"f", "a"},
       {"b", "d"},
       {"d", "f"},
       {"f", "b"}},
      {{"a", {"b", "f"}},
       {"b", {"c", "d", "f", "a"}},
       {"c", {"d", "b"}},
       {"d", {"e", "f", "b", "c"}},
       {"e", {"f", "d"}},
       {"f", {"d", "e", "a", "b"}}},
      {{"a", {0, 0}},
       {"b", {2, 0}},
       {"c", {4, 0}},
       {"d", {3, 2}},
       {"e", {2, 4}},
       {"f", {1, 2}}},
      {{"abf", FaceTag::First},
       {"bcd", FaceTag::First},
       {"def", FaceTag::First},
       {"bdf", FaceTag::Second}});
}

// The open minimal graph: three triangles in a strip. The middle face qmn
// meets the last faces qtp and mcd only at the cut points q and m; qm is the
// main edge and the remaining six are the attached edges. 7 vertices, 9 edges,
// three first-subset faces, no second-subset face.
inline EmbeddedGraph open_minimal() {
  return build_graph(
      {"q", "m", "n", "t", "p", "c", "d"},
      {{"q", "m"},
       {"q", "n"},
       {"m", "n"},
       {"q", "t"},
       {"q", "p"},
       {"t", "p"},
       {"m", "c"},
       {"m", "d"},
       {"c", "d"}},
      {{"q", {"m", "n", "t", "p"}},
       {"m", {"c", "n", "q", "d"}},
       {"n", {"q", "m"}},
       {"t", {"p", "q"}},
       {"p", {"q", "t"}},
       {"c", {"m", "d"}},
       {"d", {"c", "m"}}},
      {{"q", {0, 0}},
       {"m", {4, 0}},
       {"n", {2, 2}},
       {"t", {-3, 1}},
       {"p", {-3, -1}},
       {"c", {7, 1}},
       {"d", {7, -1}}},
      {{"mnq", FaceTag::First},
       {"pqt", FaceTag::First},
       {"cdm", FaceTag::First}});
}

}  // namespace hmin

#endif  // HMIN_MINIMAL_HPP
