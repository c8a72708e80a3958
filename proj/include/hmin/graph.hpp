#ifndef HMIN_GRAPH_HPP
#define HMIN_GRAPH_HPP

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hmin {

using VertexId = std::string;

enum class FaceTag { First, Second, Outer };

inline const char* to_string(FaceTag t) {
  switch (t) {
    case FaceTag::First: return "FIRST";
    case FaceTag::Second: return "SECOND";
    case FaceTag::Outer: return "OUTER";
  }
  return "?";
}

// Undirected edge; (u,v) as listed defines the forward traversal direction.
struct Edge {
  int id;
  VertexId u;
  VertexId v;
};

// One traversal of an edge, tail -> head (vertex indices).
struct DirectedEdge {
  int edge;
  int tail;
  int head;

  friend bool operator==(const DirectedEdge& a, const DirectedEdge& b) {
    return a.edge == b.edge && a.tail == b.tail && a.head == b.head;
  }
};

struct Face {
  std::vector<DirectedEdge> boundary;  // closed walk
  FaceTag tag = FaceTag::First;
  long long doubled_area = 0;  // shoelace sum over the walk; outer face is the positive one
};

// Simple connected graph with a rotation system (counterclockwise edge order
// per vertex) and straight-line coordinates. Faces are traced from the
// rotation system at construction time; coordinates are used only to orient
// bypass signs and to pick the outer face.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const std::vector<VertexId>& vertex_names() const { return names_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  const VertexId& vertex_name(int v) const { return names_.at(v); }

  int vertex_index(const VertexId& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("unknown vertex: " + name);
    return it->second;
  }

  bool has_vertex(const VertexId& name) const { return index_.count(name) != 0; }

  const Edge& edge(int id) const { return edges_.at(id); }

  // Rotation at v as edge ids, counterclockwise.
  const std::vector<int>& rotation(int v) const { return rotation_.at(v); }

  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }

  const std::array<long long, 2>& coord(int v) const { return coords_.at(v); }

  int other_endpoint(int edge_id, int v) const {
    const Edge& e = edges_[edge_id];
    int ui = vertex_index(e.u), vi = vertex_index(e.v);
    if (v == ui) return vi;
    if (v == vi) return ui;
    throw std::invalid_argument("vertex not on edge");
  }

  // -1 when no such edge.
  int edge_between(const VertexId& a, const VertexId& b) const {
    for (const Edge& e : edges_)
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return e.id;
    return -1;
  }

  DirectedEdge dart(int edge_id, bool reversed) const {
    const Edge& e = edges_[edge_id];
    int ui = vertex_index(e.u), vi = vertex_index(e.v);
    return reversed ? DirectedEdge{edge_id, vi, ui} : DirectedEdge{edge_id, ui, vi};
  }

  DirectedEdge directed(const VertexId& tail, const VertexId& head) const {
    int id = edge_between(tail, head);
    if (id < 0) throw std::invalid_argument("no edge " + tail + "-" + head);
    return DirectedEdge{id, vertex_index(tail), vertex_index(head)};
  }

  std::string dart_name(const DirectedEdge& d) const {
    return names_[d.tail] + ">" + names_[d.head];
  }

  // Sorted vertex names of a face boundary, e.g. "bdf". Used as a stable key.
  std::string face_key(const Face& f) const {
    std::set<std::string> s;
    for (const DirectedEdge& d : f.boundary) s.insert(names_[d.tail]);
    std::string key;
    for (const auto& n : s) key += n;
    return key;
  }

  friend EmbeddedGraph build_graph(std::vector<VertexId>,
                                   std::vector<std::pair<VertexId, VertexId>>,
                                   std::map<VertexId, std::vector<VertexId>>,
                                   std::map<VertexId, std::array<long long, 2>>,
                                   std::map<std::string, FaceTag>);

 private:
  std::vector<VertexId> names_;
  std::map<VertexId, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rotation_;  // per vertex, CCW edge ids
  std::vector<std::array<long long, 2>> coords_;
  std::vector<Face> faces_;
};

namespace detail {

// Walks every directed edge side once. Successor rule: after arriving at v
// along edge e, leave along the next edge after e in the CCW rotation at v.
// Orbits are started in increasing dart-id order (dart id = 2*edge + side),
// which fixes the face order and each boundary's starting dart.
inline std::vector<Face> trace_faces_impl(const EmbeddedGraph& g) {
  const int m = g.edge_count();
  std::vector<char> used(2 * m, 0);
  std::vector<Face> out;
  for (int dart_id = 0; dart_id < 2 * m; ++dart_id) {
    if (used[dart_id]) continue;
    Face f;
    DirectedEdge d = g.dart(dart_id / 2, dart_id % 2 != 0);
    while (true) {
      int side = (d.tail == g.vertex_index(g.edge(d.edge).u)) ? 0 : 1;
      int id = 2 * d.edge + side;
      if (used[id]) break;
      used[id] = 1;
      f.boundary.push_back(d);
      const std::vector<int>& rot = g.rotation(d.head);
      auto pos = std::find(rot.begin(), rot.end(), d.edge) - rot.begin();
      int next_edge = rot[(pos + 1) % rot.size()];
      d = DirectedEdge{next_edge, d.head, g.other_endpoint(next_edge, d.head)};
    }
    for (const DirectedEdge& d2 : f.boundary) {
      const auto& a = g.coord(d2.tail);
      const auto& b = g.coord(d2.head);
      f.doubled_area += a[0] * b[1] - b[0] * a[1];
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace detail

// Re-traces the faces of a built graph. Deterministic: two calls yield the
// same sequence.
inline std::vector<Face> trace_faces(const EmbeddedGraph& g) {
  std::vector<Face> faces = detail::trace_faces_impl(g);
  for (size_t i = 0; i < faces.size(); ++i) faces[i].tag = g.faces()[i].tag;
  return faces;
}

// Validates the inputs, traces the faces and tags them. `rotation` lists the
// neighbors of each vertex in counterclockwise drawing order. `bounded_tags`
// maps a face key (sorted vertex names, e.g. "bdf") to FIRST or SECOND;
// untagged bounded faces default to FIRST and the outer face is the unique
// boundary walk of maximal signed area.
inline EmbeddedGraph build_graph(
    std::vector<VertexId> vertices,
    std::vector<std::pair<VertexId, VertexId>> edges,
    std::map<VertexId, std::vector<VertexId>> rotation,
    std::map<VertexId, std::array<long long, 2>> coords,
    std::map<std::string, FaceTag> bounded_tags = {}) {
  EmbeddedGraph g;
  g.names_ = std::move(vertices);
  for (size_t i = 0; i < g.names_.size(); ++i) {
    if (!g.index_.emplace(g.names_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate vertex: " + g.names_[i]);
  }
  if (g.names_.empty()) throw std::invalid_argument("graph has no vertices");

  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    int ui = g.vertex_index(u), vi = g.vertex_index(v);
    if (ui == vi) throw std::invalid_argument("loop edge at " + u);
    auto key = std::minmax(ui, vi);
    if (!seen.insert({key.first, key.second}).second)
      throw std::invalid_argument("duplicate edge " + u + "-" + v);
    g.edges_.push_back(Edge{static_cast<int>(g.edges_.size()), u, v});
  }

  // Rotation must list exactly the incident edges of each vertex, each once.
  g.rotation_.resize(g.names_.size());
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto it = rotation.find(g.names_[v]);
    if (it == rotation.end())
      throw std::invalid_argument("missing rotation for " + g.names_[v]);
    std::set<int> listed;
    for (const VertexId& nbr : it->second) {
      int id = g.edge_between(g.names_[v], nbr);
      if (id < 0)
        throw std::invalid_argument("rotation at " + g.names_[v] +
                                    " mentions unknown edge to " + nbr);
      if (!listed.insert(id).second)
        throw std::invalid_argument("rotation at " + g.names_[v] +
                                    " repeats edge to " + nbr);
      g.rotation_[v].push_back(id);
    }
    int incident = 0;
    for (const Edge& e : g.edges_)
      if (e.u == g.names_[v] || e.v == g.names_[v]) ++incident;
    if (static_cast<int>(listed.size()) != incident)
      throw std::invalid_argument("rotation at " + g.names_[v] +
                                  " does not list every incident edge");
  }

  g.coords_.resize(g.names_.size());
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto it = coords.find(g.names_[v]);
    if (it == coords.end())
      throw std::invalid_argument("missing coordinates for " + g.names_[v]);
    g.coords_[v] = it->second;
  }

  // Connectivity (face tracing and the Euler check assume it).
  {
    std::vector<char> vis(g.names_.size(), 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.rotation_[v]) {
        int w = g.other_endpoint(e, v);
        if (!vis[w]) {
          vis[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (std::count(vis.begin(), vis.end(), 1) != g.vertex_count())
      throw std::invalid_argument("graph is not connected");
  }

  g.faces_ = detail::trace_faces_impl(g);

  int v_cnt = g.vertex_count(), e_cnt = g.edge_count(),
      f_cnt = static_cast<int>(g.faces_.size());
  if (v_cnt - e_cnt + f_cnt != 2)
    throw std::invalid_argument(
        "Euler formula violated (V-E+F = " +
        std::to_string(v_cnt - e_cnt + f_cnt) + "): bad rotation system");

  // Outer face: the unique maximal-area walk.
  size_t outer = 0;
  for (size_t i = 1; i < g.faces_.size(); ++i)
    if (g.faces_[i].doubled_area > g.faces_[outer].doubled_area) outer = i;
  for (size_t i = 0; i < g.faces_.size(); ++i)
    if (i != outer && g.faces_[i].doubled_area == g.faces_[outer].doubled_area)
      throw std::invalid_argument("ambiguous outer face: degenerate coordinates");
  g.faces_[outer].tag = FaceTag::Outer;

  std::map<std::string, FaceTag> pending = std::move(bounded_tags);
  for (size_t i = 0; i < g.faces_.size(); ++i) {
    if (i == outer) continue;
    auto it = pending.find(g.face_key(g.faces_[i]));
    if (it != pending.end()) {
      g.faces_[i].tag = it->second;
      pending.erase(it);
    } else {
      g.faces_[i].tag = FaceTag::First;
    }
  }
  if (!pending.empty())
    throw std::invalid_argument("face tag for missing face: " + pending.begin()->first);

  return g;
}

// Articulation vertices via one DFS (Hopcroft-Tarjan low-link).
inline std::set<VertexId> cut_vertices(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> cut(n, 0);
  int timer = 0;

  auto dfs = [&](auto&& self, int v, int parent) -> void {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int e : g.rotation(v)) {
      int w = g.other_endpoint(e, v);
      if (disc[w] == -1) {
        ++children;
        self(self, w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent != -1 && low[w] >= disc[v]) cut[v] = 1;
      } else if (w != parent) {
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent == -1 && children > 1) cut[v] = 1;
  };
  dfs(dfs, 0, -1);

  std::set<VertexId> out;
  for (int v = 0; v < n; ++v)
    if (cut[v]) out.insert(g.vertex_name(v));
  return out;
}

}  // namespace hmin

#endif  // HMIN_GRAPH_HPP
