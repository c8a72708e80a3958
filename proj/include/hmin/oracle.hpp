#ifndef HMIN_ORACLE_HPP
#define HMIN_ORACLE_HPP

// Brute-force reference implementations. Every counted claim the library
// produces is cross-checked against one of these exhaustive scans; they share
// no search logic with the production code paths.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hmin/graph.hpp"
#include "hmin/orientation.hpp"

namespace hmin::oracle {

// All balanced orientations by scanning every one of the 2^E direction masks.
inline std::vector<Orientation> balanced_orientations(
    const EmbeddedGraph& g, const std::vector<DirectedEdge>& pins = {}) {
  const int m = g.edge_count();
  std::vector<Orientation> out;
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::vector<uint8_t> bits(m);
    for (int e = 0; e < m; ++e) bits[e] = static_cast<uint8_t>((mask >> e) & 1);
    Orientation o(g, bits);
    bool pinned_ok = true;
    for (const DirectedEdge& p : pins)
      if (!(o.direction(p.edge) == p)) pinned_ok = false;
    if (pinned_ok && o.is_balanced()) out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end());  // normalize to bit-lexicographic order
  return out;
}

// Euler circuits counted modulo rotation: every circuit passes the fixed
// dart of edge 0 exactly once, so trails forced to start there enumerate one
// representative per rotation class.
inline long long euler_circuit_count(const Orientation& o) {
  const EmbeddedGraph& g = o.graph();
  const int m = g.edge_count();
  DirectedEdge first = o.direction(0);

  std::vector<char> used(m, 0);
  used[0] = 1;
  long long count = 0;
  auto rec = [&](auto&& self, int at, int remaining) -> void {
    if (remaining == 0) {
      if (at == first.tail) ++count;
      return;
    }
    for (int e = 0; e < m; ++e) {
      if (used[e]) continue;
      DirectedEdge d = o.direction(e);
      if (d.tail != at) continue;
      used[e] = 1;
      self(self, d.head, remaining - 1);
      used[e] = 0;
    }
  };
  rec(rec, first.head, m - 1);
  return count;
}

// Articulation vertices by deleting each vertex and testing connectivity of
// what remains.
inline std::set<VertexId> cut_vertices(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  std::set<VertexId> out;
  for (int removed = 0; removed < n; ++removed) {
    if (n <= 2) break;
    int start = (removed == 0) ? 1 : 0;
    std::vector<char> vis(n, 0);
    vis[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.rotation(v)) {
        int w = g.other_endpoint(e, v);
        if (w != removed && !vis[w]) {
          vis[w] = 1;
          stack.push_back(w);
        }
      }
    }
    int reached = 0;
    for (int v = 0; v < n; ++v) reached += (v != removed && vis[v]) ? 1 : 0;
    if (reached != n - 1) out.insert(g.vertex_name(removed));
  }
  return out;
}

// All proper 3-labelings by odometer scan over the unpinned vertices.
inline std::vector<std::vector<int>> proper_labelings(
    const EmbeddedGraph& g, const std::map<VertexId, int>& pins) {
  const int n = g.vertex_count();
  std::vector<int> base(n, 0);
  std::vector<int> free_vertices;
  for (int v = 0; v < n; ++v) {
    auto it = pins.find(g.vertex_name(v));
    if (it != pins.end())
      base[v] = it->second;
    else
      free_vertices.push_back(v);
  }

  std::vector<std::vector<int>> out;
  long total = 1;
  for (size_t i = 0; i < free_vertices.size(); ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    std::vector<int> label(base);
    long c = code;
    for (int v : free_vertices) {
      label[v] = static_cast<int>(c % 3) + 1;
      c /= 3;
    }
    bool ok = true;
    for (const Edge& e : g.edges())
      if (label[g.vertex_index(e.u)] == label[g.vertex_index(e.v)]) ok = false;
    if (ok) out.push_back(std::move(label));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Line-graph adjacency by checking every edge pair for a shared endpoint.
// Returns links as pairs of source edge ids, i < j.
inline std::vector<std::pair<int, int>> full_line_graph_links(const EmbeddedGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < g.edge_count(); ++i)
    for (int j = i + 1; j < g.edge_count(); ++j) {
      const Edge& a = g.edge(i);
      const Edge& b = g.edge(j);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
        out.push_back({i, j});
    }
  return out;
}

// Node-index 4-subsets inducing a complete subgraph.
template <typename LinkedFn>
inline std::vector<std::array<int, 4>> k4_subsets(int node_count, LinkedFn linked) {
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a < node_count; ++a)
    for (int b = a + 1; b < node_count; ++b)
      for (int c = b + 1; c < node_count; ++c)
        for (int d = c + 1; d < node_count; ++d)
          if (linked(a, b) && linked(a, c) && linked(a, d) && linked(b, c) &&
              linked(b, d) && linked(c, d))
            out.push_back({a, b, c, d});
  return out;
}

}  // namespace hmin::oracle

#endif  // HMIN_ORACLE_HPP
