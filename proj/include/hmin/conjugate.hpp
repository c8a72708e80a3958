#ifndef HMIN_CONJUGATE_HPP
#define HMIN_CONJUGATE_HPP

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmin/graph.hpp"
#include "hmin/open_variants.hpp"

namespace hmin {

enum class NodeRole { Main, Middle, Last, Plain };

inline const char* to_string(NodeRole r) {
  switch (r) {
    case NodeRole::Main: return "MAIN";
    case NodeRole::Middle: return "MIDDLE";
    case NodeRole::Last: return "LAST";
    case NodeRole::Plain: return "PLAIN";
  }
  return "?";
}

// Adjacency graph of a designated edge subset of a source graph: one node per
// edge, one link per shared endpoint.
struct ConjugateNode {
  int source_edge;
  std::string name;
  VertexId u, v;
  NodeRole role;
};

struct ConjugateGraph {
  std::vector<ConjugateNode> nodes;
  std::vector<std::pair<int, int>> links;  // node index pairs, i < j, sorted
  bool canonical = false;  // true when nodes follow the fixed open-minimal order

  int degree(int node) const {
    int d = 0;
    for (const auto& [a, b] : links) d += (a == node || b == node) ? 1 : 0;
    return d;
  }

  bool linked(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(links.begin(), links.end(), std::make_pair(a, b));
  }

  std::vector<int> degree_multiset() const {
    std::vector<int> degs;
    for (size_t i = 0; i < nodes.size(); ++i) degs.push_back(degree(static_cast<int>(i)));
    std::sort(degs.begin(), degs.end(), std::greater<int>());
    return degs;
  }
};

// Nodes are the edges of g incident to anchor_vertices. For the open minimal
// graph anchored at its cut points the node order and names are pinned to
// [qm, mn, nq, qt, qp, mc, md] so downstream matrices are reproducible;
// otherwise nodes follow source edge ids.
inline ConjugateGraph restricted_line_graph(const EmbeddedGraph& g,
                                            const std::set<VertexId>& anchor_vertices) {
  if (anchor_vertices.empty())
    throw std::invalid_argument("empty anchor set");
  for (const VertexId& a : anchor_vertices) g.vertex_index(a);  // must exist

  ConjugateGraph cg;

  bool canonical = false;
  if (anchor_vertices == std::set<VertexId>{"q", "m"}) {
    try {
      std::array<int, 7> ids = detail::cut_incident_edge_ids(g);
      std::set<int> designated;
      for (const Edge& e : g.edges())
        if (anchor_vertices.count(e.u) || anchor_vertices.count(e.v))
          designated.insert(e.id);
      canonical = designated == std::set<int>(ids.begin(), ids.end());
      if (canonical) {
        static const std::array<NodeRole, 7> roles = {
            NodeRole::Main,   NodeRole::Middle, NodeRole::Middle, NodeRole::Last,
            NodeRole::Last,   NodeRole::Last,   NodeRole::Last};
        for (size_t k = 0; k < ids.size(); ++k) {
          const Edge& e = g.edge(ids[k]);
          cg.nodes.push_back(
              ConjugateNode{e.id, cut_incident_edge_names()[k], e.u, e.v, roles[k]});
        }
      }
    } catch (const std::invalid_argument&) {
      canonical = false;
    }
  }

  if (!canonical) {
    for (const Edge& e : g.edges()) {
      if (anchor_vertices.count(e.u) || anchor_vertices.count(e.v)) {
        NodeRole role = (anchor_vertices.count(e.u) && anchor_vertices.count(e.v) &&
                         anchor_vertices.size() == 2)
                            ? NodeRole::Main
                            : NodeRole::Plain;
        cg.nodes.push_back(ConjugateNode{e.id, e.u + e.v, e.u, e.v, role});
      }
    }
  }
  cg.canonical = canonical;

  for (size_t i = 0; i < cg.nodes.size(); ++i)
    for (size_t j = i + 1; j < cg.nodes.size(); ++j) {
      const ConjugateNode& a = cg.nodes[i];
      const ConjugateNode& b = cg.nodes[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
        cg.links.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  std::sort(cg.links.begin(), cg.links.end());
  return cg;
}

// Order-7 0/1 matrix in the canonical node order, strictly upper triangular.
struct AdjacencyMatrix {
  std::array<std::array<int, 7>, 7> upper{};

  int ones() const {
    int c = 0;
    for (const auto& row : upper)
      for (int x : row) c += x;
    return c;
  }

  std::array<int, 7> row_sums() const {
    std::array<int, 7> sums{};
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) sums[i] += upper[i][j];
    return sums;
  }

  // One row per line, no separators.
  std::string to_text() const {
    std::string s;
    for (const auto& row : upper) {
      for (int x : row) s += static_cast<char>('0' + x);
      s += '\n';
    }
    return s;
  }
};

inline AdjacencyMatrix adjacency_matrix(const ConjugateGraph& cg) {
  if (!cg.canonical || cg.nodes.size() != 7)
    throw std::logic_error("adjacency matrix requires the canonical conjugate graph");
  AdjacencyMatrix m;
  for (const auto& [i, j] : cg.links) m.upper[i][j] = 1;
  return m;
}

// Exact chromatic number by backtracking; node i may only use a color at most
// one above the maximum color used so far (symmetry pruning).
inline int chromatic_number(const ConjugateGraph& cg) {
  const int n = static_cast<int>(cg.nodes.size());
  if (n == 0) return 0;
  std::vector<int> color(n, 0);

  auto colorable = [&](auto&& self, int node, int k, int used) -> bool {
    if (node == n) return true;
    int limit = std::min(k, used + 1);
    for (int c = 1; c <= limit; ++c) {
      bool ok = true;
      for (int prev = 0; prev < node && ok; ++prev)
        if (color[prev] == c && cg.linked(prev, node)) ok = false;
      if (!ok) continue;
      color[node] = c;
      if (self(self, node + 1, k, std::max(used, c))) return true;
      color[node] = 0;
    }
    return false;
  };

  for (int k = 1; k <= n; ++k)
    if (colorable(colorable, 0, k, 0)) return k;
  return n;
}

}  // namespace hmin

#endif  // HMIN_CONJUGATE_HPP
