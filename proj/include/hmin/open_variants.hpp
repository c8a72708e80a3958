#ifndef HMIN_OPEN_VARIANTS_HPP
#define HMIN_OPEN_VARIANTS_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmin/graph.hpp"
#include "hmin/orientation.hpp"

namespace hmin {

// The seven cut-point-incident edges of the open minimal graph in canonical
// order: main edge, the two remaining middle-face edges, then the last-face
// edges. This order also fixes the conjugate graph's vertex order.
inline const std::array<const char*, 7>& cut_incident_edge_names() {
  static const std::array<const char*, 7> names = {"qm", "mn", "nq", "qt",
                                                   "qp", "mc", "md"};
  return names;
}

namespace detail {

// Canonical edge ids [qm, mn, nq, qt, qp, mc, md] of the open minimal graph,
// or throws when g does not have that shape.
inline std::array<int, 7> cut_incident_edge_ids(const EmbeddedGraph& g) {
  static const std::array<std::pair<const char*, const char*>, 7> pairs = {
      {{"q", "m"}, {"m", "n"}, {"n", "q"}, {"q", "t"}, {"q", "p"}, {"m", "c"}, {"m", "d"}}};
  std::array<int, 7> ids{};
  for (size_t i = 0; i < pairs.size(); ++i) {
    int id = g.has_vertex(pairs[i].first) && g.has_vertex(pairs[i].second)
                 ? g.edge_between(pairs[i].first, pairs[i].second)
                 : -1;
    if (id < 0)
      throw std::invalid_argument("graph is not the canonical open minimal graph");
    ids[i] = id;
  }
  return ids;
}

// The open graph's mirror symmetry swaps the two cut points: q<->m, t<->c,
// p<->d, n fixed.
inline VertexId mirror_vertex(const VertexId& v) {
  if (v == "q") return "m";
  if (v == "m") return "q";
  if (v == "t") return "c";
  if (v == "c") return "t";
  if (v == "p") return "d";
  if (v == "d") return "p";
  return v;
}

}  // namespace detail

// One of the nine exit/entry patterns on the cut-point-incident edges, given
// the main edge's direction. The unchosen candidates at the exit point enter
// it and the unchosen candidates at the entry point leave it, so all seven
// incident edges are directed; tp and cd stay free.
struct OpenVariant {
  int index;  // 1..9: second exit major, second entry minor
  DirectedEdge main;
  DirectedEdge second_exit;   // out of main.tail
  DirectedEdge second_entry;  // into main.head
  std::array<DirectedEdge, 7> induced;  // aligned with cut_incident_edge_names()
};

inline std::vector<OpenVariant> enumerate_open_variants(const EmbeddedGraph& g,
                                                        const DirectedEdge& main) {
  std::array<int, 7> ids = detail::cut_incident_edge_ids(g);
  if (main.edge != ids[0])
    throw std::invalid_argument("main edge must connect the cut points");
  std::set<VertexId> cuts = cut_vertices(g);
  if (cuts != std::set<VertexId>{"q", "m"})
    throw std::invalid_argument("graph is not the canonical open minimal graph");

  const VertexId exit_name = g.vertex_name(main.tail);
  const bool mirrored = (exit_name == "m");

  // Exit candidates [q>p, q>t, q>n] and entry candidates [d>m, c>m, n>m] in
  // the canonical numbering; the m>q case is the vertex-name mirror.
  std::array<std::pair<VertexId, VertexId>, 3> exits = {
      {{"q", "p"}, {"q", "t"}, {"q", "n"}}};
  std::array<std::pair<VertexId, VertexId>, 3> entries = {
      {{"d", "m"}, {"c", "m"}, {"n", "m"}}};
  if (mirrored) {
    for (auto& e : exits)
      e = {detail::mirror_vertex(e.first), detail::mirror_vertex(e.second)};
    for (auto& e : entries)
      e = {detail::mirror_vertex(e.first), detail::mirror_vertex(e.second)};
  }

  std::vector<OpenVariant> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      OpenVariant v;
      v.index = 3 * i + j + 1;
      v.main = main;
      v.second_exit = g.directed(exits[i].first, exits[i].second);
      v.second_entry = g.directed(entries[j].first, entries[j].second);

      for (size_t k = 0; k < ids.size(); ++k) {
        int e = ids[k];
        if (e == main.edge) {
          v.induced[k] = main;
        } else if (e == v.second_exit.edge) {
          v.induced[k] = v.second_exit;
        } else if (e == v.second_entry.edge) {
          v.induced[k] = v.second_entry;
        } else {
          const Edge& edge = g.edge(e);
          int qi = main.tail, mi = main.head;
          int ui = g.vertex_index(edge.u), vi = g.vertex_index(edge.v);
          if (ui == qi || vi == qi) {
            // unchosen at the exit point: directed into it
            int other = (ui == qi) ? vi : ui;
            v.induced[k] = DirectedEdge{e, other, qi};
          } else {
            // unchosen at the entry point: directed out of it
            int other = (ui == mi) ? vi : ui;
            v.induced[k] = DirectedEdge{e, mi, other};
          }
        }
      }
      out.push_back(v);
    }
  }
  return out;
}

// A last-face edge entering the main edge's tail and a last-face edge leaving
// its head: one link apart along any Euler circuit that uses the main edge.
struct DistanceOnePair {
  DirectedEdge into_tail;
  DirectedEdge out_of_head;
};

// All such pairs for a variant, incoming edge major. Variant 9 (both middle
// edges chosen) has 2x2 of them, variants sharing one middle edge have 2, and
// the four middle-free variants have exactly 1.
inline std::vector<DistanceOnePair> distance_one_pairs(const OpenVariant& v) {
  std::vector<DirectedEdge> in_at_tail, out_of_head;
  for (size_t k = 3; k < v.induced.size(); ++k) {  // last-face slots
    const DirectedEdge& d = v.induced[k];
    if (d.head == v.main.tail) in_at_tail.push_back(d);
    if (d.tail == v.main.head) out_of_head.push_back(d);
  }
  std::vector<DistanceOnePair> pairs;
  for (const DirectedEdge& in : in_at_tail)
    for (const DirectedEdge& out : out_of_head) pairs.push_back({in, out});
  return pairs;
}

// True when the seven induced directions extend to a balanced orientation of
// the whole graph, i.e. some direction of tp and cd balances the interior
// vertices. Only 4 of the 9 variants survive this on the standalone graph.
inline bool feasible_balanced(const EmbeddedGraph& g, const OpenVariant& v) {
  std::vector<int> free_edges;
  std::vector<char> is_induced(g.edge_count(), 0);
  for (const DirectedEdge& d : v.induced) is_induced[d.edge] = 1;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!is_induced[e]) free_edges.push_back(e);

  for (int mask = 0; mask < (1 << free_edges.size()); ++mask) {
    std::vector<uint8_t> bits(g.edge_count(), 0);
    for (const DirectedEdge& d : v.induced) {
      const Edge& e = g.edge(d.edge);
      bits[d.edge] = (d.tail == g.vertex_index(e.u)) ? 0 : 1;
    }
    for (size_t k = 0; k < free_edges.size(); ++k)
      bits[free_edges[k]] = static_cast<uint8_t>((mask >> k) & 1);
    if (Orientation(g, bits).is_balanced()) return true;
  }
  return false;
}

}  // namespace hmin

#endif  // HMIN_OPEN_VARIANTS_HPP
