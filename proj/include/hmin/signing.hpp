#ifndef HMIN_SIGNING_HPP
#define HMIN_SIGNING_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hmin/conjugate.hpp"
#include "hmin/graph.hpp"
#include "hmin/open_variants.hpp"

namespace hmin {

// A proper assignment of {1,2,3} to every vertex.
struct Labeling {
  const EmbeddedGraph* graph;
  std::vector<int> label;  // by vertex index

  int at(const VertexId& v) const { return label.at(graph->vertex_index(v)); }

  bool proper() const {
    for (const Edge& e : graph->edges())
      if (at(e.u) == at(e.v)) return false;
    return true;
  }

  friend bool operator==(const Labeling& a, const Labeling& b) {
    return a.label == b.label;
  }
};

// All proper 3-labelings extending `pins`, lexicographic in vertex order.
inline std::vector<Labeling> proper_labelings(const EmbeddedGraph& g,
                                              const std::map<VertexId, int>& pins) {
  std::vector<int> fixed(g.vertex_count(), 0);
  for (const auto& [name, value] : pins) {
    if (value < 1 || value > 3)
      throw std::invalid_argument("pin label out of range");
    fixed[g.vertex_index(name)] = value;
  }
  for (const Edge& e : g.edges()) {
    int lu = fixed[g.vertex_index(e.u)], lv = fixed[g.vertex_index(e.v)];
    if (lu != 0 && lu == lv)
      throw std::invalid_argument("improper pins: " + e.u + " and " + e.v +
                                  " share a label");
  }

  std::vector<int> label(fixed);
  std::vector<Labeling> out;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == g.vertex_count()) {
      out.push_back(Labeling{&g, label});
      return;
    }
    if (fixed[v] != 0) {
      self(self, v + 1);
      return;
    }
    for (int c = 1; c <= 3; ++c) {
      bool ok = true;
      for (int e : g.rotation(v)) {
        int w = g.other_endpoint(e, v);
        if (label[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      label[v] = c;
      self(self, v + 1);
      label[v] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

// Ordered label pairs on the seven variant-directed cut-point-incident edges,
// aligned with cut_incident_edge_names(). gamma1/beta1/kappa1 are the pairs on
// the main edge and the two middle-face edges.
struct Signing {
  Labeling labeling;
  std::array<DirectedEdge, 7> darts;
  std::array<std::pair<int, int>, 7> pairs;

  std::pair<int, int> gamma1() const { return pairs[0]; }
  std::pair<int, int> beta1() const { return pairs[1]; }
  std::pair<int, int> kappa1() const { return pairs[2]; }

  // e.g. "tq=21" for the canonical slot "qt" under a variant entering q
  std::string cell(size_t slot) const {
    const EmbeddedGraph& g = *labeling.graph;
    const DirectedEdge& d = darts[slot];
    return g.vertex_name(d.tail) + g.vertex_name(d.head) + "=" +
           std::to_string(pairs[slot].first) + std::to_string(pairs[slot].second);
  }

  friend bool operator==(const Signing& a, const Signing& b) {
    return a.pairs == b.pairs && a.darts == b.darts;
  }
};

namespace detail {

inline int third_label(int a, int b) { return 6 - a - b; }

}  // namespace detail

// The unique labeling and signing that give the pair's two last-face edges
// equal ordered pairs, with the cut points pinned. Walking
// into_tail -> main -> out_of_head, equality forces
// label(tail(into_tail)) = label(main.head) and
// label(head(out_of_head)) = label(main.tail); everything else is then
// determined by properness.
inline Signing derive_signing(const EmbeddedGraph& g, const OpenVariant& v,
                              const DistanceOnePair& pair,
                              const std::map<VertexId, int>& pins = {{"q", 1}, {"m", 2}}) {
  bool found = false;
  for (const DistanceOnePair& cand : distance_one_pairs(v))
    if (cand.into_tail == pair.into_tail && cand.out_of_head == pair.out_of_head)
      found = true;
  if (!found)
    throw std::invalid_argument("pair does not belong to the variant");

  auto tail_pin = pins.find(g.vertex_name(v.main.tail));
  auto head_pin = pins.find(g.vertex_name(v.main.head));
  if (tail_pin == pins.end() || head_pin == pins.end() ||
      tail_pin->second == head_pin->second)
    throw std::invalid_argument("pins must give the cut points distinct labels");
  const int tail_label = tail_pin->second;
  const int head_label = head_pin->second;

  std::vector<int> label(g.vertex_count(), 0);
  label[v.main.tail] = tail_label;
  label[v.main.head] = head_label;

  // middle-face apex is adjacent to both cut points
  int apex = -1;
  for (int e : g.rotation(v.main.tail)) {
    int w = g.other_endpoint(e, v.main.tail);
    if (g.edge_between(g.vertex_name(w), g.vertex_name(v.main.head)) >= 0 &&
        w != v.main.head)
      apex = w;
  }
  label[apex] = detail::third_label(tail_label, head_label);

  // equality constraint of the distance-one pair
  label[pair.into_tail.tail] = head_label;
  label[pair.out_of_head.head] = tail_label;

  // remaining last-face vertices are forced by properness within their face
  auto settle = [&](int cut, int assigned_partner, int face_label) {
    for (int e : g.rotation(cut)) {
      int w = g.other_endpoint(e, cut);
      if (w != apex && w != v.main.tail && w != v.main.head && w != assigned_partner)
        label[w] = detail::third_label(face_label, label[cut]);
    }
  };
  settle(v.main.tail, pair.into_tail.tail, head_label);
  settle(v.main.head, pair.out_of_head.head, tail_label);

  Signing s;
  s.labeling = Labeling{&g, label};
  if (!s.labeling.proper())
    throw std::logic_error("signing constraints produced an improper labeling");

  s.darts = v.induced;
  for (size_t k = 0; k < s.darts.size(); ++k)
    s.pairs[k] = {label[s.darts[k].tail], label[s.darts[k].head]};
  return s;
}

// One derivation row: a variant, one of its distance-one pairs, and the unique
// signing. row_label follows the usual sub-numbering ("3.1", "9.4", ...).
struct SigningRow {
  int variant_index;
  std::string row_label;
  OpenVariant variant;
  DistanceOnePair pair;
  Signing signing;
};

// The 16 derivations over all 9 variants in (variant, pair) order.
inline std::vector<SigningRow> all_signings(const EmbeddedGraph& g) {
  std::vector<SigningRow> rows;
  for (const OpenVariant& v : enumerate_open_variants(g, g.directed("q", "m"))) {
    std::vector<DistanceOnePair> pairs = distance_one_pairs(v);
    for (size_t k = 0; k < pairs.size(); ++k) {
      SigningRow row;
      row.variant_index = v.index;
      row.row_label = pairs.size() == 1
                          ? std::to_string(v.index)
                          : std::to_string(v.index) + "." + std::to_string(k + 1);
      row.variant = v;
      row.pair = pairs[k];
      row.signing = derive_signing(g, v, pairs[k]);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

// True when no conjugate link joins equal ordered pairs.
inline bool check_proper_on_conjugate(const Signing& s, const ConjugateGraph& cg) {
  if (!cg.canonical || cg.nodes.size() != s.pairs.size())
    throw std::invalid_argument("signing does not cover the conjugate graph");
  for (size_t k = 0; k < cg.nodes.size(); ++k)
    if (cg.nodes[k].source_edge != s.darts[k].edge)
      throw std::invalid_argument("signing does not cover the conjugate graph");
  for (const auto& [i, j] : cg.links)
    if (s.pairs[i] == s.pairs[j]) return false;
  return true;
}

// Both direction choices for an undirected edge with their induced pairs.
struct FreeEdgeChoice {
  DirectedEdge dart;
  std::pair<int, int> pair;
};

struct FreeEdgeResolution {
  // [forward, reversed] per free edge, in edge-id order (tp then cd)
  std::vector<std::array<FreeEdgeChoice, 2>> choices;
};

inline FreeEdgeResolution free_edge_resolutions(const Signing& s) {
  const EmbeddedGraph& g = *s.labeling.graph;
  std::vector<char> covered(g.edge_count(), 0);
  for (const DirectedEdge& d : s.darts) covered[d.edge] = 1;

  FreeEdgeResolution res;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (covered[e]) continue;
    DirectedEdge fwd = g.dart(e, false), rev = g.dart(e, true);
    res.choices.push_back(
        {FreeEdgeChoice{fwd, {s.labeling.label[fwd.tail], s.labeling.label[fwd.head]}},
         FreeEdgeChoice{rev, {s.labeling.label[rev.tail], s.labeling.label[rev.head]}}});
  }
  return res;
}

}  // namespace hmin

#endif  // HMIN_SIGNING_HPP
