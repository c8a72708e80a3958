#ifndef HMIN_EXPORT_HPP
#define HMIN_EXPORT_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hmin/conjugate.hpp"
#include "hmin/graph.hpp"
#include "hmin/minimal.hpp"
#include "hmin/open_variants.hpp"
#include "hmin/orientation.hpp"
#include "hmin/signing.hpp"

namespace hmin::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// graphs

inline json graph_to_json(const EmbeddedGraph& g) {
  json j;
  j["vertices"] = g.vertex_names();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
  j["edges"] = edges;

  json rotation = json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    json order = json::array();
    for (int e : g.rotation(v)) order.push_back(g.vertex_name(g.other_endpoint(e, v)));
    rotation[g.vertex_name(v)] = order;
  }
  j["rotation"] = rotation;

  json coords = json::object();
  for (int v = 0; v < g.vertex_count(); ++v)
    coords[g.vertex_name(v)] = json::array({g.coord(v)[0], g.coord(v)[1]});
  j["coords"] = coords;

  json faces = json::array();
  for (const Face& f : g.faces()) {
    json cycle = json::array();
    for (const DirectedEdge& d : f.boundary) cycle.push_back(g.vertex_name(d.tail));
    faces.push_back(json{{"cycle", cycle}, {"tag", to_string(f.tag)}});
  }
  j["faces"] = faces;
  return j;
}

inline EmbeddedGraph graph_from_json(const json& j) {
  std::vector<VertexId> vertices = j.at("vertices").get<std::vector<VertexId>>();
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>()});

  std::map<VertexId, std::vector<VertexId>> rotation;
  for (const auto& [name, order] : j.at("rotation").items())
    rotation[name] = order.get<std::vector<VertexId>>();

  std::map<VertexId, std::array<long long, 2>> coords;
  for (const auto& [name, xy] : j.at("coords").items())
    coords[name] = {xy.at(0).get<long long>(), xy.at(1).get<long long>()};

  std::map<std::string, FaceTag> tags;
  if (j.contains("faces")) {
    for (const auto& f : j.at("faces")) {
      std::string tag = f.at("tag").get<std::string>();
      if (tag == "OUTER") continue;  // rederived from the embedding
      std::set<std::string> names(f.at("cycle").begin(), f.at("cycle").end());
      std::string key;
      for (const auto& n : names) key += n;
      tags[key] = (tag == "SECOND") ? FaceTag::Second : FaceTag::First;
    }
  }
  return build_graph(vertices, edges, rotation, coords, tags);
}

inline std::string graph_to_dot(const EmbeddedGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  layout=neato;\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    os << "  " << g.vertex_name(v) << " [pos=\"" << g.coord(v)[0] << ","
       << g.coord(v)[1] << "!\"];\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// orientations

inline std::string orientation_to_dot(const Orientation& o, const std::string& name) {
  const EmbeddedGraph& g = o.graph();
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  layout=neato;\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    os << "  " << g.vertex_name(v) << " [pos=\"" << g.coord(v)[0] << ","
       << g.coord(v)[1] << "!\"];\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    DirectedEdge d = o.direction(e);
    os << "  " << g.vertex_name(d.tail) << " -> " << g.vertex_name(d.head) << ";\n";
  }
  os << "}\n";
  return os.str();
}

// One orientation per row, direction bits in edge-id order.
inline std::string orientations_to_csv(const EmbeddedGraph& g,
                                       const std::vector<Orientation>& list) {
  std::ostringstream os;
  for (int e = 0; e < g.edge_count(); ++e)
    os << (e ? "," : "") << g.edge(e).u << g.edge(e).v;
  os << "\n";
  for (const Orientation& o : list) {
    for (int e = 0; e < g.edge_count(); ++e)
      os << (e ? "," : "") << (o.is_reversed(e) ? 1 : 0);
    os << "\n";
  }
  return os.str();
}

inline json orientations_to_json(const EmbeddedGraph& g,
                                 const std::vector<DirectedEdge>& pins,
                                 const std::vector<Orientation>& list) {
  json j;
  json pin_list = json::array();
  for (const DirectedEdge& p : pins) pin_list.push_back(g.dart_name(p));
  j["pins"] = pin_list;
  j["count"] = list.size();
  json items = json::array();
  for (const Orientation& o : list) {
    json item;
    item["bits"] = o.bit_string();
    json dirs = json::array();
    for (int e = 0; e < g.edge_count(); ++e) dirs.push_back(g.dart_name(o.direction(e)));
    item["directions"] = dirs;
    FaceProfile profile = face_cycle_profile(o);
    json faces = json::array();
    for (size_t f = 0; f < profile.status.size(); ++f)
      faces.push_back(json{{"face", g.face_key(g.faces()[f])},
                           {"tag", to_string(g.faces()[f].tag)},
                           {"status", to_string(profile.status[f])}});
    item["faces"] = faces;
    items.push_back(item);
  }
  j["orientations"] = items;
  return j;
}

// ---------------------------------------------------------------------------
// open variants

inline json variants_to_json(const EmbeddedGraph& g,
                             const std::vector<OpenVariant>& variants) {
  json items = json::array();
  for (const OpenVariant& v : variants) {
    json item;
    item["index"] = v.index;
    item["secondExit"] = g.dart_name(v.second_exit);
    item["secondEntry"] = g.dart_name(v.second_entry);
    json induced = json::object();
    for (size_t k = 0; k < v.induced.size(); ++k)
      induced[cut_incident_edge_names()[k]] = g.dart_name(v.induced[k]);
    item["induced"] = induced;
    item["feasible"] = feasible_balanced(g, v);
    json pairs = json::array();
    for (const DistanceOnePair& p : distance_one_pairs(v))
      pairs.push_back(json::array({g.dart_name(p.into_tail), g.dart_name(p.out_of_head)}));
    item["distanceOnePairs"] = pairs;
    items.push_back(item);
  }
  return json{{"count", variants.size()}, {"variants", items}};
}

inline std::string variants_to_csv(const EmbeddedGraph& g,
                                   const std::vector<OpenVariant>& variants) {
  std::ostringstream os;
  os << "index,secondExit,secondEntry";
  for (const char* name : cut_incident_edge_names()) os << "," << name;
  os << ",feasible,pairCount\n";
  for (const OpenVariant& v : variants) {
    os << v.index << "," << g.dart_name(v.second_exit) << ","
       << g.dart_name(v.second_entry);
    for (const DirectedEdge& d : v.induced) os << "," << g.dart_name(d);
    os << "," << (feasible_balanced(g, v) ? "true" : "false") << ","
       << distance_one_pairs(v).size() << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// conjugate graph

inline json conjugate_to_json(const ConjugateGraph& cg) {
  json nodes = json::array();
  for (const ConjugateNode& n : cg.nodes)
    nodes.push_back(json{{"name", n.name},
                         {"endpoints", json::array({n.u, n.v})},
                         {"role", to_string(n.role)},
                         {"degree", cg.degree(static_cast<int>(&n - cg.nodes.data()))}});
  json links = json::array();
  for (const auto& [i, j] : cg.links)
    links.push_back(json::array({cg.nodes[i].name, cg.nodes[j].name}));
  return json{{"nodes", nodes}, {"links", links}};
}

inline std::string conjugate_to_dot(const ConjugateGraph& cg, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=circle];\n";
  for (const ConjugateNode& n : cg.nodes) os << "  " << n.name << ";\n";
  for (const auto& [i, j] : cg.links)
    os << "  " << cg.nodes[i].name << " -- " << cg.nodes[j].name << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// signings

inline json signings_to_json(const EmbeddedGraph& g, const std::vector<SigningRow>& rows) {
  json items = json::array();
  for (const SigningRow& row : rows) {
    json item;
    item["row"] = row.row_label;
    item["variant"] = row.variant_index;
    item["pair"] = json::array(
        {g.dart_name(row.pair.into_tail), g.dart_name(row.pair.out_of_head)});
    json labeling = json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
      labeling[g.vertex_name(v)] = row.signing.labeling.label[v];
    item["labeling"] = labeling;
    json pairs = json::object();
    for (size_t k = 0; k < row.signing.darts.size(); ++k)
      pairs[cut_incident_edge_names()[k]] = row.signing.cell(k);
    item["signing"] = pairs;
    json free = json::object();
    for (const auto& choice : free_edge_resolutions(row.signing).choices) {
      const Edge& e = g.edge(choice[0].dart.edge);
      json both = json::array();
      for (const FreeEdgeChoice& c : choice)
        both.push_back(g.vertex_name(c.dart.tail) + g.vertex_name(c.dart.head) + "=" +
                       std::to_string(c.pair.first) + std::to_string(c.pair.second));
      free[e.u + e.v] = both;
    }
    item["free"] = free;
    items.push_back(item);
  }
  return json{{"count", rows.size()}, {"rows", items}};
}

// Layout follows the summary tables: one row per derivation, a cell per
// cut-point-incident edge, then both resolutions of each free edge.
inline std::string signings_to_csv(const EmbeddedGraph& g,
                                   const std::vector<SigningRow>& rows) {
  std::ostringstream os;
  os << "row,variant,pair_in,pair_out";
  for (const char* name : cut_incident_edge_names()) os << "," << name;
  std::vector<std::string> free_names;
  if (!rows.empty())
    for (const auto& choice : free_edge_resolutions(rows.front().signing).choices) {
      const Edge& e = g.edge(choice[0].dart.edge);
      free_names.push_back(e.u + e.v);
    }
  for (const std::string& name : free_names) os << "," << name << "_free";
  os << "\n";

  for (const SigningRow& row : rows) {
    os << row.row_label << "," << row.variant_index << ","
       << g.dart_name(row.pair.into_tail) << "," << g.dart_name(row.pair.out_of_head);
    for (size_t k = 0; k < row.signing.darts.size(); ++k) os << "," << row.signing.cell(k);
    for (const auto& choice : free_edge_resolutions(row.signing).choices) {
      os << ",";
      for (size_t c = 0; c < choice.size(); ++c) {
        if (c) os << "|";
        os << g.vertex_name(choice[c].dart.tail) << g.vertex_name(choice[c].dart.head)
           << "=" << choice[c].pair.first << choice[c].pair.second;
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace hmin::io

#endif  // HMIN_EXPORT_HPP
