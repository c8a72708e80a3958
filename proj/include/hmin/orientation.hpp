#ifndef HMIN_ORIENTATION_HPP
#define HMIN_ORIENTATION_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmin/graph.hpp"

namespace hmin {

// A total direction assignment: bit i reverses edge i relative to its listed
// (u,v) order. Balanced means in-degree == out-degree at every vertex, which
// on a connected graph is exactly the Euler-circuit condition.
class Orientation {
 public:
  Orientation(const EmbeddedGraph& g, std::vector<uint8_t> reversed)
      : g_(&g), rev_(std::move(reversed)) {
    if (static_cast<int>(rev_.size()) != g.edge_count())
      throw std::invalid_argument("orientation size mismatch");
  }

  const EmbeddedGraph& graph() const { return *g_; }

  bool is_reversed(int edge_id) const { return rev_.at(edge_id) != 0; }

  DirectedEdge direction(int edge_id) const {
    return g_->dart(edge_id, is_reversed(edge_id));
  }

  std::vector<DirectedEdge> directions() const {
    std::vector<DirectedEdge> out;
    for (int e = 0; e < g_->edge_count(); ++e) out.push_back(direction(e));
    return out;
  }

  Orientation reversed() const {
    std::vector<uint8_t> flipped(rev_);
    for (auto& b : flipped) b ^= 1;
    return Orientation(*g_, std::move(flipped));
  }

  bool is_balanced() const {
    std::vector<int> net(g_->vertex_count(), 0);
    for (int e = 0; e < g_->edge_count(); ++e) {
      DirectedEdge d = direction(e);
      ++net[d.tail];
      --net[d.head];
    }
    for (int x : net)
      if (x != 0) return false;
    return true;
  }

  // Direction bits in edge-id order, e.g. "000110101".
  std::string bit_string() const {
    std::string s;
    for (uint8_t b : rev_) s += b ? '1' : '0';
    return s;
  }

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.rev_ == b.rev_;
  }
  friend bool operator<(const Orientation& a, const Orientation& b) {
    return a.rev_ < b.rev_;
  }

 private:
  const EmbeddedGraph* g_;
  std::vector<uint8_t> rev_;
};

namespace detail {

// -1 free, 0 forward, 1 reversed; throws on contradictory pins.
inline std::vector<int> pin_table(const EmbeddedGraph& g,
                                  const std::vector<DirectedEdge>& pins) {
  std::vector<int> fixed(g.edge_count(), -1);
  for (const DirectedEdge& p : pins) {
    const Edge& e = g.edge(p.edge);
    int forward_tail = g.vertex_index(e.u);
    int bit = (p.tail == forward_tail) ? 0 : 1;
    if (fixed[p.edge] != -1 && fixed[p.edge] != bit)
      throw std::invalid_argument("contradictory pins on edge " + e.u + "-" + e.v);
    fixed[p.edge] = bit;
  }
  return fixed;
}

}  // namespace detail

// All orientations extending `pins` with in-degree == out-degree everywhere,
// in lexicographic bit order. Backtracks over edges in id order, pruning once
// a vertex exceeds degree/2 in either direction.
inline std::vector<Orientation> enumerate_balanced_orientations(
    const EmbeddedGraph& g, const std::vector<DirectedEdge>& pins = {}) {
  std::vector<int> fixed = detail::pin_table(g, pins);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return {};  // odd vertex: no balanced orientation

  const int m = g.edge_count();
  std::vector<int> out_cnt(g.vertex_count(), 0), in_cnt(g.vertex_count(), 0);
  std::vector<uint8_t> bits(m, 0);
  std::vector<Orientation> result;

  auto rec = [&](auto&& self, int e) -> void {
    if (e == m) {
      result.emplace_back(g, bits);
      return;
    }
    for (int bit = 0; bit <= 1; ++bit) {
      if (fixed[e] != -1 && fixed[e] != bit) continue;
      DirectedEdge d = g.dart(e, bit != 0);
      if (out_cnt[d.tail] + 1 > g.degree(d.tail) / 2) continue;
      if (in_cnt[d.head] + 1 > g.degree(d.head) / 2) continue;
      ++out_cnt[d.tail];
      ++in_cnt[d.head];
      bits[e] = static_cast<uint8_t>(bit);
      self(self, e + 1);
      --out_cnt[d.tail];
      --in_cnt[d.head];
    }
  };
  rec(rec, 0);
  return result;
}

// Exit/entry analysis of the closed minimal graph under the pins f>a, a>b.
// Combination (i,j) fixes the second exit from f (fb, fd, fe) and the second
// entry into b (fb, db, cb); the unchosen candidates flip, so each combination
// pins 8 of the 9 edges (7 when both choices land on fb).
struct ExitEntryTable {
  std::array<std::array<bool, 3>, 3> feasible{};

  int feasible_count() const {
    int c = 0;
    for (const auto& row : feasible)
      for (bool b : row) c += b ? 1 : 0;
    return c;
  }
};

inline ExitEntryTable classify_exit_entry(const EmbeddedGraph& g) {
  const std::array<std::pair<VertexId, VertexId>, 3> exits = {
      {{"f", "b"}, {"f", "d"}, {"f", "e"}}};
  const std::array<std::pair<VertexId, VertexId>, 3> entries = {
      {{"f", "b"}, {"d", "b"}, {"c", "b"}}};

  ExitEntryTable table;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      std::vector<DirectedEdge> pins = {g.directed("f", "a"), g.directed("a", "b")};
      for (int k = 0; k < 3; ++k) {
        // chosen exit leaves f, the other candidates enter it
        pins.push_back(k == i ? g.directed(exits[k].first, exits[k].second)
                              : g.directed(exits[k].second, exits[k].first));
      }
      for (int k = 0; k < 3; ++k) {
        // chosen entry reaches b, the other candidates leave it
        pins.push_back(k == j ? g.directed(entries[k].first, entries[k].second)
                              : g.directed(entries[k].second, entries[k].first));
      }
      bool ok;
      try {
        ok = !enumerate_balanced_orientations(g, pins).empty();
      } catch (const std::invalid_argument&) {
        ok = false;  // contradictory pins on fb
      }
      table.feasible[i][j] = ok;
    }
  }
  return table;
}

// Hierholzer's construction. Deterministic: the walk always leaves along the
// unused out-edge with the lowest id, and stuck subtours are spliced in place.
inline std::vector<DirectedEdge> euler_circuit(const Orientation& o,
                                               const VertexId& start) {
  const EmbeddedGraph& g = o.graph();
  if (!o.is_balanced())
    throw std::invalid_argument("euler_circuit requires a balanced orientation");

  std::vector<std::vector<DirectedEdge>> outs(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    DirectedEdge d = o.direction(e);
    outs[d.tail].push_back(d);
  }
  // rotation order is arbitrary here; sort by edge id
  for (auto& v : outs)
    std::sort(v.begin(), v.end(),
              [](const DirectedEdge& a, const DirectedEdge& b) { return a.edge < b.edge; });

  int s = g.vertex_index(start);
  if (outs[s].empty())
    throw std::invalid_argument("start vertex has no outgoing edge");

  std::vector<size_t> next(g.vertex_count(), 0);
  std::vector<int> vstack{s};
  std::vector<DirectedEdge> estack, circuit;
  while (!vstack.empty()) {
    int v = vstack.back();
    if (next[v] < outs[v].size()) {
      DirectedEdge d = outs[v][next[v]++];
      vstack.push_back(d.head);
      estack.push_back(d);
    } else {
      vstack.pop_back();
      if (!estack.empty()) {
        circuit.push_back(estack.back());
        estack.pop_back();
      }
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (static_cast<int>(circuit.size()) != g.edge_count())
    throw std::invalid_argument("graph is not connected: no Euler circuit");
  return circuit;
}

namespace detail {

// Exact integer determinant (Bareiss fraction-free elimination).
inline long long int_determinant(std::vector<std::vector<long long>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == -1) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace detail

// Euler circuits of the oriented graph, counted up to cyclic rotation.
// BEST theorem: (arborescences toward any fixed root) * prod (outdeg-1)!.
// The arborescence count is the rooted minor determinant of the out-degree
// Laplacian (directed matrix-tree theorem).
inline long long count_euler_circuits(const Orientation& o) {
  const EmbeddedGraph& g = o.graph();
  if (!o.is_balanced())
    throw std::invalid_argument("count_euler_circuits requires a balanced orientation");

  const int n = g.vertex_count();
  std::vector<std::vector<long long>> lap(n, std::vector<long long>(n, 0));
  std::vector<int> outdeg(n, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    DirectedEdge d = o.direction(e);
    ++outdeg[d.tail];
    ++lap[d.tail][d.tail];
    --lap[d.tail][d.head];
  }

  std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) minor[i - 1][j - 1] = lap[i][j];
  long long trees = detail::int_determinant(std::move(minor));

  long long circuits = trees;
  for (int v = 0; v < n; ++v) {
    long long f = 1;
    for (int k = 2; k <= outdeg[v] - 1; ++k) f *= k;
    circuits *= f;
  }
  return circuits;
}

enum class FaceStatus { Ccw, Cw, Acyclic };

inline const char* to_string(FaceStatus s) {
  switch (s) {
    case FaceStatus::Ccw: return "CCW";
    case FaceStatus::Cw: return "CW";
    case FaceStatus::Acyclic: return "ACYCLIC";
  }
  return "?";
}

// Per-face bypass classification, aligned with graph().faces(). A face is
// cyclic when the orientation directs its whole boundary coherently; the sign
// is the rotational sense of that directed boundary in the drawing.
struct FaceProfile {
  std::vector<FaceStatus> status;

  int cyclic_count() const {
    int c = 0;
    for (FaceStatus s : status) c += (s != FaceStatus::Acyclic) ? 1 : 0;
    return c;
  }
  int count(FaceStatus want) const {
    int c = 0;
    for (FaceStatus s : status) c += (s == want) ? 1 : 0;
    return c;
  }
};

inline FaceProfile face_cycle_profile(const Orientation& o) {
  const EmbeddedGraph& g = o.graph();
  FaceProfile profile;
  for (const Face& f : g.faces()) {
    size_t along = 0;
    for (const DirectedEdge& d : f.boundary)
      if (o.direction(d.edge) == d) ++along;
    if (along != 0 && along != f.boundary.size()) {
      profile.status.push_back(FaceStatus::Acyclic);
      continue;
    }
    // coherent; walked area flips sign when the orientation runs against the
    // stored boundary walk
    long long area = (along == f.boundary.size()) ? f.doubled_area : -f.doubled_area;
    profile.status.push_back(area > 0 ? FaceStatus::Ccw : FaceStatus::Cw);
  }
  return profile;
}

}  // namespace hmin

#endif  // HMIN_ORIENTATION_HPP
