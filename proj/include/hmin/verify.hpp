#ifndef HMIN_VERIFY_HPP
#define HMIN_VERIFY_HPP

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hmin/conjugate.hpp"
#include "hmin/graph.hpp"
#include "hmin/minimal.hpp"
#include "hmin/open_variants.hpp"
#include "hmin/oracle.hpp"
#include "hmin/orientation.hpp"
#include "hmin/signing.hpp"

namespace hmin {

enum class ClaimSource { Paper, Derived };

inline const char* to_string(ClaimSource s) {
  return s == ClaimSource::Paper ? "PAPER" : "DERIVED";
}

struct Check {
  int criterion;  // 1..10
  std::string name;
  std::string expected;
  std::string computed;
  ClaimSource source;
  bool pass;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool all_pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }

  bool criterion_pass(int criterion) const {
    for (const Check& c : checks)
      if (c.criterion == criterion && !c.pass) return false;
    return true;
  }

  int max_criterion() const {
    int m = 0;
    for (const Check& c : checks) m = std::max(m, c.criterion);
    return m;
  }
};

namespace detail {

template <typename T>
std::string show(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

template <typename T>
std::string show(const std::vector<T>& values) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << "]";
  return os.str();
}

}  // namespace detail

// Runs every claim check. Pure: builds its own graphs, touches nothing global.
inline VerificationReport verify_all() {
  VerificationReport report;
  auto add = [&](int criterion, const std::string& name, ClaimSource source,
                 const std::string& expected, const std::string& computed) {
    report.checks.push_back(
        Check{criterion, name, expected, computed, source, expected == computed});
  };

  const EmbeddedGraph closed = closed_minimal();
  const EmbeddedGraph open = open_minimal();

  // 1. pinned balanced orientations of the closed graph
  const std::vector<DirectedEdge> pins_fa_ab = {closed.directed("f", "a"),
                                                closed.directed("a", "b")};
  const std::vector<Orientation> pinned = enumerate_balanced_orientations(closed, pins_fa_ab);
  add(1, "closed variants (pinned f>a, a>b)", ClaimSource::Paper, "5",
      detail::show(pinned.size()));
  add(1, "pinned enumeration equals 512-mask oracle", ClaimSource::Derived, "equal",
      pinned == oracle::balanced_orientations(closed, pins_fa_ab) ? "equal" : "different");

  // 2. unpinned total and the reversal bijection
  const std::vector<Orientation> all_closed = enumerate_balanced_orientations(closed);
  add(2, "closed variants (no pins)", ClaimSource::Paper, "10",
      detail::show(all_closed.size()));
  {
    bool closed_under_reversal = true;
    for (const Orientation& o : all_closed) {
      Orientation r = o.reversed();
      if (std::find(all_closed.begin(), all_closed.end(), r) == all_closed.end())
        closed_under_reversal = false;
    }
    const std::vector<DirectedEdge> pins_rev = {closed.directed("a", "f"),
                                                closed.directed("b", "a")};
    size_t reversed_family = enumerate_balanced_orientations(closed, pins_rev).size();
    bool split = pinned.size() + reversed_family == all_closed.size() &&
                 pinned.size() == reversed_family;
    add(2, "reversal pairs the two pass directions", ClaimSource::Derived, "5+5=10",
        closed_under_reversal && split
            ? detail::show(pinned.size()) + "+" + detail::show(reversed_family) + "=" +
                  detail::show(all_closed.size())
            : "broken");
  }

  // 3. exit/entry table
  {
    ExitEntryTable table = classify_exit_entry(closed);
    std::string infeasible;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!table.feasible[i][j])
          infeasible += "(" + std::to_string(i + 1) + std::to_string(j + 1) + ")";
    add(3, "infeasible exit/entry combinations", ClaimSource::Paper,
        "(12)(13)(21)(31)", infeasible);
    add(3, "feasible exit/entry combinations", ClaimSource::Paper, "5",
        detail::show(table.feasible_count()));
  }

  // 4. face-bypass profiles of the five pinned orientations
  {
    int outer_second_only = 0, all_five = 0, exactly_three = 0;
    for (const Orientation& o : pinned) {
      FaceProfile profile = face_cycle_profile(o);
      int cyclic = profile.cyclic_count();
      bool outer_cyclic = false, second_cyclic = false;
      int first_cyclic = 0;
      for (size_t f = 0; f < profile.status.size(); ++f) {
        if (profile.status[f] == FaceStatus::Acyclic) continue;
        switch (closed.faces()[f].tag) {
          case FaceTag::Outer: outer_cyclic = true; break;
          case FaceTag::Second: second_cyclic = true; break;
          case FaceTag::First: ++first_cyclic; break;
        }
      }
      if (outer_cyclic && second_cyclic && first_cyclic == 0) ++outer_second_only;
      if (cyclic == 5) ++all_five;
      if (cyclic == 3) ++exactly_three;
    }
    add(4, "face profiles partition 1/1/3", ClaimSource::Derived, "1,1,3",
        detail::show(outer_second_only) + "," + detail::show(all_five) + "," +
            detail::show(exactly_three));
  }

  // 5. open variants and their balance feasibility
  const std::vector<OpenVariant> variants =
      enumerate_open_variants(open, open.directed("q", "m"));
  {
    add(5, "open variants (main edge q>m)", ClaimSource::Paper, "9",
        detail::show(variants.size()));
    int feasible = 0;
    for (const OpenVariant& v : variants) feasible += feasible_balanced(open, v) ? 1 : 0;
    add(5, "variants extending to balanced orientations", ClaimSource::Derived, "4",
        detail::show(feasible));
  }

  // 6. conjugate graph structure
  const ConjugateGraph cg = restricted_line_graph(open, {"q", "m"});
  {
    add(6, "conjugate nodes", ClaimSource::Paper, "7", detail::show(cg.nodes.size()));
    add(6, "conjugate links", ClaimSource::Paper, "13", detail::show(cg.links.size()));
    add(6, "conjugate degree multiset", ClaimSource::Paper, "[6,4,4,3,3,3,3]",
        detail::show(cg.degree_multiset()));
    AdjacencyMatrix matrix = adjacency_matrix(cg);
    add(6, "adjacency matrix ones", ClaimSource::Paper, "13",
        detail::show(matrix.ones()));
    const EmbeddedGraph open2 = open_minimal();
    std::string again = adjacency_matrix(restricted_line_graph(open2, {"q", "m"})).to_text();
    add(6, "adjacency matrix byte-stable across rebuilds", ClaimSource::Derived,
        "identical", matrix.to_text() == again ? "identical" : "different");
  }

  // 7. coloring bound and signing properness on the conjugate graph
  const std::vector<SigningRow> rows = all_signings(open);
  {
    int chi = chromatic_number(cg);
    add(7, "conjugate chromatic number", ClaimSource::Derived, "4", detail::show(chi));
    add(7, "chromatic number within the six-pair bound", ClaimSource::Paper, "true",
        chi <= 6 ? "true" : "false");
    int proper = 0;
    for (const SigningRow& row : rows)
      proper += check_proper_on_conjugate(row.signing, cg) ? 1 : 0;
    add(7, "signings proper on the conjugate graph", ClaimSource::Paper, "16/16",
        detail::show(proper) + "/" + detail::show(rows.size()));
  }

  // 8. the sixteen signing derivations
  {
    add(8, "signing derivations", ClaimSource::Paper, "16", detail::show(rows.size()));
    std::vector<int> multiplicity(9, 0);
    for (const SigningRow& row : rows) ++multiplicity[row.variant_index - 1];
    add(8, "per-variant multiplicities", ClaimSource::Paper, "[1,1,2,1,1,2,2,2,4]",
        detail::show(multiplicity));

    // each derivation is the unique survivor among the four pinned labelings
    int unique = 0;
    const std::vector<Labeling> candidates = proper_labelings(open, {{"q", 1}, {"m", 2}});
    for (const SigningRow& row : rows) {
      int survivors = 0;
      bool matches = false;
      for (const Labeling& cand : candidates) {
        if (cand.label[row.pair.into_tail.tail] == cand.at("m") &&
            cand.label[row.pair.out_of_head.head] == cand.at("q")) {
          ++survivors;
          matches = cand == row.signing.labeling;
        }
      }
      if (survivors == 1 && matches) ++unique;
    }
    add(8, "unique constraint solution per (variant, pair)", ClaimSource::Paper,
        "16/16", detail::show(unique) + "/" + detail::show(rows.size()));

    std::string variant2;
    for (const SigningRow& row : rows)
      if (row.row_label == "2") {
        for (size_t k = 0; k < row.signing.darts.size(); ++k)
          variant2 += (k ? " " : "") + row.signing.cell(k);
      }
    add(8, "variant 2 signing table", ClaimSource::Paper,
        "qm=12 mn=23 nq=31 tq=21 qp=13 cm=32 md=21", variant2);

    std::set<std::vector<std::string>> distinct;
    for (const SigningRow& row : rows) {
      std::vector<std::string> key;
      for (size_t k = 0; k < row.signing.darts.size(); ++k)
        key.push_back(row.signing.cell(k));
      distinct.insert(key);
    }
    add(8, "distinct signing tables among the 16", ClaimSource::Derived, "16",
        detail::show(distinct.size()));
  }

  // 9. labeling counts against the exhaustive scans
  {
    const std::vector<Labeling> open_labelings =
        proper_labelings(open, {{"q", 1}, {"m", 2}});
    auto open_oracle = oracle::proper_labelings(open, {{"q", 1}, {"m", 2}});
    add(9, "open labelings with q=1, m=2", ClaimSource::Derived, "4",
        detail::show(open_labelings.size()));
    bool same = open_labelings.size() == open_oracle.size();
    for (size_t i = 0; same && i < open_labelings.size(); ++i)
      same = open_labelings[i].label == open_oracle[i];
    add(9, "open labelings equal 3^5 scan", ClaimSource::Derived, "equal",
        same ? "equal" : "different");
    add(9, "closed labelings with b=1, d=2", ClaimSource::Derived, "1",
        detail::show(proper_labelings(closed, {{"b", 1}, {"d", 2}}).size()));
  }

  // 10. Euler circuit machinery on every balanced orientation of both graphs
  {
    int agreements = 0, valid_trails = 0, total = 0;
    for (const EmbeddedGraph* g : {&closed, &open}) {
      for (const Orientation& o : enumerate_balanced_orientations(*g)) {
        ++total;
        if (count_euler_circuits(o) == oracle::euler_circuit_count(o)) ++agreements;
        std::vector<DirectedEdge> trail = euler_circuit(o, g->vertex_name(0));
        std::set<int> edges_used;
        bool closed_trail = trail.front().tail == g->vertex_index(g->vertex_name(0)) &&
                            trail.back().head == trail.front().tail;
        for (size_t i = 0; i + 1 < trail.size(); ++i)
          if (trail[i].head != trail[i + 1].tail) closed_trail = false;
        for (const DirectedEdge& d : trail) edges_used.insert(d.edge);
        if (closed_trail && static_cast<int>(edges_used.size()) == g->edge_count() &&
            static_cast<int>(trail.size()) == g->edge_count())
          ++valid_trails;
      }
    }
    add(10, "circuit counts match exhaustive trail enumeration", ClaimSource::Derived,
        detail::show(total) + "/" + detail::show(total),
        detail::show(agreements) + "/" + detail::show(total));
    add(10, "Euler circuits use every edge exactly once", ClaimSource::Derived,
        detail::show(total) + "/" + detail::show(total),
        detail::show(valid_trails) + "/" + detail::show(total));
  }

  return report;
}

inline nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : report.checks)
    checks.push_back(nlohmann::json{{"criterion", c.criterion},
                                    {"name", c.name},
                                    {"expected", c.expected},
                                    {"computed", c.computed},
                                    {"source", to_string(c.source)},
                                    {"pass", c.pass}});
  return nlohmann::json{{"checks", checks}, {"allPass", report.all_pass()}};
}

inline std::string render_report(const VerificationReport& report, bool color) {
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";

  size_t name_w = 4, exp_w = 8, got_w = 8;
  for (const Check& c : report.checks) {
    name_w = std::max(name_w, c.name.size());
    exp_w = std::max(exp_w, c.expected.size());
    got_w = std::max(got_w, c.computed.size());
  }

  std::ostringstream os;
  for (const Check& c : report.checks) {
    os << (c.pass ? green : red) << (c.pass ? "PASS" : "FAIL") << reset << "  "
       << c.criterion << (c.criterion < 10 ? " " : "") << " " << c.name
       << std::string(name_w - c.name.size() + 2, ' ') << "expected " << c.expected
       << std::string(exp_w - c.expected.size() + 2, ' ') << "got " << c.computed
       << std::string(got_w - c.computed.size() + 2, ' ') << "[" << to_string(c.source)
       << "]\n";
  }
  os << (report.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return os.str();
}

}  // namespace hmin

#endif  // HMIN_VERIFY_HPP
