#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "hmin/minimal.hpp"
#include "hmin/oracle.hpp"
#include "hmin/signing.hpp"

using namespace hmin;

namespace {

std::string table_of(const Signing& s) {
  std::string out;
  for (size_t k = 0; k < s.darts.size(); ++k) out += (k ? " " : "") + s.cell(k);
  return out;
}

}  // namespace

TEST_CASE("proper labelings") {
  EmbeddedGraph open = open_minimal();

  SECTION("open graph with the cut points pinned has four") {
    std::vector<Labeling> got = proper_labelings(open, {{"q", 1}, {"m", 2}});
    REQUIRE(got.size() == 4);
    for (const Labeling& l : got) {
      REQUIRE(l.proper());
      REQUIRE(l.at("q") == 1);
      REQUIRE(l.at("m") == 2);
      REQUIRE(l.at("n") == 3);  // adjacent to both cut points
    }
    auto scanned = oracle::proper_labelings(open, {{"q", 1}, {"m", 2}});
    REQUIRE(scanned.size() == got.size());
    for (size_t i = 0; i < got.size(); ++i) REQUIRE(got[i].label == scanned[i]);
  }

  SECTION("triangle with two pins has one") {
    REQUIRE(proper_labelings(fixtures::triangle(), {{"x", 1}, {"y", 2}}).size() == 1);
  }

  SECTION("closed graph with two midpoints pinned has one") {
    EmbeddedGraph closed = closed_minimal();
    std::vector<Labeling> got = proper_labelings(closed, {{"b", 1}, {"d", 2}});
    REQUIRE(got.size() == 1);
    // third midpoint forced, each corner takes its opposite midpoint's label
    REQUIRE(got[0].at("f") == 3);
    REQUIRE(got[0].at("a") == 2);
    REQUIRE(got[0].at("c") == 3);
    REQUIRE(got[0].at("e") == 1);
    auto scanned = oracle::proper_labelings(closed, {{"b", 1}, {"d", 2}});
    REQUIRE(scanned.size() == 1);
    REQUIRE(got[0].label == scanned[0]);
  }

  SECTION("improper pins are rejected") {
    REQUIRE_THROWS_AS(proper_labelings(open, {{"q", 1}, {"n", 1}}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(proper_labelings(open, {{"q", 0}}), std::invalid_argument);
  }
}

TEST_CASE("signing derivations reproduce the worked variants") {
  EmbeddedGraph g = open_minimal();
  std::vector<SigningRow> rows = all_signings(g);
  REQUIRE(rows.size() == 16);

  auto row = [&](const std::string& label) -> const SigningRow& {
    for (const SigningRow& r : rows)
      if (r.row_label == label) return r;
    FAIL("no row " + label);
    return rows.front();
  };

  SECTION("variant 2") {
    const SigningRow& r = row("2");
    REQUIRE(g.dart_name(r.pair.into_tail) == "t>q");
    REQUIRE(g.dart_name(r.pair.out_of_head) == "m>d");
    REQUIRE(r.signing.labeling.at("t") == 2);
    REQUIRE(r.signing.labeling.at("p") == 3);
    REQUIRE(r.signing.labeling.at("c") == 3);
    REQUIRE(r.signing.labeling.at("d") == 1);
    REQUIRE(table_of(r.signing) == "qm=12 mn=23 nq=31 tq=21 qp=13 cm=32 md=21");
  }

  SECTION("variant 1") {
    const SigningRow& r = row("1");
    REQUIRE(table_of(r.signing) == "qm=12 mn=23 nq=31 tq=21 qp=13 mc=21 dm=32");
  }

  SECTION("variant 9.1") {
    const SigningRow& r = row("9.1");
    REQUIRE(r.signing.labeling.at("t") == 2);
    REQUIRE(r.signing.labeling.at("c") == 1);
    REQUIRE(table_of(r.signing) == "qm=12 nm=32 qn=13 tq=21 pq=31 mc=21 md=23");
  }

  SECTION("row labels follow the sub-numbering") {
    std::vector<std::string> labels;
    for (const SigningRow& r : rows) labels.push_back(r.row_label);
    REQUIRE(labels == std::vector<std::string>{"1", "2", "3.1", "3.2", "4", "5",
                                               "6.1", "6.2", "7.1", "7.2", "8.1",
                                               "8.2", "9.1", "9.2", "9.3", "9.4"});
  }

  SECTION("per-variant multiplicities") {
    std::vector<int> mult(9, 0);
    for (const SigningRow& r : rows) ++mult[r.variant_index - 1];
    REQUIRE(mult == std::vector<int>{1, 1, 2, 1, 1, 2, 2, 2, 4});
  }

  SECTION("gamma1 is always the pinned pair") {
    for (const SigningRow& r : rows) {
      REQUIRE(r.signing.gamma1() == std::make_pair(1, 2));
      REQUIRE(r.signing.labeling.at("q") == 1);
      REQUIRE(r.signing.labeling.at("m") == 2);
    }
  }

  SECTION("pair coordinates are always distinct") {
    for (const SigningRow& r : rows)
      for (const auto& [first, second] : r.signing.pairs) REQUIRE(first != second);
  }

  SECTION("middle-face pairs are pairwise distinct") {
    for (const SigningRow& r : rows) {
      REQUIRE(r.signing.gamma1() != r.signing.beta1());
      REQUIRE(r.signing.beta1() != r.signing.kappa1());
      REQUIRE(r.signing.kappa1() != r.signing.gamma1());
    }
  }
}

TEST_CASE("each derivation is the unique constrained labeling") {
  EmbeddedGraph g = open_minimal();
  std::vector<Labeling> candidates = proper_labelings(g, {{"q", 1}, {"m", 2}});
  REQUIRE(candidates.size() == 4);

  for (const SigningRow& r : all_signings(g)) {
    std::vector<Labeling> survivors;
    for (const Labeling& cand : candidates)
      if (cand.label[r.pair.into_tail.tail] == cand.at("m") &&
          cand.label[r.pair.out_of_head.head] == cand.at("q"))
        survivors.push_back(cand);
    REQUIRE(survivors.size() == 1);
    REQUIRE(survivors[0] == r.signing.labeling);
  }
}

TEST_CASE("derive_signing rejects pairs from other variants") {
  EmbeddedGraph g = open_minimal();
  std::vector<OpenVariant> variants = enumerate_open_variants(g, g.directed("q", "m"));
  DistanceOnePair foreign{g.directed("p", "q"), g.directed("m", "c")};
  REQUIRE_THROWS_AS(derive_signing(g, variants[1], foreign), std::invalid_argument);
}

TEST_CASE("properness on the conjugate graph") {
  EmbeddedGraph g = open_minimal();
  ConjugateGraph cg = restricted_line_graph(g, {"q", "m"});
  std::vector<SigningRow> rows = all_signings(g);

  SECTION("all sixteen signings are proper") {
    for (const SigningRow& r : rows)
      REQUIRE(check_proper_on_conjugate(r.signing, cg));
  }

  SECTION("equal pairs on non-adjacent nodes are allowed") {
    const Signing& s = rows[1].signing;  // variant 2: tq=21 and md=21 coincide
    REQUIRE(s.pairs[3] == s.pairs[6]);
    REQUIRE(check_proper_on_conjugate(s, cg));
  }

  SECTION("equal pairs on adjacent nodes are flagged") {
    Signing bad = rows[1].signing;
    bad.pairs[1] = bad.pairs[0];  // qm and mn share an endpoint
    REQUIRE_FALSE(check_proper_on_conjugate(bad, cg));
  }

  SECTION("a non-matching conjugate graph is rejected") {
    std::set<VertexId> all(g.vertex_names().begin(), g.vertex_names().end());
    ConjugateGraph full = restricted_line_graph(g, all);
    REQUIRE_THROWS_AS(check_proper_on_conjugate(rows[0].signing, full),
                      std::invalid_argument);
  }
}

TEST_CASE("free edge resolutions") {
  EmbeddedGraph g = open_minimal();
  std::vector<SigningRow> rows = all_signings(g);

  auto cells = [&](const Signing& s) {
    std::vector<std::string> out;
    for (const auto& choice : free_edge_resolutions(s).choices)
      for (const FreeEdgeChoice& c : choice)
        out.push_back(g.vertex_name(c.dart.tail) + g.vertex_name(c.dart.head) + "=" +
                      std::to_string(c.pair.first) + std::to_string(c.pair.second));
    return out;
  };

  SECTION("variant 2: both directions of tp and cd") {
    REQUIRE(cells(rows[1].signing) ==
            std::vector<std::string>{"tp=23", "pt=32", "cd=31", "dc=13"});
  }

  SECTION("variant 1 gives cd pairs 13 and 31") {
    REQUIRE(cells(rows[0].signing) ==
            std::vector<std::string>{"tp=23", "pt=32", "cd=13", "dc=31"});
  }

  SECTION("resolutions always use distinct coordinates") {
    for (const SigningRow& r : rows)
      for (const auto& choice : free_edge_resolutions(r.signing).choices)
        for (const FreeEdgeChoice& c : choice) REQUIRE(c.pair.first != c.pair.second);
  }
}
