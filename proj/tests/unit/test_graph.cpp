#include <doctest.h>

#include <memory>
#include <random>
#include <sstream>

#include "comgraph/commuting_graph.hpp"
#include "comgraph/errors.hpp"
#include "comgraph/witnesses.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace comgraph;
using testing::mat;
using testing::sr;

namespace {

std::shared_ptr<const MatrixSpace> space_of(const std::string& name, std::size_t n) {
  return std::make_shared<const MatrixSpace>(sr(name), n);
}

oracle::Table table_of(const std::string& name) {
  if (name == "boolean") return oracle::boolean();
  if (name.rfind("modular:", 0) == 0) return oracle::modular(std::stoi(name.substr(8)));
  return oracle::chain(std::stoi(name.substr(6)));
}

GraphOptions with_workers(unsigned w, GraphMode mode = GraphMode::kMaterialized) {
  GraphOptions o;
  o.workers = w;
  o.mode = mode;
  return o;
}

}  // namespace

TEST_CASE("vertex counts") {
  CHECK(CommutingGraph::build(space_of("boolean", 3)).vertex_count() == 510);
  CHECK(CommutingGraph::build(space_of("boolean", 2)).vertex_count() == 14);
  CHECK(CommutingGraph::build(space_of("modular:4", 2)).vertex_count() == 252);
}

TEST_CASE("adjacency is symmetric, loop-free and equals the commute predicate") {
  for (const std::string name : {"boolean", "modular:4", "chain:3"}) {
    const auto sp = space_of(name, 2);
    const auto g = CommutingGraph::build(sp, with_workers(3));
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        if (u != v) CHECK(g.adjacent(u, v) == commutes(g.matrix(u), g.matrix(v)));
      }
    }
  }
}

TEST_CASE("implicit neighborhoods equal materialized rows on M_2(Z_4)") {
  const auto sp = space_of("modular:4", 2);
  const auto m = CommutingGraph::build(sp);
  const auto i = CommutingGraph::build(sp, with_workers(1, GraphMode::kImplicit));
  REQUIRE(m.materialized());
  REQUIRE_FALSE(i.materialized());
  REQUIRE(m.vertex_count() == i.vertex_count());
  for (VertexId v = 0; v < m.vertex_count(); ++v) CHECK(m.neighbors(v) == i.neighbors(v));
}

TEST_CASE("diameter equals the naive all-pairs oracle") {
  struct Case {
    std::string name;
    int n;
  };
  for (const Case& c : {Case{"boolean", 2}, Case{"boolean", 3}, Case{"modular:4", 2}, Case{"modular:3", 2},
                        Case{"chain:3", 2}, Case{"modular:2", 2}}) {
    CAPTURE(c.name);
    CAPTURE(c.n);
    const auto og = oracle::full_graph(table_of(c.name), c.n);
    const int expect = oracle::diameter(og);
    const auto g = CommutingGraph::build(space_of(c.name, c.n));
    REQUIRE(g.vertex_count() == og.vertices.size());
    const auto d = diameter(g);
    if (expect == oracle::kInf) {
      CHECK(d.distance.infinite());
    } else {
      REQUIRE_FALSE(d.distance.infinite());
      CHECK(static_cast<int>(*d.distance.value) == expect);
      // the witness path realizes the value
      CHECK(d.distance.path.size() == *d.distance.value + 1);
      CHECK(d.distance.path.front() == d.from);
      CHECK(d.distance.path.back() == d.to);
    }
  }
}

TEST_CASE("frozen diameters") {
  CHECK(*diameter(CommutingGraph::build(space_of("boolean", 3))).distance.value == 4);
  CHECK(diameter(CommutingGraph::build(space_of("boolean", 2))).distance.infinite());
  CHECK(*diameter(CommutingGraph::build(space_of("modular:4", 2))).distance.value == 3);
  CHECK(*diameter(CommutingGraph::build(space_of("modular:6", 2))).distance.value == 3);
}

TEST_CASE("diameter result does not depend on the worker count") {
  for (const std::string name : {"boolean", "modular:4"}) {
    const std::size_t n = name == "boolean" ? 3 : 2;
    const auto sp = space_of(name, n);
    const auto base = diameter(CommutingGraph::build(sp, with_workers(1)));
    for (unsigned w : {2U, 3U, 5U}) {
      const auto d = diameter(CommutingGraph::build(sp, with_workers(w)));
      CHECK(d.distance.value == base.distance.value);
      CHECK(d.from == base.from);
      CHECK(d.to == base.to);
      CHECK(d.distance.path == base.distance.path);
    }
  }
}

TEST_CASE("realizing pair is the least pair at maximum distance") {
  const auto og = oracle::full_graph(oracle::modular(4), 2);
  const auto g = CommutingGraph::build(space_of("modular:4", 2));
  const auto d = diameter(g);
  int first_u = -1, first_v = -1;
  for (std::size_t u = 0; u < og.adj.size() && first_u < 0; ++u) {
    const auto dist = oracle::bfs(og, static_cast<int>(u));
    for (std::size_t v = u + 1; v < og.adj.size(); ++v)
      if (dist[v] == 3) {
        first_u = static_cast<int>(u);
        first_v = static_cast<int>(v);
        break;
      }
  }
  CHECK(static_cast<int>(d.from) == first_u);
  CHECK(static_cast<int>(d.to) == first_v);
}

TEST_CASE("distances are symmetric and satisfy the triangle inequality") {
  const auto g = CommutingGraph::build(space_of("boolean", 3));
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const VertexId a = rng() % g.vertex_count(), b = rng() % g.vertex_count(), c = rng() % g.vertex_count();
    const auto ab = distance(g, a, b), ba = distance(g, b, a);
    CHECK(ab.value == ba.value);
    const auto bc = distance(g, b, c), ac = distance(g, a, c);
    CHECK(*ac.value <= *ab.value + *bc.value);
    for (std::size_t i = 0; i + 1 < ab.path.size(); ++i) CHECK(g.adjacent(ab.path[i], ab.path[i + 1]));
  }
}

TEST_CASE("distance examples over B") {
  const auto b = sr("boolean");
  const auto g3 = CommutingGraph::build(space_of("boolean", 3));
  const auto [j, jt] = jn_pair(b, 3);
  CHECK(*distance(g3, j, jt).value == 3);
  const auto [wa, wb] = boolean_witness_pair(3);
  CHECK(*distance(g3, wa, wb).value == 4);
  const Matrix e = all_units(b, 3);
  for (VertexId v = 0; v < g3.vertex_count(); ++v) CHECK(*distance(g3, g3.matrix(v), e).value <= 2);

  const auto g2 = CommutingGraph::build(space_of("boolean", 2));
  const auto [j2, j2t] = jn_pair(b, 2);
  // E12 - (I+E12) - (I+E21) - E21
  const auto d = distance(g2, j2, j2t);
  CHECK(*d.value == 3);
  CHECK(g2.matrix(d.path[1]) == mat(b, 2, {1, 1, 0, 1}));
  CHECK(g2.matrix(d.path[2]) == mat(b, 2, {1, 0, 1, 1}));
}

TEST_CASE("distance rejects non-vertices") {
  const auto g = CommutingGraph::build(space_of("boolean", 3));
  const auto b = sr("boolean");
  CHECK_THROWS_AS(distance(g, identity(b, 3), all_units(b, 3)), DomainError);
}

TEST_CASE("components") {
  const auto g2 = CommutingGraph::build(space_of("boolean", 2));
  const auto comps = connected_components(g2);
  CHECK(comps.size() == 2);
  CHECK(comps[0].size() + comps[1].size() == 14);
  CHECK(connected_components(CommutingGraph::build(space_of("boolean", 3))).size() == 1);
}

TEST_CASE("nilpotent 2x2 subset graphs") {
  for (const std::string name : {"boolean", "chain:3", "chain:4"}) {
    CAPTURE(name);
    const auto sp = space_of(name, 2);
    const auto g = CommutingGraph::build_subset(sp, nilpotent_codes(*sp));
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) {
      CHECK(c.size() == sp->semiring()->order() - 1);
      for (auto u : c)
        for (auto v : c)
          if (u != v) CHECK(g.adjacent(u, v));
    }
  }
  const auto sp = space_of("boolean", 2);
  const auto g = CommutingGraph::build_subset(sp, nilpotent_codes(*sp));
  CHECK(g.matrix(0) == unit_matrix(sr("boolean"), 2, 1, 0));
  CHECK(g.matrix(1) == unit_matrix(sr("boolean"), 2, 0, 1));
}

TEST_CASE("degenerate graphs have no diameter") {
  const auto g = CommutingGraph::build(space_of("modular:5", 1));
  CHECK(g.vertex_count() == 0);
  CHECK_THROWS_AS(diameter(g), DomainError);
  const auto implicit = CommutingGraph::build(space_of("boolean", 2), with_workers(1, GraphMode::kImplicit));
  CHECK_THROWS_AS(diameter(implicit), DomainError);
}

TEST_CASE("materialization respects the memory cap") {
  GraphOptions o;
  o.memory_cap_bytes = 1024;
  CHECK_THROWS_AS(CommutingGraph::build(space_of("boolean", 3), o), BudgetExceeded);
}

TEST_CASE("distance-4 certificate") {
  const auto b = sr("boolean");
  MatrixSpace s3(b, 3);
  const auto [a3, b3] = boolean_witness_pair(3);
  const auto c3 = certify_distance_ge4(s3, a3, b3, 2);
  CHECK(c3.holds);
  CHECK(c3.neighbors_a == 5);
  CHECK(c3.neighbors_b == 5);
  CHECK(c3.cross_pairs_checked == 25);
  CHECK(c3.cross_pairs_commuting == 0);
  CHECK(c3.scanned == 512);

  CHECK_THROWS_AS(certify_distance_ge4(s3, a3, a3), DomainError);
  CHECK_THROWS_AS(certify_distance_ge4(s3, identity(b, 3), a3), DomainError);
  CHECK_THROWS_AS(certify_distance_ge4(s3, a3, mat_add(a3, identity(b, 3))), DomainError);

  // J_3 and J_3^T are at distance 3, so the certificate must fail.
  const auto [j, jt] = jn_pair(b, 3);
  const auto cj = certify_distance_ge4(s3, j, jt);
  CHECK_FALSE(cj.holds);
  CHECK(cj.counterexample.has_value());
}

TEST_CASE("certificate agrees with BFS on random pairs of M_3(B)") {
  const auto sp = space_of("boolean", 3);
  const auto g = CommutingGraph::build(sp);
  std::mt19937_64 rng(23);
  int certified = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const VertexId u = rng() % g.vertex_count(), v = rng() % g.vertex_count();
    if (u == v || g.adjacent(u, v)) continue;
    const auto cert = certify_distance_ge4(*sp, g.matrix(u), g.matrix(v));
    const auto d = distance(g, u, v);
    CHECK(cert.holds == (*d.value >= 4));
    certified += cert.holds;
  }
  const auto [a, b] = boolean_witness_pair(3);
  CHECK(certify_distance_ge4(*sp, a, b).holds);
}

TEST_CASE("export formats") {
  const auto g = CommutingGraph::build(space_of("boolean", 2));
  std::ostringstream dot;
  export_graph(g, ExportFormat::kDot, dot);
  const std::string d = dot.str();
  std::size_t node_lines = 0, edge_lines = 0;
  std::istringstream in(d);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("[label=") != std::string::npos) ++node_lines;
    if (line.find(" -- ") != std::string::npos) ++edge_lines;
  }
  CHECK(d.rfind("graph commuting {", 0) == 0);
  CHECK(node_lines == 14);

  std::ostringstream csv;
  export_graph(g, ExportFormat::kCsvEdges, csv);
  std::istringstream cin(csv.str());
  std::getline(cin, line);
  CHECK(line == "u,v");
  std::size_t rows = 0;
  std::pair<std::uint64_t, std::uint64_t> prev{0, 0};
  while (std::getline(cin, line)) {
    const auto comma = line.find(',');
    const std::uint64_t u = std::stoull(line.substr(0, comma)), v = std::stoull(line.substr(comma + 1));
    CHECK(u < v);
    if (rows > 0) CHECK(prev < std::pair(u, v));
    prev = {u, v};
    ++rows;
  }
  CHECK(rows == edge_lines);

  std::ostringstream again;
  export_graph(g, ExportFormat::kDot, again);
  CHECK(again.str() == d);

  const auto empty = CommutingGraph::build(space_of("boolean", 1));
  std::ostringstream e1, e2;
  export_graph(empty, ExportFormat::kDot, e1);
  export_graph(empty, ExportFormat::kCsvEdges, e2);
  CHECK(e1.str() == "graph commuting {\n}\n");
  CHECK(e2.str() == "u,v\n");
}
