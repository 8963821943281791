#include <doctest.h>

#include <algorithm>
#include <memory>
#include <random>
#include <set>

#include "comgraph/commuting_graph.hpp"
#include "comgraph/errors.hpp"
#include "comgraph/witnesses.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace comgraph;
using testing::kNegInf;
using testing::mat;
using testing::sr;
using testing::t;
using testing::tmat;

namespace {

// Independent edge check for a tropical path: plain max-plus products on
// doubles, with -inf as the bottom.
bool oracle_tropical_commute(const TropicalMatrix& a, const TropicalMatrix& b) {
  const std::size_t n = a.dim();
  auto prod = [n](const TropicalMatrix& x, const TropicalMatrix& y) {
    std::vector<TropicalScalar> out;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        TropicalScalar acc;
        for (std::size_t k = 0; k < n; ++k) {
          const auto& p = x(i, k);
          const auto& q = y(k, j);
          if (p.is_bottom() || q.is_bottom()) continue;
          TropicalScalar s(mpq_class(p.value() + q.value()));
          if (acc.is_bottom() || acc.value() < s.value()) acc = s;
        }
        out.push_back(acc);
      }
    return out;
  };
  return prod(a, b) == prod(b, a);
}

void check_tropical_path(const TropicalPath& p, const TropicalMatrix& x, const TropicalMatrix& y) {
  REQUIRE_FALSE(p.vertices.empty());
  CHECK(p.vertices.front() == x);
  CHECK(p.vertices.back() == y);
  CHECK(p.length() <= 4);
  CHECK(validate_path(p));
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    CHECK_FALSE(p.vertices[i] == p.vertices[i + 1]);
    CHECK(oracle_tropical_commute(p.vertices[i], p.vertices[i + 1]));
    CHECK_FALSE(is_central(p.vertices[i]));
  }
}

TropicalMatrix random_tropical(std::mt19937_64& rng, std::size_t n, bool diagonal) {
  static const long grid[] = {-2, -1, 0, 1, 2, 3};
  TropicalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (diagonal && i != j) continue;
      const auto r = rng() % 8;
      m.set(i, j, r < 6 ? TropicalScalar(grid[r]) : TropicalScalar::bottom());
    }
  return m;
}

}  // namespace

TEST_CASE("boolean witness pairs") {
  const auto b = sr("boolean");
  const auto [a3, b3] = boolean_witness_pair(3);
  CHECK(a3 == mat(b, 3, {0, 0, 1, 0, 0, 0, 1, 1, 0}));
  CHECK(b3 == mat(b, 3, {1, 0, 0, 0, 0, 1, 0, 0, 0}));

  const auto [a4, b4] = boolean_witness_pair(4);
  CHECK(a4 == mat(b, 4, {0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0}));
  CHECK(b4 == mat(b, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}));

  CHECK_THROWS_AS(boolean_witness_pair(2), DomainError);
}

TEST_CASE("block witnesses stay at distance at least 4 for n = 5") {
  const auto [a, bm] = boolean_witness_pair(5);
  CHECK_FALSE(commutes(a, bm));
  // Spot check of the block shape.
  CHECK(a(0, 4).index() == 1);
  CHECK(a(4, 0).index() == 1);
  CHECK(a(4, 3).index() == 1);
  CHECK(bm(0, 0).index() == 1);
  CHECK(bm(3, 4).index() == 1);
  CHECK(bm(4, 4).index() == 0);
}

TEST_CASE("expected neighbor sets at n = 3") {
  const auto b = sr("boolean");
  const auto [sa, sb] = expected_neighbor_sets_n3();
  CHECK(sa.size() == 5);
  CHECK(sb.size() == 5);
  CHECK(std::find(sa.begin(), sa.end(), mat(b, 3, {1, 1, 0, 0, 0, 0, 0, 0, 1})) != sa.end());
  CHECK(std::find(sb.begin(), sb.end(), mat(b, 3, {1, 0, 0, 0, 0, 0, 0, 0, 0})) != sb.end());
  for (const auto& m : sa) CHECK(std::find(sb.begin(), sb.end(), m) == sb.end());
  CHECK(std::is_sorted(sa.begin(), sa.end()));
  CHECK(std::is_sorted(sb.begin(), sb.end()));

  // Compare with the oracle's neighborhoods in the full graph.
  const auto t = oracle::boolean();
  const auto [wa, wb] = boolean_witness_pair(3);
  const auto cen = oracle::center(t, 3);
  auto oracle_neighbors = [&](const Matrix& m) {
    std::vector<oracle::Mat> out;
    for (const auto& x : oracle::all_matrices(2, 3)) {
      if (x == testing::ints(m) || std::find(cen.begin(), cen.end(), x) != cen.end()) continue;
      if (oracle::commute(t, x, testing::ints(m), 3)) out.push_back(x);
    }
    return out;
  };
  std::vector<oracle::Mat> ia, ib;
  for (const auto& m : sa) ia.push_back(testing::ints(m));
  for (const auto& m : sb) ib.push_back(testing::ints(m));
  CHECK(oracle_neighbors(wa) == ia);
  CHECK(oracle_neighbors(wb) == ib);
}

TEST_CASE("centralizers of J_n and its transpose meet in the scalars") {
  for (const std::string name : {"boolean", "modular:4", "chain:3", "modular:6"}) {
    CAPTURE(name);
    const auto s = sr(name);
    const auto inter = jn_centralizer_intersection(s, 2);
    CHECK(inter.size() == s->order());
    for (const auto& m : inter) CHECK(is_scalar(m));
  }
  const auto b3 = jn_centralizer_intersection(sr("boolean"), 3);
  CHECK(b3.size() == 2);
  const auto [j, jt] = jn_pair(sr("boolean"), 3);
  CHECK(j == transpose(jt));
  CHECK(j == jordan(sr("boolean"), 3));
}

TEST_CASE("d(J_2, J_2^T) over B is 3") {
  // The BFS oracle gives 3: E12 - (I+E12) - (I+E21) - E21.
  const auto g = oracle::full_graph(oracle::boolean(), 2);
  const auto [j, jt] = jn_pair(sr("boolean"), 2);
  int ij = -1, ijt = -1;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v] == testing::ints(j)) ij = static_cast<int>(v);
    if (g.vertices[v] == testing::ints(jt)) ijt = static_cast<int>(v);
  }
  REQUIRE(ij >= 0);
  REQUIRE(ijt >= 0);
  CHECK(oracle::bfs(g, ij)[ijt] == 3);
  CHECK(oracle::diameter(g) == oracle::kInf);
}

TEST_CASE("tropical_connect through a repeated diagonal") {
  const TropicalMatrix x = tropical_diagonal(std::vector<TropicalScalar>{t(0), t(0), t(5)});
  const TropicalMatrix e = tropical_special(SpecialKind::kAllUnits, 3);
  const auto c = tropical_connect(x, e);
  REQUIRE(c.path.length() == 2);
  CHECK(c.path.vertices[1] == tmat(3, {t(0), t(0), kNegInf, t(0), t(0), kNegInf, kNegInf, kNegInf, t(0)}));
  CHECK(c.routes == std::vector<TropicalRoute>{TropicalRoute::kRepeatedDiagonal});
  check_tropical_path(c.path, x, e);
}

TEST_CASE("tropical_connect through a shifted non-diagonal matrix") {
  const TropicalMatrix x = tmat(3, {t(1), t(4), kNegInf, t(0), t(2), t(-1), kNegInf, t(3), t(0)});
  const TropicalMatrix e = tropical_special(SpecialKind::kAllUnits, 3);
  const auto c = tropical_connect(x, e);
  REQUIRE(c.path.length() == 2);
  CHECK(c.path.vertices[1] == mat_add(x, scale(t(4), tropical_special(SpecialKind::kIdentity, 3))));
  CHECK(c.routes == std::vector<TropicalRoute>{TropicalRoute::kNonDiagonal});
  check_tropical_path(c.path, x, e);
}

TEST_CASE("tropical_connect from distinct diagonal entries") {
  const TropicalMatrix x = tropical_diagonal(std::vector<TropicalScalar>{t(0), t(1), t(2)});
  const TropicalMatrix y = tmat(3, {kNegInf, t(1), t(0), t(0), kNegInf, kNegInf, kNegInf, t(0), kNegInf});
  const auto c = tropical_connect(x, y);
  check_tropical_path(c.path, x, y);
  const auto back = tropical_connect(y, x);
  check_tropical_path(back.path, y, x);

  // An all-finite target takes the literal route.
  const TropicalMatrix f = tmat(3, {t(0), t(1), t(2), t(-1), t(0), t(3), t(1), t(1), t(0)});
  const auto cf = tropical_connect(x, f);
  check_tropical_path(cf.path, x, f);
  CHECK(cf.routes == std::vector<TropicalRoute>{TropicalRoute::kDistinctDiagonal});
}

TEST_CASE("tropical_connect trivial cases and errors") {
  const TropicalMatrix d1 = tropical_diagonal(std::vector<TropicalScalar>{t(0), t(1), t(2)});
  const TropicalMatrix d2 = tropical_diagonal(std::vector<TropicalScalar>{t(3), kNegInf, t(2)});
  const auto c = tropical_connect(d1, d2);
  CHECK(c.path.length() == 1);
  CHECK(c.routes == std::vector<TropicalRoute>{TropicalRoute::kDirect});
  CHECK(tropical_connect(d1, d1).path.length() == 0);

  const TropicalMatrix scalar = scale(t(2), tropical_special(SpecialKind::kIdentity, 3));
  CHECK_THROWS_AS(tropical_connect(scalar, d1), DomainError);
  const TropicalMatrix small = tropical_diagonal(std::vector<TropicalScalar>{t(0), t(1)});
  CHECK_THROWS_AS(tropical_connect(small, small), DomainError);
}

TEST_CASE("tropical_connect on random pairs") {
  std::mt19937_64 rng(99);
  for (std::size_t n : {3U, 4U}) {
    for (int trial = 0; trial < 150; ++trial) {
      const TropicalMatrix x = random_tropical(rng, n, trial % 3 == 0);
      const TropicalMatrix y = random_tropical(rng, n, trial % 5 == 0);
      if (is_central(x) || is_central(y)) continue;
      const auto c = tropical_connect(x, y);
      check_tropical_path(c.path, x, y);
    }
  }
}

TEST_CASE("tropical eigenvectors") {
  const TropicalMatrix y = tmat(3, {kNegInf, t(1), t(0), t(0), kNegInf, kNegInf, kNegInf, t(0), kNegInf});
  // Cycles: 0->1->0 weight 1 (mean 1/2), 0->2->1->0 weight 0.
  CHECK(max_cycle_mean(y) == TropicalScalar(mpq_class(1, 2)));
  const auto [u, v] = common_eigenvectors(y);
  const auto lam = max_cycle_mean(y);
  for (std::size_t i = 0; i < 3; ++i) {
    TropicalScalar yu, vy;
    for (std::size_t k = 0; k < 3; ++k) {
      yu = oplus(yu, otimes(y(i, k), u[k]));
      vy = oplus(vy, otimes(v[k], y(k, i)));
    }
    CHECK(yu == otimes(lam, u[i]));
    CHECK(vy == otimes(lam, v[i]));
  }
  const TropicalMatrix acyclic = tmat(3, {kNegInf, t(1), kNegInf, kNegInf, kNegInf, t(2), kNegInf, kNegInf, kNegInf});
  CHECK(max_cycle_mean(acyclic).is_bottom());
}

TEST_CASE("nonentire_connect cases over Z_4") {
  const auto z4 = sr("modular:4");
  MatrixSpace space(z4, 2);

  SUBCASE("both shifted matrices non-central") {
    const Matrix a = mat(z4, 2, {1, 1, 0, 1});
    const Matrix b = mat(z4, 2, {1, 0, 1, 1});
    const auto c = nonentire_connect(space, a, b);
    CHECK(c.which == NonentireCase::kBothNoncentral);
    REQUIRE(c.path.length() == 3);
    CHECK(c.path.vertices[1] == mat(z4, 2, {2, 2, 0, 2}));
    CHECK(c.path.vertices[2] == mat(z4, 2, {2, 0, 2, 2}));
    CHECK(validate_path(space, c.path));
  }
  SUBCASE("first shifted matrix central") {
    const Matrix a = mat(z4, 2, {1, 0, 0, 3});
    const Matrix b = mat(z4, 2, {1, 0, 1, 1});
    const auto c = nonentire_connect(space, a, b);
    CHECK(c.which == NonentireCase::kFirstCentral);
    REQUIRE(c.path.length() == 3);
    CHECK(c.path.vertices[1] == mat(z4, 2, {0, 2, 0, 0}));
    CHECK(c.path.vertices[2] == mat(z4, 2, {2, 0, 2, 2}));
    CHECK(validate_path(space, c.path));
  }
  SUBCASE("both central collapses to length 2") {
    const Matrix a = mat(z4, 2, {1, 0, 0, 3});
    const Matrix b = mat(z4, 2, {3, 0, 0, 1});
    const auto c = nonentire_connect(space, a, b);
    CHECK(c.which == NonentireCase::kBothCentral);
    REQUIRE(c.path.length() == 2);
    CHECK(c.path.vertices[1] == mat(z4, 2, {0, 2, 0, 0}));
    CHECK(validate_path(space, c.path));
  }
  SUBCASE("entire semirings are rejected") {
    MatrixSpace b2(sr("boolean"), 2);
    CHECK_THROWS_AS(nonentire_connect(b2, unit_matrix(sr("boolean"), 2, 0, 1), unit_matrix(sr("boolean"), 2, 1, 0)),
                    DomainError);
  }
  SUBCASE("central endpoints are rejected") {
    CHECK_THROWS_AS(nonentire_connect(space, identity(z4, 2), mat(z4, 2, {1, 0, 1, 1})), DomainError);
  }
}

TEST_CASE("nonentire paths are at least as long as graph distance") {
  const auto sp = std::make_shared<const MatrixSpace>(sr("modular:6"), 2);
  const auto g = CommutingGraph::build(sp);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const VertexId u = rng() % g.vertex_count(), v = rng() % g.vertex_count();
    const auto c = nonentire_connect(*sp, g.matrix(u), g.matrix(v));
    CHECK(validate_path(*sp, c.path));
    CHECK(c.path.length() >= *distance(g, u, v).value);
    CHECK(c.path.length() <= 3);
  }
}

TEST_CASE("validate_path rejects broken paths") {
  const auto b = sr("boolean");
  MatrixSpace space(b, 3);
  const auto [wa, wb] = boolean_witness_pair(3);
  FinitePath p{"manual", {wa, wb}, 4};
  CHECK_FALSE(validate_path(space, p));
  FinitePath central{"manual", {wa, identity(b, 3)}, 4};
  CHECK_FALSE(validate_path(space, central));
  FinitePath repeat{"manual", {wa, wa}, 4};
  CHECK_FALSE(validate_path(space, repeat));
  const Matrix e = all_units(b, 3);
  FinitePath too_long{"manual", {e, wa}, 0};
  CHECK_FALSE(validate_path(space, too_long));
}
