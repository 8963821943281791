#include "comgraph/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <set>

#include "comgraph/commuting_graph.hpp"
#include "comgraph/errors.hpp"
#include "comgraph/matrix_space.hpp"
#include "comgraph/witnesses.hpp"

namespace comgraph {

const char* status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kIncomplete:
      return "incomplete";
    case CheckStatus::kCrossReference:
      return "cross-reference";
  }
  return "?";
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.table().name_of(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json matrix_json(const TropicalMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

bool uniform_line_maxima(const TropicalMatrix& a) {
  const std::size_t n = a.dim();
  std::optional<TropicalScalar> common;
  auto agree = [&](const TropicalScalar& m) {
    if (!common) common = m;
    return *common == m;
  };
  for (std::size_t i = 0; i < n; ++i) {
    TropicalScalar row, col;
    for (std::size_t j = 0; j < n; ++j) {
      row = oplus(row, a(i, j));
      col = oplus(col, a(j, i));
    }
    if (!agree(row) || !agree(col)) return false;
  }
  return true;
}

ordered_json to_json(const VerificationReport& report, bool include_timing) {
  ordered_json out;
  out["theorem"] = report.theorem;
  out["status"] = status_name(report.status);
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json j;
    j["name"] = c.name;
    j["status"] = status_name(c.status);
    j["counters"] = c.counters;
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  out["seed"] = report.seed;
  if (include_timing) out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

namespace {

SemiringPtr named(std::string_view name) {
  if (name == "boolean") return boolean_semiring();
  const auto spec = parse_builtin_name(name);
  if (!spec) throw DomainError("unknown semiring '" + std::string(name) + "'");
  return make_semiring(builtin_semiring(*spec));
}

std::string label(const SemiringPtr& s, std::size_t n) { return "M_" + std::to_string(n) + "(" + s->name() + ")"; }

ordered_json matrices_json(const std::vector<Matrix>& ms) {
  ordered_json out = ordered_json::array();
  for (const auto& m : ms) out.push_back(matrix_json(m));
  return out;
}

ordered_json distance_json(const DistanceResult& d) {
  if (d.infinite()) return "inf";
  return *d.value;
}

// Collects checks; every failing check must carry a counterexample.
class Recorder {
 public:
  Recorder(VerificationReport& report, const VerifyOptions& options) : report_(report), options_(options) {}

  const VerifyOptions& options() const { return options_; }

  void run(const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult check;
    check.name = name;
    try {
      body(check);
    } catch (const BudgetExceeded& e) {
      check.status = CheckStatus::kIncomplete;
      check.counters["reason"] = e.what();
    } catch (const std::exception& e) {
      check.status = CheckStatus::kFail;
      check.counterexample = ordered_json{{"error", e.what()}};
    }
    if (check.status == CheckStatus::kFail && !check.counterexample) {
      check.counterexample = ordered_json{{"error", "check failed without a recorded instance"}};
    }
    report_.checks.push_back(std::move(check));
  }

  /// Space for M_n(S) or BudgetExceeded when it is larger than the budget.
  std::shared_ptr<const MatrixSpace> space(const SemiringPtr& s, std::size_t n) const {
    return std::make_shared<const MatrixSpace>(s, n, options_.budget);
  }

  CommutingGraph graph(const std::shared_ptr<const MatrixSpace>& space) const {
    GraphOptions go;
    go.memory_cap_bytes = options_.memory_cap_bytes;
    go.workers = options_.workers;
    return CommutingGraph::build(space, go);
  }

 private:
  VerificationReport& report_;
  const VerifyOptions& options_;
};

void fail_with(CheckResult& check, ordered_json counterexample) {
  if (check.status != CheckStatus::kFail) {
    check.status = CheckStatus::kFail;
    check.counterexample = std::move(counterexample);
  }
}

// First element of the symmetric difference of two sorted sets.
std::optional<ordered_json> set_difference_witness(const std::vector<Matrix>& lhs, const std::vector<Matrix>& rhs,
                                                   const char* lhs_name, const char* rhs_name) {
  std::vector<Matrix> only_lhs, only_rhs;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(only_lhs));
  std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(), std::back_inserter(only_rhs));
  if (!only_lhs.empty()) return ordered_json{{"only_in", lhs_name}, {"matrix", matrix_json(only_lhs.front())}};
  if (!only_rhs.empty()) return ordered_json{{"only_in", rhs_name}, {"matrix", matrix_json(only_rhs.front())}};
  return std::nullopt;
}

// -- lemma-2.1 -------------------------------------------------------------

void verify_jordan_centralizer(Recorder& rec) {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"boolean", 2}, {"boolean", 3}, {"modular:4", 2}, {"chain:3", 2}};
  for (const auto& [name, n] : cases) {
    for (bool transposed : {false, true}) {
      const SemiringPtr s = named(name);
      rec.run("centralizer-" + std::string(transposed ? "JT" : "J") + "-" + label(s, n), [&](CheckResult& c) {
        rec.space(s, n);  // budget gate
        const Matrix j = transposed ? transpose(jordan(s, n)) : jordan(s, n);
        const auto enumerated = centralizer_enumerate(j, rec.options().budget);
        const auto polynomial = polynomial_centralizer_J(s, n, transposed);
        c.counters["semiring"] = s->name();
        c.counters["n"] = n;
        c.counters["enumerated"] = enumerated.size();
        c.counters["polynomial"] = polynomial.size();
        if (auto w = set_difference_witness(enumerated, polynomial, "centralizer", "polynomials")) fail_with(c, *w);
      });
    }
  }
}

// -- thm-2.2 ---------------------------------------------------------------

void verify_boolean_diameter(Recorder& rec) {
  const SemiringPtr b = boolean_semiring();

  rec.run("neighbor-sets-n3", [&](CheckResult& c) {
    const auto space = rec.space(b, 3);
    const auto [wa, wb] = boolean_witness_pair(3);
    const auto cert = certify_distance_ge4(*space, wa, wb, rec.options().workers);
    std::vector<Matrix> na, nb;
    for (auto x : cert.neighborhood_a) na.push_back(space->decode(x));
    for (auto x : cert.neighborhood_b) nb.push_back(space->decode(x));
    const auto [ea, eb] = expected_neighbor_sets_n3();
    c.counters["neighbors_a"] = cert.neighbors_a;
    c.counters["neighbors_b"] = cert.neighbors_b;
    c.counters["cross_pairs_checked"] = cert.cross_pairs_checked;
    c.counters["cross_pairs_commuting"] = cert.cross_pairs_commuting;
    if (auto w = set_difference_witness(na, ea, "computed N(A)", "displayed set for A")) fail_with(c, *w);
    if (auto w = set_difference_witness(nb, eb, "computed N(B)", "displayed set for B")) fail_with(c, *w);
    if (cert.cross_pairs_checked != 25) fail_with(c, {{"cross_pairs_checked", cert.cross_pairs_checked}});
    if (!cert.holds) {
      fail_with(c, {{"common_neighbors", cert.common_neighbors},
                    {"commuting_pair", cert.counterexample
                                           ? ordered_json::array({matrix_json(space->decode(cert.counterexample->first)),
                                                                  matrix_json(space->decode(cert.counterexample->second))})
                                           : ordered_json()}});
    }
  });

  for (std::size_t n : {3, 4}) {
    rec.run("certificate-ge4-n" + std::to_string(n), [&, n](CheckResult& c) {
      const auto space = rec.space(b, n);
      const auto [wa, wb] = boolean_witness_pair(n);
      const auto cert = certify_distance_ge4(*space, wa, wb, rec.options().workers);
      c.counters["scanned"] = cert.scanned;
      c.counters["neighbors_a"] = cert.neighbors_a;
      c.counters["neighbors_b"] = cert.neighbors_b;
      c.counters["common_neighbors"] = cert.common_neighbors;
      c.counters["cross_pairs_checked"] = cert.cross_pairs_checked;
      c.counters["cross_pairs_commuting"] = cert.cross_pairs_commuting;
      if (!cert.holds) {
        ordered_json w{{"a", matrix_json(wa)}, {"b", matrix_json(wb)}};
        if (cert.counterexample) {
          w["commuting_pair"] = ordered_json::array({matrix_json(space->decode(cert.counterexample->first)),
                                                     matrix_json(space->decode(cert.counterexample->second))});
        }
        fail_with(c, w);
      }
    });
  }

  rec.run("diameter-n3", [&](CheckResult& c) {
    const auto space = rec.space(b, 3);
    const auto g = rec.graph(space);
    const auto d = diameter(g);
    c.counters["vertices"] = g.vertex_count();
    c.counters["diameter"] = distance_json(d.distance);
    const auto [wa, wb] = boolean_witness_pair(3);
    const auto dw = distance(g, wa, wb);
    c.counters["witness_distance"] = distance_json(dw);
    if (d.distance.value != 4u) {
      fail_with(c, {{"from", matrix_json(g.matrix(d.from))}, {"to", matrix_json(g.matrix(d.to))},
                    {"distance", distance_json(d.distance)}});
    }
    if (dw.value != 4u) fail_with(c, {{"witness_distance", distance_json(dw)}});
  });

  rec.run("distance-to-all-ones-n3", [&](CheckResult& c) {
    const auto space = rec.space(b, 3);
    const auto g = rec.graph(space);
    const Matrix e = all_units(b, 3);
    std::uint32_t worst = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const auto d = distance(g, g.matrix(v), e);
      if (d.infinite() || *d.value > 2) {
        fail_with(c, {{"matrix", matrix_json(g.matrix(v))}, {"distance", distance_json(d)}});
        break;
      }
      worst = std::max(worst, *d.value);
    }
    c.counters["vertices"] = g.vertex_count();
    c.counters["max_distance"] = worst;
  });

  rec.run("disconnected-n2", [&](CheckResult& c) {
    const auto space = rec.space(b, 2);
    const auto g = rec.graph(space);
    const auto d = diameter(g);
    const auto comps = connected_components(g);
    c.counters["vertices"] = g.vertex_count();
    c.counters["components"] = comps.size();
    c.counters["diameter"] = distance_json(d.distance);
    if (!d.distance.infinite()) fail_with(c, {{"diameter", distance_json(d.distance)}});
  });
}

// -- cor-2.3 ---------------------------------------------------------------

void verify_support_corollary(Recorder& rec) {
  for (const char* name : {"chain:3", "chain:4"}) {
    const SemiringPtr s = named(name);
    rec.run("supp-functoriality-" + label(s, 2), [&](CheckResult& c) {
      const auto space = rec.space(s, 2);
      std::vector<Matrix> all;
      for (std::uint64_t x = 0; x < space->size(); ++x) all.push_back(space->decode(x));
      std::vector<Matrix> supps;
      for (const auto& m : all) supps.push_back(supp(m));
      std::uint64_t pairs = 0, commuting = 0;
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
          ++pairs;
          const Matrix& a = all[i];
          const Matrix& b = all[j];
          const bool product = supp(mat_mul(a, b)) == mat_mul(supps[i], supps[j]);
          const bool sum = supp(mat_add(a, b)) == mat_add(supps[i], supps[j]);
          bool transfer = true;
          if (commutes(a, b)) {
            ++commuting;
            transfer = commutes(supps[i], supps[j]);
          }
          if (!product || !sum || !transfer) {
            fail_with(c, {{"a", matrix_json(a)}, {"b", matrix_json(b)}, {"product", product}, {"sum", sum},
                          {"commutation", transfer}});
          }
        }
      }
      c.counters["semiring"] = s->name();
      c.counters["ordered_pairs"] = pairs;
      c.counters["commuting_pairs"] = commuting;
    });
  }

  const SemiringPtr c3 = named("chain:3");
  rec.run("diameter-" + label(c3, 3), [&](CheckResult& c) {
    const auto space = rec.space(c3, 3);
    const auto g = rec.graph(space);
    const auto d = diameter(g);
    c.counters["matrices"] = space->size();
    c.counters["vertices"] = g.vertex_count();
    c.counters["diameter"] = distance_json(d.distance);
    c.counters["realized_by"] = ordered_json::array({matrix_json(g.matrix(d.from)), matrix_json(g.matrix(d.to))});
    if (!d.distance.infinite() && *d.distance.value < 4) {
      fail_with(c, {{"from", matrix_json(g.matrix(d.from))}, {"to", matrix_json(g.matrix(d.to))},
                    {"distance", distance_json(d.distance)}});
    }
  });
}

// -- lemma-3.1 -------------------------------------------------------------

// Small grid of exact rationals plus -inf.
const std::vector<TropicalScalar>& tropical_grid() {
  static const std::vector<TropicalScalar> grid = [] {
    std::vector<TropicalScalar> g{TropicalScalar::bottom()};
    for (int num : {-4, -2, -1, 0, 1, 2, 4}) g.emplace_back(mpq_class(num, 2));
    g.emplace_back(3L);
    return g;
  }();
  return grid;
}

class TropicalSampler {
 public:
  explicit TropicalSampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_); }
  const TropicalScalar& grid_value() { return tropical_grid()[below(tropical_grid().size())]; }
  TropicalScalar finite_value() { return tropical_grid()[1 + below(tropical_grid().size() - 1)]; }

  TropicalMatrix uniform(std::size_t n) {
    TropicalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, grid_value());
    return m;
  }

  // Every row and column attains a; all other entries are at most a.
  TropicalMatrix uniform_maxima(std::size_t n) {
    const TropicalScalar a = below(8) == 0 ? TropicalScalar::bottom() : finite_value();
    TropicalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const TropicalScalar v = grid_value();
        m.set(i, j, v < a ? v : TropicalScalar::bottom());
      }
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng_);
    for (std::size_t i = 0; i < n; ++i) m.set(i, perm[i], a);
    return m;
  }

  // uniform_maxima with one entry replaced, usually breaking the pattern.
  TropicalMatrix near_miss(std::size_t n) {
    TropicalMatrix m = uniform_maxima(n);
    m.set(below(n), below(n), grid_value());
    return m;
  }

  TropicalMatrix non_diagonal(std::size_t n) {
    TropicalMatrix m = uniform(n);
    std::size_t i = below(n), j = below(n - 1);
    if (j >= i) ++j;
    m.set(i, j, finite_value());
    return m;
  }

  TropicalMatrix repeated_diagonal(std::size_t n) {
    std::vector<TropicalScalar> d(n);
    do {
      for (auto& x : d) x = grid_value();
      const std::size_t i = below(n);
      std::size_t j = below(n - 1);
      if (j >= i) ++j;
      d[j] = d[i];
    } while (std::all_of(d.begin(), d.end(), [&](const TropicalScalar& x) { return x == d[0]; }));
    return tropical_diagonal(d);
  }

  TropicalMatrix distinct_diagonal(std::size_t n) {
    std::vector<TropicalScalar> pool = tropical_grid();
    std::shuffle(pool.begin(), pool.end(), rng_);
    pool.resize(n);
    return tropical_diagonal(pool);
  }

 private:
  std::mt19937_64 rng_;
};

void verify_tropical_e_centralizer(Recorder& rec) {
  for (std::size_t n : {3, 4, 5}) {
    rec.run("random-n" + std::to_string(n), [&, n](CheckResult& c) {
      TropicalSampler sampler(rec.options().seed + n);
      const TropicalMatrix e = tropical_special(SpecialKind::kAllUnits, n);
      std::uint64_t predicate_true = 0, commuting = 0, discrepancies = 0;
      for (std::uint64_t t = 0; t < rec.options().tropical_samples; ++t) {
        const std::size_t kind = sampler.below(3);
        const TropicalMatrix a =
            kind == 0 ? sampler.uniform(n) : kind == 1 ? sampler.uniform_maxima(n) : sampler.near_miss(n);
        const bool pred = uniform_line_maxima(a);
        const bool comm = commutes(a, e);
        predicate_true += pred;
        commuting += comm;
        if (pred != comm) {
          ++discrepancies;
          fail_with(c, {{"matrix", matrix_json(a)}, {"predicate", pred}, {"commutes_with_E", comm}});
        }
      }
      c.counters["samples"] = rec.options().tropical_samples;
      c.counters["predicate_true"] = predicate_true;
      c.counters["commuting"] = commuting;
      c.counters["discrepancies"] = discrepancies;
    });
  }

  rec.run("grid-exhaustive-n3", [&](CheckResult& c) {
    const std::vector<TropicalScalar> values{TropicalScalar::bottom(), TropicalScalar(0L), TropicalScalar(1L)};
    const std::size_t n = 3, cells = n * n;
    const TropicalMatrix e = tropical_special(SpecialKind::kAllUnits, n);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= values.size();
    std::uint64_t predicate_true = 0, discrepancies = 0;
    std::vector<TropicalScalar> entries(cells);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t rest = code;
      for (std::size_t i = cells; i-- > 0;) {
        entries[i] = values[rest % values.size()];
        rest /= values.size();
      }
      const TropicalMatrix a(n, entries);
      const bool pred = uniform_line_maxima(a);
      const bool comm = commutes(a, e);
      predicate_true += pred;
      if (pred != comm) {
        ++discrepancies;
        fail_with(c, {{"matrix", matrix_json(a)}, {"predicate", pred}, {"commutes_with_E", comm}});
      }
    }
    c.counters["grid"] = ordered_json::array({"-inf", "0", "1"});
    c.counters["matrices"] = total;
    c.counters["predicate_true"] = predicate_true;
    c.counters["discrepancies"] = discrepancies;
  });
}

// -- thm-3.2 ---------------------------------------------------------------

void verify_tropical_paths(Recorder& rec) {
  for (std::size_t n : {3, 4}) {
    rec.run("random-paths-n" + std::to_string(n), [&, n](CheckResult& c) {
      TropicalSampler sampler(rec.options().seed * 31 + n);
      auto draw = [&](std::size_t kind) {
        switch (kind) {
          case 0:
            return sampler.non_diagonal(n);
          case 1:
            return sampler.repeated_diagonal(n);
          default:
            return sampler.distinct_diagonal(n);
        }
      };
      std::uint64_t branch_non_diagonal = 0, branch_repeated = 0, branch_distinct = 0, eigen = 0, direct = 0;
      std::uint64_t max_length = 0, failures = 0;
      for (std::uint64_t t = 0; t < rec.options().path_samples; ++t) {
        const TropicalMatrix x = draw(sampler.below(3));
        const TropicalMatrix y = draw(sampler.below(3));
        try {
          const auto conn = tropical_connect(x, y);
          const auto& p = conn.path.vertices;
          if (!validate_path(conn.path) || p.front() != x || p.back() != y || conn.path.length() > 4) {
            throw std::logic_error("path failed validation");
          }
          max_length = std::max<std::uint64_t>(max_length, conn.path.length());
          auto used = [&](TropicalRoute r) { return std::count(conn.routes.begin(), conn.routes.end(), r) > 0; };
          branch_non_diagonal += used(TropicalRoute::kNonDiagonal);
          branch_repeated += used(TropicalRoute::kRepeatedDiagonal);
          branch_distinct += used(TropicalRoute::kDistinctDiagonal) || used(TropicalRoute::kDistinctDiagonalEigen);
          eigen += used(TropicalRoute::kDistinctDiagonalEigen);
          direct += used(TropicalRoute::kDirect);
        } catch (const std::exception& ex) {
          ++failures;
          fail_with(c, {{"x", matrix_json(x)}, {"y", matrix_json(y)}, {"error", ex.what()}});
        }
      }
      c.counters["pairs"] = rec.options().path_samples;
      c.counters["failures"] = failures;
      c.counters["max_length"] = max_length;
      c.counters["branch_non_diagonal"] = branch_non_diagonal;
      c.counters["branch_repeated_diagonal"] = branch_repeated;
      c.counters["branch_distinct_diagonal"] = branch_distinct;
      c.counters["distinct_diagonal_via_eigenvectors"] = eigen;
      c.counters["direct_edges"] = direct;
      const std::uint64_t least = std::min({branch_non_diagonal, branch_repeated, branch_distinct});
      if (failures == 0 && rec.options().path_samples >= 1000 && least < 50) {
        fail_with(c, {{"least_branch_count", least}});
      }
    });
  }

  rec.run("lower-bound", [&](CheckResult& c) {
    c.status = CheckStatus::kCrossReference;
    c.counters["see"] = "cor-2.3";
    c.counters["note"] = "the lower bound needs an exhaustive search over an infinite matrix set; not checked here";
  });
}

// -- prop-4.1 --------------------------------------------------------------

void verify_jordan_pair(Recorder& rec) {
  const std::vector<std::pair<std::string, std::size_t>> cases{{"boolean", 2},   {"boolean", 3},   {"modular:4", 2},
                                                               {"modular:6", 2}, {"modular:3", 2}, {"chain:3", 2}};
  for (const auto& [name, n] : cases) {
    const SemiringPtr s = named(name);
    rec.run("jordan-pair-" + label(s, n), [&](CheckResult& c) {
      const auto space = rec.space(s, n);
      const auto inter = jn_centralizer_intersection(s, n, rec.options().budget);
      std::vector<Matrix> scalars;
      for (std::size_t a = 0; a < s->order(); ++a) scalars.push_back(scalar_matrix(s, n, ElementId(a)));
      std::sort(scalars.begin(), scalars.end());
      scalars.erase(std::unique(scalars.begin(), scalars.end()), scalars.end());
      c.counters["intersection"] = inter.size();
      c.counters["scalars"] = scalars.size();
      if (auto w = set_difference_witness(inter, scalars, "intersection", "scalar matrices")) fail_with(c, *w);

      const auto g = rec.graph(space);
      const auto [j, jt] = jn_pair(s, n);
      const auto d = distance(g, j, jt);
      c.counters["distance"] = distance_json(d);
      if (!d.infinite() && *d.value < 3) fail_with(c, {{"distance", *d.value}});
    });
  }
}

// -- thm-4.2 ---------------------------------------------------------------

void verify_nonentire(Recorder& rec) {
  for (const char* name : {"modular:4", "modular:6"}) {
    const SemiringPtr s = named(name);
    rec.run("paths-" + label(s, 2), [&](CheckResult& c) {
      const auto space = rec.space(s, 2);
      std::vector<Matrix> vertices;
      for (std::uint64_t x = 0; x < space->size(); ++x)
        if (!space->is_central(x)) vertices.push_back(space->decode(x));
      std::uint64_t pairs = 0, failures = 0, max_length = 0;
      std::uint64_t by_case[5] = {};
      for (const auto& a : vertices) {
        for (const auto& b : vertices) {
          ++pairs;
          try {
            const auto conn = nonentire_connect(*space, a, b);
            const auto& p = conn.path.vertices;
            if (p.front() != a || p.back() != b) throw std::logic_error("path endpoints differ from the request");
            max_length = std::max<std::uint64_t>(max_length, conn.path.length());
            if (!(a == b)) ++by_case[static_cast<int>(conn.which)];
          } catch (const std::exception& ex) {
            ++failures;
            fail_with(c, {{"a", matrix_json(a)}, {"b", matrix_json(b)}, {"error", ex.what()}});
          }
        }
      }
      const auto zd = *find_zero_divisor_pair(*s);
      c.counters["zero_divisors"] = ordered_json::array({s->name_of(zd.first), s->name_of(zd.second)});
      c.counters["vertices"] = vertices.size();
      c.counters["ordered_pairs"] = pairs;
      c.counters["failures"] = failures;
      c.counters["max_length"] = max_length;
      c.counters["case_both_noncentral"] = by_case[1];
      c.counters["case_first_central"] = by_case[2];
      c.counters["case_second_central"] = by_case[3];
      c.counters["case_both_central"] = by_case[4];
      if (max_length > 3) fail_with(c, {{"max_length", max_length}});
    });

    rec.run("diameter-" + label(s, 2), [&](CheckResult& c) {
      const auto space = rec.space(s, 2);
      const auto g = rec.graph(space);
      const auto d = diameter(g);
      const auto [j, jt] = jn_pair(s, 2);
      const auto dj = distance(g, j, jt);
      c.counters["vertices"] = g.vertex_count();
      c.counters["diameter"] = distance_json(d.distance);
      c.counters["distance_J_JT"] = distance_json(dj);
      if (d.distance.value != 3u) {
        fail_with(c, {{"from", matrix_json(g.matrix(d.from))}, {"to", matrix_json(g.matrix(d.to))},
                      {"distance", distance_json(d.distance)}});
      }
      if (dj.value != 3u) fail_with(c, {{"distance_J_JT", distance_json(dj)}});
    });
  }
}

// -- intro-example ---------------------------------------------------------

void verify_nilpotent_example(Recorder& rec) {
  for (const char* name : {"boolean", "chain:3"}) {
    const SemiringPtr s = named(name);
    rec.run("nilpotent-" + label(s, 2), [&](CheckResult& c) {
      const auto space = rec.space(s, 2);
      GraphOptions go;
      go.workers = rec.options().workers;
      go.memory_cap_bytes = rec.options().memory_cap_bytes;
      const auto nil = nilpotent_codes(*space);
      const auto g = CommutingGraph::build_subset(space, nil, go);
      const auto comps = connected_components(g);
      c.counters["nilpotent"] = nil.size();
      c.counters["vertices"] = g.vertex_count();
      c.counters["components"] = comps.size();
      ordered_json sizes = ordered_json::array();
      for (const auto& comp : comps) sizes.push_back(comp.size());
      c.counters["component_sizes"] = sizes;
      const std::size_t expected = s->order() - 1;
      if (comps.size() != 2) fail_with(c, {{"components", comps.size()}});
      for (const auto& comp : comps) {
        if (comp.size() != expected) {
          std::vector<Matrix> ms;
          for (auto v : comp) ms.push_back(g.matrix(v));
          fail_with(c, {{"component", matrices_json(ms)}, {"expected_size", expected}});
        }
        for (std::size_t i = 0; i < comp.size(); ++i)
          for (std::size_t j = i + 1; j < comp.size(); ++j)
            if (!g.adjacent(comp[i], comp[j])) {
              fail_with(c, {{"non_adjacent", ordered_json::array({matrix_json(g.matrix(comp[i])),
                                                                  matrix_json(g.matrix(comp[j]))})}});
            }
      }
    });
  }
}

using Verifier = void (*)(Recorder&);

const std::vector<std::pair<std::string, Verifier>>& registry() {
  static const std::vector<std::pair<std::string, Verifier>> r{
      {"intro-example", verify_nilpotent_example},
      {"lemma-2.1", verify_jordan_centralizer},
      {"thm-2.2", verify_boolean_diameter},
      {"cor-2.3", verify_support_corollary},
      {"lemma-3.1", verify_tropical_e_centralizer},
      {"thm-3.2", verify_tropical_paths},
      {"prop-4.1", verify_jordan_pair},
      {"thm-4.2", verify_nonentire},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

VerificationReport verify(std::string_view theorem, const VerifyOptions& options) {
  const auto& r = registry();
  const auto it = std::find_if(r.begin(), r.end(), [&](const auto& entry) { return entry.first == theorem; });
  if (it == r.end()) throw DomainError("unknown theorem id '" + std::string(theorem) + "'");

  VerificationReport report;
  report.theorem = it->first;
  report.seed = options.seed;
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(report, options);
  it->second(rec);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  report.status = CheckStatus::kPass;
  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::kFail) {
      report.status = CheckStatus::kFail;
      break;
    }
    if (c.status == CheckStatus::kIncomplete) report.status = CheckStatus::kIncomplete;
  }
  return report;
}

}  // namespace comgraph
