#include "comgraph/witnesses.hpp"

#include <algorithm>
#include <stdexcept>

#include "comgraph/errors.hpp"

namespace comgraph {

namespace {

Matrix boolean_from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t n = rows.size();
  std::vector<ElementId> entries;
  for (const auto& r : rows)
    for (int v : r) entries.push_back(v ? kOne : kZero);
  return Matrix(boolean_semiring(), n, std::move(entries));
}

// Drops every cycle v_i ... v_j with v_i = v_j, leaving a simple walk.
template <typename M>
void remove_repeats(std::vector<M>& path) {
  std::vector<M> out;
  for (auto& v : path) {
    auto it = std::find(out.begin(), out.end(), v);
    if (it != out.end()) {
      out.erase(it + 1, out.end());
    } else {
      out.push_back(std::move(v));
    }
  }
  path = std::move(out);
}

}  // namespace

// -- Boolean witnesses -----------------------------------------------------

std::pair<Matrix, Matrix> boolean_witness_pair(std::size_t n) {
  if (n < 3) throw DomainError("boolean_witness_pair needs n >= 3");
  const auto& s = boolean_semiring();
  Matrix a(s, n), b(s, n);
  a.set(0, n - 1, kOne);
  for (std::size_t r = 2; r < n; ++r) {
    a.set(r, 0, kOne);      // first column tail (0, 1, ..., 1)
    a.set(r, r - 1, kOne);  // J_{n-1}^T in the lower-right block
  }
  b.set(0, 0, kOne);
  for (std::size_t r = 1; r + 1 < n; ++r) b.set(r, r + 1, kOne);  // J_{n-1}
  return {a, b};
}

std::pair<std::vector<Matrix>, std::vector<Matrix>> expected_neighbor_sets_n3() {
  std::vector<Matrix> na{
      boolean_from_rows({{1, 0, 1}, {0, 1, 0}, {1, 1, 1}}), boolean_from_rows({{1, 1, 0}, {0, 0, 0}, {0, 0, 1}}),
      boolean_from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), boolean_from_rows({{1, 1, 1}, {0, 0, 0}, {1, 1, 1}}),
      boolean_from_rows({{1, 1, 1}, {0, 1, 0}, {1, 1, 1}}),
  };
  std::vector<Matrix> nb{
      boolean_from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}), boolean_from_rows({{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}),
      boolean_from_rows({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}), boolean_from_rows({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
      boolean_from_rows({{0, 0, 0}, {0, 1, 1}, {0, 0, 1}}),
  };
  std::sort(na.begin(), na.end());
  std::sort(nb.begin(), nb.end());
  return {na, nb};
}

std::pair<Matrix, Matrix> jn_pair(const SemiringPtr& s, std::size_t n) {
  if (n < 2) throw DomainError("jn_pair needs n >= 2");
  Matrix j = jordan(s, n);
  return {j, transpose(j)};
}

std::vector<Matrix> jn_centralizer_intersection(const SemiringPtr& s, std::size_t n, std::uint64_t budget) {
  const auto [j, jt] = jn_pair(s, n);
  MatrixSpace space(s, n, budget);
  const std::uint64_t cj = space.encode(j), cjt = space.encode(jt);
  std::vector<Matrix> out;
  for (std::uint64_t x = 0; x < space.size(); ++x) {
    if (space.commutes(cj, x) && space.commutes(cjt, x)) out.push_back(space.decode(x));
  }
  return out;
}

bool is_scalar(const Matrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (i == j ? m(i, i) != m(0, 0) : m(i, j) != kZero) return false;
  return true;
}

// -- tropical --------------------------------------------------------------

const char* route_name(TropicalRoute route) {
  switch (route) {
    case TropicalRoute::kDirect:
      return "direct";
    case TropicalRoute::kNonDiagonal:
      return "non-diagonal";
    case TropicalRoute::kRepeatedDiagonal:
      return "repeated-diagonal";
    case TropicalRoute::kDistinctDiagonal:
      return "distinct-diagonal";
    case TropicalRoute::kDistinctDiagonalEigen:
      return "distinct-diagonal-eigen";
  }
  return "?";
}

TropicalScalar max_cycle_mean(const TropicalMatrix& y) {
  const std::size_t n = y.dim();
  TropicalScalar best;
  TropicalMatrix power = y;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (power(i, i).is_finite()) {
        best = oplus(best, TropicalScalar(mpq_class(power(i, i).value() / static_cast<long>(k))));
      }
    }
    if (k < n) power = mat_mul(power, y);
  }
  return best;
}

std::pair<std::vector<TropicalScalar>, std::vector<TropicalScalar>> common_eigenvectors(const TropicalMatrix& y) {
  const std::size_t n = y.dim();
  std::vector<TropicalScalar> u(n), v(n);
  const TropicalScalar lambda = max_cycle_mean(y);
  if (lambda.is_bottom()) {
    // Acyclic: a column and a row of y that are entirely -inf exist.
    std::size_t s = n, t = n;
    for (std::size_t j = 0; j < n && s == n; ++j) {
      bool empty = true;
      for (std::size_t i = 0; i < n; ++i) empty = empty && y(i, j).is_bottom();
      if (empty) s = j;
    }
    for (std::size_t i = 0; i < n && t == n; ++i) {
      bool empty = true;
      for (std::size_t j = 0; j < n; ++j) empty = empty && y(i, j).is_bottom();
      if (empty) t = i;
    }
    if (s == n || t == n) throw std::logic_error("acyclic matrix without an empty row and column");
    u[s] = TropicalScalar::unit();
    v[t] = TropicalScalar::unit();
    return {u, v};
  }
  // Normalized matrix has largest cycle mean 0, so its Kleene star is I + A + ... + A^(n-1).
  const TropicalMatrix a = scale(TropicalScalar(mpq_class(-lambda.value())), y);
  TropicalMatrix star = tropical_special(SpecialKind::kIdentity, n);
  TropicalMatrix power = star;
  for (std::size_t k = 1; k < n; ++k) {
    power = mat_mul(power, a);
    star = mat_add(star, power);
  }
  const TropicalMatrix plus = mat_mul(a, star);
  std::size_t critical = n;
  for (std::size_t c = 0; c < n && critical == n; ++c) {
    if (plus(c, c) == TropicalScalar::unit()) critical = c;
  }
  if (critical == n) throw std::logic_error("no critical node for a finite cycle mean");
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = star(i, critical);
    v[i] = star(critical, i);
  }
  return {u, v};
}

namespace {

enum class DiagonalShape { kNotDiagonal, kRepeated, kDistinct };

DiagonalShape diagonal_shape(const TropicalMatrix& z, std::size_t* i_out = nullptr, std::size_t* j_out = nullptr) {
  if (!is_diagonal(z)) return DiagonalShape::kNotDiagonal;
  for (std::size_t i = 0; i < z.dim(); ++i) {
    for (std::size_t j = i + 1; j < z.dim(); ++j) {
      if (z(i, i) == z(j, j)) {
        if (i_out) *i_out = i;
        if (j_out) *j_out = j;
        return DiagonalShape::kRepeated;
      }
    }
  }
  return DiagonalShape::kDistinct;
}

// Path from a non-central, not distinct-diagonal z to the all-zero matrix E.
std::vector<TropicalMatrix> route_to_all_units(const TropicalMatrix& z, std::vector<TropicalRoute>& routes) {
  const std::size_t n = z.dim();
  const TropicalMatrix e = tropical_special(SpecialKind::kAllUnits, n);
  if (z == e) return {e};
  std::size_t i = 0, j = 0;
  switch (diagonal_shape(z, &i, &j)) {
    case DiagonalShape::kNotDiagonal: {
      routes.push_back(TropicalRoute::kNonDiagonal);
      const TropicalScalar a = max_entry(z);
      return {z, mat_add(z, scale(a, tropical_special(SpecialKind::kIdentity, n))), e};
    }
    case DiagonalShape::kRepeated: {
      routes.push_back(TropicalRoute::kRepeatedDiagonal);
      TropicalMatrix f = tropical_special(SpecialKind::kIdentity, n);
      f.set(i, j, TropicalScalar::unit());
      f.set(j, i, TropicalScalar::unit());
      return {z, f, e};
    }
    case DiagonalShape::kDistinct:
      break;
  }
  throw std::logic_error("route_to_all_units on a distinct diagonal matrix");
}

// D - two-block scalar - C - B - y with the mu/epsilon matrices built from y.
std::vector<TropicalMatrix> distinct_diagonal_route(const TropicalMatrix& d, const TropicalMatrix& y) {
  const std::size_t n = d.dim();
  TropicalScalar mu = max_entry(y), eps;
  for (const auto& e : y.entries()) {
    if (e.is_finite() && (eps.is_bottom() || e < eps)) eps = e;
  }
  TropicalMatrix two_block(n), c(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    two_block.set(i, i, i < 2 ? d(0, 0) : d(1, 1));
    for (std::size_t j = 0; j < n; ++j) {
      b.set(i, j, i == j ? mu : eps);
      if (i == j) {
        c.set(i, j, mu);
      } else if (i < 2 && j < 2) {
        c.set(i, j, eps);
      }
    }
  }
  return {d, two_block, c, b, y};
}

// Same shape with B = u v^T for eigenvectors of y sharing one eigenvalue,
// and C = I + nu E_ab chosen so that C u = u and v^T C = v^T.
std::vector<TropicalMatrix> eigen_route(const TropicalMatrix& d, const TropicalMatrix& y) {
  const std::size_t n = d.dim();
  const auto [u, v] = common_eigenvectors(y);
  TropicalMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.set(i, j, otimes(u[i], v[j]));

  std::size_t a_idx = n, b_idx = n;
  for (std::size_t i = 0; i < n && a_idx == n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && u[i].is_finite() && v[j].is_finite()) {
        a_idx = i;
        b_idx = j;
        break;
      }
    }
  }
  if (a_idx == n) {
    // u and v are both supported on a single index s; use two other indices.
    std::size_t s = 0;
    while (u[s].is_bottom()) ++s;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i)
      if (i != s) others.push_back(i);
    a_idx = others[0];
    b_idx = others[1];
  }
  mpq_class nu = 0;
  bool bounded = false;
  auto tighten = [&](const mpq_class& bound) {
    if (!bounded || bound < nu) nu = bound;
    bounded = true;
  };
  if (u[b_idx].is_finite()) tighten(u[a_idx].value() - u[b_idx].value());
  if (v[a_idx].is_finite()) tighten(v[b_idx].value() - v[a_idx].value());

  TropicalMatrix c = tropical_special(SpecialKind::kIdentity, n);
  c.set(a_idx, b_idx, TropicalScalar(nu));

  std::size_t q = 0;
  while (q == a_idx || q == b_idx) ++q;
  TropicalMatrix two_block(n);
  for (std::size_t i = 0; i < n; ++i) two_block.set(i, i, (i == a_idx || i == b_idx) ? d(a_idx, a_idx) : d(q, q));
  return {d, two_block, c, b, y};
}

bool edges_ok(const std::vector<TropicalMatrix>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (is_central(p[i])) return false;
    if (i + 1 < p.size() && (p[i] == p[i + 1] || !commutes(p[i], p[i + 1]))) return false;
  }
  return true;
}

}  // namespace

bool validate_path(const TropicalPath& path) {
  return !path.vertices.empty() && path.length() <= path.max_length && edges_ok(path.vertices);
}

TropicalConnection tropical_connect(const TropicalMatrix& x, const TropicalMatrix& y) {
  const std::size_t n = x.dim();
  if (y.dim() != n) throw StructuralError("tropical_connect: dimension mismatch");
  if (n < 3) throw DomainError("tropical_connect needs n >= 3");
  if (is_central(x) || is_central(y)) throw DomainError("tropical_connect: endpoint is central");

  TropicalConnection out;
  out.path.max_length = 4;
  std::vector<TropicalMatrix> walk;
  const DiagonalShape sx = diagonal_shape(x), sy = diagonal_shape(y);
  if (x == y) {
    walk = {x};
  } else if (commutes(x, y)) {
    out.routes.push_back(TropicalRoute::kDirect);
    walk = {x, y};
  } else if (sx == DiagonalShape::kDistinct || sy == DiagonalShape::kDistinct) {
    // Diagonal matrices commute, so the other endpoint is not diagonal here.
    const bool flip = sx != DiagonalShape::kDistinct;
    const TropicalMatrix& d = flip ? y : x;
    const TropicalMatrix& other = flip ? x : y;
    walk = distinct_diagonal_route(d, other);
    remove_repeats(walk);
    if (edges_ok(walk)) {
      out.path.claim = "distinct diagonal to non-diagonal";
      out.routes.push_back(TropicalRoute::kDistinctDiagonal);
    } else {
      walk = eigen_route(d, other);
      out.path.claim = "distinct diagonal to non-diagonal (eigenvector centralizer)";
      out.routes.push_back(TropicalRoute::kDistinctDiagonalEigen);
    }
    if (flip) std::reverse(walk.begin(), walk.end());
  } else {
    walk = route_to_all_units(x, out.routes);
    auto back = route_to_all_units(y, out.routes);
    walk.insert(walk.end(), back.rbegin() + 1, back.rend());
    out.path.claim = "via the all-zero matrix";
  }
  remove_repeats(walk);
  out.path.vertices = std::move(walk);
  if (!validate_path(out.path)) {
    throw std::logic_error("tropical_connect built an invalid path from " + compact_string(x) + " to " +
                           compact_string(y));
  }
  return out;
}

// -- nonentire -------------------------------------------------------------

bool validate_path(const MatrixSpace& space, const FinitePath& path) {
  if (path.vertices.empty() || path.length() > path.max_length) return false;
  std::vector<std::uint64_t> codes;
  for (const auto& m : path.vertices) codes.push_back(space.encode(m));
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (space.is_central(codes[i])) return false;
    if (i + 1 < codes.size() && (codes[i] == codes[i + 1] || !space.commutes(codes[i], codes[i + 1]))) return false;
  }
  return true;
}

NonentireConnection nonentire_connect(const MatrixSpace& space, const Matrix& a, const Matrix& b) {
  const SemiringTable& s = *space.semiring();
  const std::size_t n = space.dim();
  if (n < 2) throw DomainError("nonentire_connect needs n >= 2");
  const auto zd = find_zero_divisor_pair(s);
  if (!zd) throw DomainError("nonentire_connect: semiring '" + s.name() + "' is entire");
  if (space.is_central(space.encode(a)) || space.is_central(space.encode(b))) {
    throw DomainError("nonentire_connect: endpoint is central");
  }
  const auto [x, y] = *zd;
  const Matrix xa = scale(x, a), yb = scale(y, b);
  const bool xa_central = space.is_central(space.encode(xa));
  const bool yb_central = space.is_central(space.encode(yb));
  const Matrix e12 = unit_matrix(space.semiring(), n, 0, 1);

  NonentireConnection out;
  out.path.max_length = 3;
  std::vector<Matrix> walk;
  if (a == b) {
    walk = {a};
  } else if (!xa_central && !yb_central) {
    out.which = NonentireCase::kBothNoncentral;
    walk = {a, xa, yb, b};
  } else if (xa_central && !yb_central) {
    out.which = NonentireCase::kFirstCentral;
    walk = {a, scale(x, e12), yb, b};
  } else if (!xa_central) {
    out.which = NonentireCase::kSecondCentral;
    walk = {a, xa, scale(y, e12), b};
  } else {
    out.which = NonentireCase::kBothCentral;
    walk = {a, scale(x, e12), scale(y, e12), b};
  }
  remove_repeats(walk);
  out.path.claim = "zero-divisor path, case " + std::to_string(static_cast<int>(out.which));
  out.path.vertices = std::move(walk);
  if (!validate_path(space, out.path)) {
    throw std::logic_error("nonentire_connect built an invalid path from " + compact_string(a) + " to " +
                           compact_string(b));
  }
  return out;
}

}  // namespace comgraph
