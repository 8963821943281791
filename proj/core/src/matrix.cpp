#include "comgraph/matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "comgraph/errors.hpp"
#include "comgraph/matrix_space.hpp"

namespace comgraph {

namespace {

void require_same_space(const Matrix& a, const Matrix& b, const char* op) {
  if (!a.same_space(b)) {
    throw StructuralError(std::string(op) + ": semiring or dimension mismatch");
  }
}

void require_same_dim(const TropicalMatrix& a, const TropicalMatrix& b, const char* op) {
  if (a.dim() != b.dim()) throw StructuralError(std::string(op) + ": dimension mismatch");
}

}  // namespace

// -- Matrix ----------------------------------------------------------------

Matrix::Matrix(SemiringPtr semiring, std::size_t n)
    : semiring_(std::move(semiring)), n_(n), entries_(n * n, kZero) {
  if (!semiring_) throw StructuralError("matrix needs a semiring");
  if (n_ == 0) throw StructuralError("matrix dimension must be at least 1");
}

Matrix::Matrix(SemiringPtr semiring, std::size_t n, std::vector<ElementId> entries)
    : semiring_(std::move(semiring)), n_(n), entries_(std::move(entries)) {
  if (!semiring_) throw StructuralError("matrix needs a semiring");
  if (n_ == 0) throw StructuralError("matrix dimension must be at least 1");
  if (entries_.size() != n_ * n_) throw StructuralError("matrix needs n*n entries");
  for (ElementId e : entries_) {
    if (e.index() >= semiring_->order()) throw StructuralError("matrix entry out of range for semiring");
  }
}

void Matrix::set(std::size_t i, std::size_t j, ElementId value) {
  if (i >= n_ || j >= n_) throw StructuralError("matrix index out of range");
  if (value.index() >= semiring_->order()) throw StructuralError("matrix entry out of range for semiring");
  entries_[i * n_ + j] = value;
}

bool Matrix::same_space(const Matrix& other) const {
  return n_ == other.n_ && (semiring_ == other.semiring_ || semiring_->same_algebra(*other.semiring_));
}

bool operator==(const Matrix& a, const Matrix& b) { return a.same_space(b) && a.entries_ == b.entries_; }

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_space(a, b, "mat_add");
  const auto& s = a.table();
  std::vector<ElementId> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.add(a.entries()[i], b.entries()[i]);
  return Matrix(a.semiring(), a.dim(), std::move(out));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_space(a, b, "mat_mul");
  const auto& s = a.table();
  const std::size_t n = a.dim();
  std::vector<ElementId> out(n * n, kZero);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ElementId acc = kZero;
      for (std::size_t l = 0; l < n; ++l) acc = s.add(acc, s.mul(a(i, l), b(l, j)));
      out[i * n + j] = acc;
    }
  }
  return Matrix(a.semiring(), n, std::move(out));
}

Matrix transpose(const Matrix& a) {
  const std::size_t n = a.dim();
  std::vector<ElementId> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j * n + i] = a(i, j);
  return Matrix(a.semiring(), n, std::move(out));
}

Matrix scale(ElementId x, const Matrix& a) {
  if (x.index() >= a.table().order()) throw StructuralError("scale: scalar out of range");
  std::vector<ElementId> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.table().mul(x, a.entries()[i]);
  return Matrix(a.semiring(), a.dim(), std::move(out));
}

bool commutes(const Matrix& a, const Matrix& b) { return mat_mul(a, b) == mat_mul(b, a); }

// -- TropicalMatrix --------------------------------------------------------

TropicalMatrix::TropicalMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n_ == 0) throw StructuralError("matrix dimension must be at least 1");
}

TropicalMatrix::TropicalMatrix(std::size_t n, std::vector<TropicalScalar> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw StructuralError("matrix dimension must be at least 1");
  if (entries_.size() != n_ * n_) throw StructuralError("matrix needs n*n entries");
}

void TropicalMatrix::set(std::size_t i, std::size_t j, TropicalScalar value) {
  if (i >= n_ || j >= n_) throw StructuralError("matrix index out of range");
  entries_[i * n_ + j] = std::move(value);
}

TropicalMatrix mat_add(const TropicalMatrix& a, const TropicalMatrix& b) {
  require_same_dim(a, b, "mat_add");
  std::vector<TropicalScalar> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = oplus(a.entries()[i], b.entries()[i]);
  return TropicalMatrix(a.dim(), std::move(out));
}

TropicalMatrix mat_mul(const TropicalMatrix& a, const TropicalMatrix& b) {
  require_same_dim(a, b, "mat_mul");
  const std::size_t n = a.dim();
  std::vector<TropicalScalar> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      TropicalScalar acc;
      for (std::size_t l = 0; l < n; ++l) {
        if (a(i, l).is_bottom() || b(l, j).is_bottom()) continue;
        acc = oplus(acc, otimes(a(i, l), b(l, j)));
      }
      out[i * n + j] = std::move(acc);
    }
  }
  return TropicalMatrix(n, std::move(out));
}

TropicalMatrix transpose(const TropicalMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<TropicalScalar> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j * n + i] = a(i, j);
  return TropicalMatrix(n, std::move(out));
}

TropicalMatrix scale(const TropicalScalar& x, const TropicalMatrix& a) {
  std::vector<TropicalScalar> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = otimes(x, a.entries()[i]);
  return TropicalMatrix(a.dim(), std::move(out));
}

bool commutes(const TropicalMatrix& a, const TropicalMatrix& b) { return mat_mul(a, b) == mat_mul(b, a); }

// -- special matrices ------------------------------------------------------

Matrix special(SpecialKind kind, const SemiringPtr& s, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(s, n);
  switch (kind) {
    case SpecialKind::kZero:
      break;
    case SpecialKind::kIdentity:
      for (std::size_t d = 0; d < n; ++d) m.set(d, d, kOne);
      break;
    case SpecialKind::kUnit:
      if (i >= n || j >= n) throw StructuralError("unit matrix index out of range");
      m.set(i, j, kOne);
      break;
    case SpecialKind::kJordan:
      for (std::size_t d = 0; d + 1 < n; ++d) m.set(d, d + 1, kOne);
      break;
    case SpecialKind::kAllUnits:
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, kOne);
      break;
  }
  return m;
}

TropicalMatrix tropical_special(SpecialKind kind, std::size_t n, std::size_t i, std::size_t j) {
  TropicalMatrix m(n);
  switch (kind) {
    case SpecialKind::kZero:
      break;
    case SpecialKind::kIdentity:
      for (std::size_t d = 0; d < n; ++d) m.set(d, d, TropicalScalar::unit());
      break;
    case SpecialKind::kUnit:
      if (i >= n || j >= n) throw StructuralError("unit matrix index out of range");
      m.set(i, j, TropicalScalar::unit());
      break;
    case SpecialKind::kJordan:
      for (std::size_t d = 0; d + 1 < n; ++d) m.set(d, d + 1, TropicalScalar::unit());
      break;
    case SpecialKind::kAllUnits:
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, TropicalScalar::unit());
      break;
  }
  return m;
}

Matrix scalar_matrix(const SemiringPtr& s, std::size_t n, ElementId a) {
  Matrix m(s, n);
  for (std::size_t d = 0; d < n; ++d) m.set(d, d, a);
  return m;
}

TropicalMatrix tropical_diagonal(std::span<const TropicalScalar> diagonal) {
  TropicalMatrix m(diagonal.size());
  for (std::size_t d = 0; d < diagonal.size(); ++d) m.set(d, d, diagonal[d]);
  return m;
}

bool is_diagonal(const TropicalMatrix& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j && !a(i, j).is_bottom()) return false;
  return true;
}

bool is_central(const TropicalMatrix& a) {
  if (!is_diagonal(a)) return false;
  for (std::size_t d = 1; d < a.dim(); ++d)
    if (a(d, d) != a(0, 0)) return false;
  return true;
}

TropicalScalar max_entry(const TropicalMatrix& a) {
  TropicalScalar best;
  for (const auto& e : a.entries()) best = oplus(best, e);
  return best;
}

// -- support, centralizers, center -----------------------------------------

Matrix supp(const Matrix& a) {
  std::vector<ElementId> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.entries()[i] == kZero ? kZero : kOne;
  return Matrix(boolean_semiring(), a.dim(), std::move(out));
}

std::vector<Matrix> centralizer_enumerate(const Matrix& a, std::uint64_t budget) {
  MatrixSpace space(a.semiring(), a.dim(), budget);
  const std::uint64_t code = space.encode(a);
  std::vector<Matrix> out;
  for (std::uint64_t x = 0; x < space.size(); ++x) {
    if (space.commutes(code, x)) out.push_back(space.decode(x));
  }
  return out;
}

std::vector<Matrix> polynomial_centralizer_J(const SemiringPtr& s, std::size_t n, bool transposed) {
  const Matrix j = transposed ? transpose(jordan(s, n)) : jordan(s, n);
  std::vector<Matrix> powers{identity(s, n)};
  for (std::size_t p = 1; p < n; ++p) powers.push_back(mat_mul(powers.back(), j));

  const std::size_t k = s->order();
  std::set<Matrix> unique;
  std::vector<std::size_t> coeff(n, 0);
  while (true) {
    Matrix sum = zero_matrix(s, n);
    for (std::size_t p = 0; p < n; ++p) sum = mat_add(sum, scale(ElementId(coeff[p]), powers[p]));
    unique.insert(std::move(sum));
    std::size_t pos = 0;
    while (pos < n && ++coeff[pos] == k) coeff[pos++] = 0;
    if (pos == n) break;
  }
  return {unique.begin(), unique.end()};
}

std::vector<Matrix> center(const SemiringPtr& s, std::size_t n, std::uint64_t budget) {
  MatrixSpace space(s, n, budget);
  std::vector<Matrix> out;
  for (std::uint64_t code : space.center_codes()) out.push_back(space.decode(code));
  return out;
}

std::string compact_string(const Matrix& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (j) out += ' ';
      out += a.table().name_of(a(i, j));
    }
  }
  return out + "]";
}

std::string compact_string(const TropicalMatrix& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (j) out += ' ';
      out += a(i, j).to_string();
    }
  }
  return out + "]";
}

}  // namespace comgraph
