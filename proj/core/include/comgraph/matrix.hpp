#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "comgraph/semiring.hpp"
#include "comgraph/tropical.hpp"

namespace comgraph {

/// Square matrix over a finite table semiring. Entries are stored row-major.
class Matrix {
 public:
  /// Zero matrix.
  Matrix(SemiringPtr semiring, std::size_t n);
  Matrix(SemiringPtr semiring, std::size_t n, std::vector<ElementId> entries);

  const SemiringPtr& semiring() const { return semiring_; }
  const SemiringTable& table() const { return *semiring_; }
  std::size_t dim() const { return n_; }

  ElementId operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, ElementId value);
  std::span<const ElementId> entries() const { return entries_; }

  bool same_space(const Matrix& other) const;

  /// Equal semiring algebra, dimension, and entries.
  friend bool operator==(const Matrix& a, const Matrix& b);
  /// Row-major lexicographic order on entry indices (the canonical order).
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.entries_ < b.entries_; }

 private:
  SemiringPtr semiring_;
  std::size_t n_;
  std::vector<ElementId> entries_;
};

/// Square matrix over the max-plus semiring.
class TropicalMatrix {
 public:
  /// Tropical zero matrix (every entry -inf).
  explicit TropicalMatrix(std::size_t n);
  TropicalMatrix(std::size_t n, std::vector<TropicalScalar> entries);

  std::size_t dim() const { return n_; }
  const TropicalScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, TropicalScalar value);
  std::span<const TropicalScalar> entries() const { return entries_; }

  friend bool operator==(const TropicalMatrix&, const TropicalMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<TropicalScalar> entries_;
};

// -- arithmetic ------------------------------------------------------------
// All binary operations throw StructuralError on a semiring or dimension
// mismatch.

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix scale(ElementId x, const Matrix& a);
/// AB = BA. Holds trivially for a = b.
bool commutes(const Matrix& a, const Matrix& b);

TropicalMatrix mat_add(const TropicalMatrix& a, const TropicalMatrix& b);
TropicalMatrix mat_mul(const TropicalMatrix& a, const TropicalMatrix& b);
TropicalMatrix transpose(const TropicalMatrix& a);
TropicalMatrix scale(const TropicalScalar& x, const TropicalMatrix& a);
bool commutes(const TropicalMatrix& a, const TropicalMatrix& b);

// -- special matrices ------------------------------------------------------
// Indices are zero-based: unit_matrix(s, n, 0, 1) is the matrix with a single
// one in the first row, second column.

enum class SpecialKind { kIdentity, kZero, kUnit, kJordan, kAllUnits };

Matrix special(SpecialKind kind, const SemiringPtr& s, std::size_t n, std::size_t i = 0, std::size_t j = 0);
TropicalMatrix tropical_special(SpecialKind kind, std::size_t n, std::size_t i = 0, std::size_t j = 0);

inline Matrix identity(const SemiringPtr& s, std::size_t n) { return special(SpecialKind::kIdentity, s, n); }
inline Matrix zero_matrix(const SemiringPtr& s, std::size_t n) { return special(SpecialKind::kZero, s, n); }
inline Matrix unit_matrix(const SemiringPtr& s, std::size_t n, std::size_t i, std::size_t j) {
  return special(SpecialKind::kUnit, s, n, i, j);
}
inline Matrix jordan(const SemiringPtr& s, std::size_t n) { return special(SpecialKind::kJordan, s, n); }
inline Matrix all_units(const SemiringPtr& s, std::size_t n) { return special(SpecialKind::kAllUnits, s, n); }
Matrix scalar_matrix(const SemiringPtr& s, std::size_t n, ElementId a);

/// Diagonal matrix with the given diagonal.
TropicalMatrix tropical_diagonal(std::span<const TropicalScalar> diagonal);

bool is_diagonal(const TropicalMatrix& a);
/// a = c I_n for some scalar c, including c = -inf.
bool is_central(const TropicalMatrix& a);
/// max over all entries (bottom for the zero matrix).
TropicalScalar max_entry(const TropicalMatrix& a);

// -- support, centralizers, center -----------------------------------------

/// The (0,1)-pattern of nonzero entries, as a matrix over the Boolean semiring.
Matrix supp(const Matrix& a);

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

/// Every X in M_n(S) with XA = AX, in canonical order. Throws BudgetExceeded
/// when |S|^(n^2) exceeds the budget.
std::vector<Matrix> centralizer_enumerate(const Matrix& a, std::uint64_t budget = kDefaultEnumerationBudget);

/// {c_0 I + c_1 J + ... + c_{n-1} J^{n-1}} (J^T instead of J when
/// transposed), deduplicated and in canonical order.
std::vector<Matrix> polynomial_centralizer_J(const SemiringPtr& s, std::size_t n, bool transposed);

/// Center of M_n(S): filtered against the unit matrices E_ij and I + E_ij,
/// then each survivor is certified against all of M_n(S).
std::vector<Matrix> center(const SemiringPtr& s, std::size_t n, std::uint64_t budget = kDefaultEnumerationBudget);

/// Row-major "[a b;c d]" rendering used for labels.
std::string compact_string(const Matrix& a);
std::string compact_string(const TropicalMatrix& a);

}  // namespace comgraph
