#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <vector>

#include "comgraph/matrix.hpp"

namespace comgraph {

/// Boolean n x n matrix (n <= 8) in one word, entry (i,j) at bit i*n + j.
class BitMatrix {
 public:
  static constexpr std::size_t kMaxDim = 8;

  BitMatrix() = default;
  BitMatrix(std::size_t n, std::uint64_t bits);

  static BitMatrix from_matrix(const Matrix& m);
  Matrix to_matrix() const;

  std::size_t dim() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool get(std::size_t i, std::size_t j) const { return (bits_ >> (i * n_ + j)) & 1U; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Boolean product of two packed n x n matrices. For each k, column k of a is
/// spread across full rows and masked with row k of b broadcast to every row.
inline std::uint64_t bool_mul_packed(std::uint64_t a, std::uint64_t b, std::size_t n) {
  const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
  std::uint64_t col0 = 0;  // bit i*n set for every row i
  for (std::size_t i = 0; i < n; ++i) col0 |= std::uint64_t{1} << (i * n);
  std::uint64_t c = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t column = (a >> k) & col0;
    const std::uint64_t row = (b >> (k * n)) & row_mask;
    c |= (column * row_mask) & (row * col0);
  }
  return c;
}

BitMatrix bool_mul(const BitMatrix& a, const BitMatrix& b);

/// All of M_n(S) indexed by a canonical code: entries read row-major as base-k
/// digits, most significant first, so code order is the canonical matrix
/// order. Provides a fast commutation test on codes.
class MatrixSpace {
 public:
  MatrixSpace(SemiringPtr semiring, std::size_t n, std::uint64_t budget = kDefaultEnumerationBudget);

  const SemiringPtr& semiring() const { return semiring_; }
  std::size_t dim() const { return n_; }
  std::uint64_t size() const { return size_; }

  Matrix decode(std::uint64_t code) const;
  std::uint64_t encode(const Matrix& m) const;

  bool commutes(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const;

  /// Codes of the center, ascending.
  const std::vector<std::uint64_t>& center_codes() const;
  bool is_central(std::uint64_t code) const;

 private:
  std::uint32_t row_code(std::uint64_t code, std::size_t i) const {
    return static_cast<std::uint32_t>((code / row_place_[i]) % row_count_);
  }
  std::uint64_t packed(std::uint64_t code) const;

  SemiringPtr semiring_;
  std::size_t n_;
  std::size_t k_;
  std::uint64_t size_;
  std::uint64_t row_count_;             // k^n
  std::vector<std::uint64_t> row_place_;  // (k^n)^(n-1-i)
  bool boolean_;
  // row_times_[r * size_ + m] = row code of (row r) * (matrix m)
  std::vector<std::uint32_t> row_times_;
  mutable std::vector<std::uint64_t> center_;
  mutable std::once_flag center_once_;
};

}  // namespace comgraph
