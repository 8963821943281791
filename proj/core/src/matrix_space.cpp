#include "comgraph/matrix_space.hpp"

#include <algorithm>

#include "comgraph/errors.hpp"

namespace comgraph {

namespace {

// Row-product tables above this many entries are not precomputed.
constexpr std::uint64_t kRowTableLimit = std::uint64_t{1} << 26;

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t limit, bool& overflow) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > limit / base) {
      overflow = true;
      return 0;
    }
    r *= base;
  }
  return r;
}

}  // namespace

BitMatrix::BitMatrix(std::size_t n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n == 0 || n > kMaxDim) throw StructuralError("BitMatrix supports 1 <= n <= 8");
  if (n * n < 64) bits_ &= (std::uint64_t{1} << (n * n)) - 1;
}

BitMatrix BitMatrix::from_matrix(const Matrix& m) {
  if (m.table().order() != 2 || !m.table().same_algebra(*boolean_semiring())) {
    throw StructuralError("BitMatrix requires a Boolean matrix");
  }
  std::uint64_t bits = 0;
  const std::size_t n = m.dim();
  if (n > kMaxDim) throw StructuralError("BitMatrix supports n <= 8");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) == kOne) bits |= std::uint64_t{1} << (i * n + j);
  return BitMatrix(n, bits);
}

Matrix BitMatrix::to_matrix() const {
  Matrix m(boolean_semiring(), n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (get(i, j)) m.set(i, j, kOne);
  return m;
}

BitMatrix bool_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.dim() != b.dim()) throw StructuralError("bool_mul: dimension mismatch");
  return BitMatrix(a.dim(), bool_mul_packed(a.bits(), b.bits(), a.dim()));
}

MatrixSpace::MatrixSpace(SemiringPtr semiring, std::size_t n, std::uint64_t budget)
    : semiring_(std::move(semiring)), n_(n), k_(semiring_ ? semiring_->order() : 0) {
  if (!semiring_) throw StructuralError("MatrixSpace needs a semiring");
  if (n_ == 0) throw StructuralError("matrix dimension must be at least 1");
  bool overflow = false;
  size_ = checked_pow(k_, n_ * n_, budget, overflow);
  if (overflow) {
    throw BudgetExceeded("M_" + std::to_string(n_) + "(" + semiring_->name() + ") has more than " +
                         std::to_string(budget) + " matrices");
  }
  row_count_ = checked_pow(k_, n_, budget, overflow);
  row_place_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t place = 1;
    for (std::size_t r = i + 1; r < n_; ++r) place *= row_count_;
    row_place_[i] = place;
  }
  boolean_ = k_ == 2 && n_ <= BitMatrix::kMaxDim && semiring_->same_algebra(*boolean_semiring());

  if (!boolean_ && row_count_ * size_ <= kRowTableLimit) {
    // Digits of every row code, most significant first.
    std::vector<std::uint32_t> digits(row_count_ * n_);
    for (std::uint64_t r = 0; r < row_count_; ++r) {
      std::uint64_t x = r;
      for (std::size_t j = n_; j-- > 0;) {
        digits[r * n_ + j] = static_cast<std::uint32_t>(x % k_);
        x /= k_;
      }
    }
    const SemiringTable& s = *semiring_;
    row_times_.resize(row_count_ * size_);
    std::vector<std::uint32_t> m_rows(n_);
    for (std::uint64_t m = 0; m < size_; ++m) {
      for (std::size_t l = 0; l < n_; ++l) m_rows[l] = row_code(m, l);
      for (std::uint64_t r = 0; r < row_count_; ++r) {
        std::uint64_t out = 0;
        for (std::size_t j = 0; j < n_; ++j) {
          ElementId acc = kZero;
          for (std::size_t l = 0; l < n_; ++l) {
            acc = s.add(acc, s.mul(ElementId(digits[r * n_ + l]), ElementId(digits[m_rows[l] * n_ + j])));
          }
          out = out * k_ + acc.index();
        }
        row_times_[r * size_ + m] = static_cast<std::uint32_t>(out);
      }
    }
  }
}

Matrix MatrixSpace::decode(std::uint64_t code) const {
  if (code >= size_) throw StructuralError("matrix code out of range");
  std::vector<ElementId> entries(n_ * n_);
  for (std::size_t p = entries.size(); p-- > 0;) {
    entries[p] = ElementId(code % k_);
    code /= k_;
  }
  return Matrix(semiring_, n_, std::move(entries));
}

std::uint64_t MatrixSpace::encode(const Matrix& m) const {
  if (m.dim() != n_ || !(m.semiring() == semiring_ || m.table().same_algebra(*semiring_))) {
    throw StructuralError("matrix does not belong to M_" + std::to_string(n_) + "(" + semiring_->name() + ")");
  }
  std::uint64_t code = 0;
  for (ElementId e : m.entries()) code = code * k_ + e.index();
  return code;
}

std::uint64_t MatrixSpace::packed(std::uint64_t code) const {
  // code has entry (i,j) at bit n^2-1-(i*n+j); BitMatrix wants bit i*n+j.
  const std::size_t bits = n_ * n_;
  std::uint64_t out = 0;
  for (std::size_t p = 0; p < bits; ++p) out |= ((code >> p) & 1U) << (bits - 1 - p);
  return out;
}

bool MatrixSpace::commutes(std::uint64_t a, std::uint64_t b) const {
  if (boolean_) {
    const std::uint64_t pa = packed(a), pb = packed(b);
    return bool_mul_packed(pa, pb, n_) == bool_mul_packed(pb, pa, n_);
  }
  if (!row_times_.empty()) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (row_times_[row_code(a, i) * size_ + b] != row_times_[row_code(b, i) * size_ + a]) return false;
    }
    return true;
  }
  return multiply(a, b) == multiply(b, a);
}

std::uint64_t MatrixSpace::multiply(std::uint64_t a, std::uint64_t b) const {
  if (boolean_) {
    const std::uint64_t prod = bool_mul_packed(packed(a), packed(b), n_);
    return packed(prod);  // the bit reversal is an involution
  }
  if (!row_times_.empty()) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < n_; ++i) out = out * row_count_ + row_times_[row_code(a, i) * size_ + b];
    return out;
  }
  return encode(mat_mul(decode(a), decode(b)));
}

const std::vector<std::uint64_t>& MatrixSpace::center_codes() const {
  std::call_once(center_once_, [this] {
    std::vector<std::uint64_t> generators;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const Matrix e = unit_matrix(semiring_, n_, i, j);
        generators.push_back(encode(e));
        generators.push_back(encode(mat_add(identity(semiring_, n_), e)));
      }
    }
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t x = 0; x < size_; ++x) {
      if (std::all_of(generators.begin(), generators.end(), [&](std::uint64_t g) { return commutes(x, g); })) {
        candidates.push_back(x);
      }
    }
    for (std::uint64_t c : candidates) {
      bool central = true;
      for (std::uint64_t x = 0; x < size_ && central; ++x) central = commutes(c, x);
      if (central) center_.push_back(c);
    }
  });
  return center_;
}

bool MatrixSpace::is_central(std::uint64_t code) const {
  const auto& c = center_codes();
  return std::binary_search(c.begin(), c.end(), code);
}

}  // namespace comgraph
