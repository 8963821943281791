#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace comgraph {

/// Element of the max-plus semiring: an exact rational or the bottom -inf.
/// oplus is max, otimes is addition; bottom is neutral for oplus and
/// absorbing for otimes.
class TropicalScalar {
 public:
  /// Bottom element (-inf), the tropical zero.
  TropicalScalar() = default;
  TropicalScalar(long value) : finite_(true), value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit TropicalScalar(mpq_class value) : finite_(true), value_(std::move(value)) { value_.canonicalize(); }

  static TropicalScalar bottom() { return {}; }
  /// Multiplicative identity: the real number 0.
  static TropicalScalar unit() { return TropicalScalar(0L); }

  bool is_bottom() const { return !finite_; }
  bool is_finite() const { return finite_; }
  /// Value of a finite scalar; calling it on bottom is a logic error.
  const mpq_class& value() const { return value_; }

  friend TropicalScalar oplus(const TropicalScalar& a, const TropicalScalar& b) { return a < b ? b : a; }
  friend TropicalScalar otimes(const TropicalScalar& a, const TropicalScalar& b) {
    if (a.is_bottom() || b.is_bottom()) return {};
    return TropicalScalar(mpq_class(a.value_ + b.value_));
  }

  friend bool operator==(const TropicalScalar& a, const TropicalScalar& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const TropicalScalar& a, const TropicalScalar& b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// "-inf", an integer, "p/q", or a finite decimal such as "-1.25".
  static std::optional<TropicalScalar> parse(std::string_view text);
  std::string to_string() const;

 private:
  bool finite_ = false;
  mpq_class value_;
};

}  // namespace comgraph
