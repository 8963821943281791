#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace comgraph {

/// Index of an element inside one SemiringTable. Index 0 is the additive
/// identity and index 1 the multiplicative identity of a canonical table.
struct ElementId {
  std::uint8_t value = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::size_t v) : value(static_cast<std::uint8_t>(v)) {}

  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

inline constexpr ElementId kZero{0};
inline constexpr ElementId kOne{1};

enum class TableKind { kAdd, kMul };

/// A finite semiring given by its operation tables. Construction checks only
/// structure (sizes, id ranges, order bounds); the algebraic axioms are the
/// job of validate_axioms().
class SemiringTable {
 public:
  static constexpr std::size_t kMaxOrder = 64;

  SemiringTable(std::string name, std::vector<std::string> element_names,
                std::vector<ElementId> add_table, std::vector<ElementId> mul_table);

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  const std::vector<std::string>& element_names() const { return names_; }
  const std::string& name_of(ElementId e) const { return names_[e.index()]; }
  std::optional<ElementId> find(std::string_view element_name) const;

  ElementId add(ElementId a, ElementId b) const { return add_[a.index() * order_ + b.index()]; }
  ElementId mul(ElementId a, ElementId b) const { return mul_[a.index() * order_ + b.index()]; }

  std::span<const ElementId> table(TableKind kind) const {
    return kind == TableKind::kAdd ? std::span<const ElementId>(add_) : std::span<const ElementId>(mul_);
  }

  /// Copy with one cell of one table replaced.
  SemiringTable with_cell(TableKind kind, ElementId a, ElementId b, ElementId value) const;

  /// Same order and operation tables; names are labels and do not matter.
  bool same_algebra(const SemiringTable& other) const {
    return order_ == other.order_ && add_ == other.add_ && mul_ == other.mul_;
  }
  friend bool operator==(const SemiringTable&, const SemiringTable&) = default;

 private:
  std::string name_;
  std::size_t order_;
  std::vector<std::string> names_;
  std::vector<ElementId> add_;
  std::vector<ElementId> mul_;
};

using SemiringPtr = std::shared_ptr<const SemiringTable>;

struct AxiomViolation {
  std::string axiom;                // stable identifier, e.g. "left-distributivity"
  std::string message;              // human-readable, names the offending elements
  std::vector<ElementId> witness;   // the counterexample (one to three elements)
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;

  bool valid() const { return violations.empty(); }
  bool mentions(std::string_view axiom) const;
};

/// Every semiring axiom is checked by a full table scan; at most one
/// counterexample is recorded per violated axiom.
AxiomReport validate_axioms(const SemiringTable& table);

struct SemiringProperties {
  bool commutative = false;
  bool entire = false;
  bool antinegative = false;
  bool division = false;

  friend bool operator==(const SemiringProperties&, const SemiringProperties&) = default;
};

SemiringProperties classify(const SemiringTable& table);

/// Lexicographically least pair of nonzero elements with xy = yx = 0, if any.
std::optional<std::pair<ElementId, ElementId>> find_zero_divisor_pair(const SemiringTable& table);

/// Reorders the elements so that the additive identity has index 0 and the
/// multiplicative identity index 1. Tables without identities are returned
/// unchanged (validation reports them); tables where 0 = 1 are rejected.
SemiringTable canonicalize(const SemiringTable& table);

// -- builtins --------------------------------------------------------------

enum class BuiltinKind { kBoolean, kModular, kChain };

struct BuiltinSpec {
  BuiltinKind kind = BuiltinKind::kBoolean;
  std::size_t parameter = 2;  // modulus for kModular, length for kChain
};

/// boolean = {0,1} with or/and, modular(m) = Z_m, chain(k) = k-element chain
/// with max/min. The chain elements are named 0 < c1 < ... < c{k-2} < 1.
SemiringTable builtin_semiring(BuiltinSpec spec);

/// Parses "boolean", "modular:<m>" or "chain:<k>". Returns nullopt for any
/// other name (including "tropical", which has no finite table).
std::optional<BuiltinSpec> parse_builtin_name(std::string_view name);

std::string builtin_name(BuiltinSpec spec);

/// Shared instance of the binary Boolean semiring.
const SemiringPtr& boolean_semiring();

SemiringPtr make_semiring(SemiringTable table);

// -- text format -----------------------------------------------------------

/// Reads the `semiring <name> order <k>` / `elements:` / `add:` / `mul:`
/// format and canonicalizes the element order.
SemiringTable parse_semiring_text(std::string_view text);
SemiringTable parse_semiring_file(const std::string& path);
std::string serialize_semiring(const SemiringTable& table);

}  // namespace comgraph
