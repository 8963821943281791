#include "comgraph/semiring.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "comgraph/errors.hpp"
#include "text_lines.hpp"

namespace comgraph {

namespace {

std::string quoted(const SemiringTable& t, ElementId e) { return "'" + t.name_of(e) + "'"; }

std::vector<ElementId> iota_elements(std::size_t k) {
  std::vector<ElementId> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(i);
  return out;
}

std::optional<ElementId> find_additive_identity(const SemiringTable& t) {
  for (ElementId e : iota_elements(t.order())) {
    bool ok = true;
    for (ElementId a : iota_elements(t.order())) {
      if (t.add(e, a) != a || t.add(a, e) != a) {
        ok = false;
        break;
      }
    }
    if (ok) return e;
  }
  return std::nullopt;
}

std::optional<ElementId> find_multiplicative_identity(const SemiringTable& t) {
  for (ElementId e : iota_elements(t.order())) {
    bool ok = true;
    for (ElementId a : iota_elements(t.order())) {
      if (t.mul(e, a) != a || t.mul(a, e) != a) {
        ok = false;
        break;
      }
    }
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

SemiringTable::SemiringTable(std::string name, std::vector<std::string> element_names,
                             std::vector<ElementId> add_table, std::vector<ElementId> mul_table)
    : name_(std::move(name)),
      order_(element_names.size()),
      names_(std::move(element_names)),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)) {
  if (order_ < 2) throw StructuralError("semiring order must be at least 2");
  if (order_ > kMaxOrder) {
    throw StructuralError("semiring order " + std::to_string(order_) + " exceeds the supported maximum of " +
                          std::to_string(kMaxOrder));
  }
  if (add_.size() != order_ * order_ || mul_.size() != order_ * order_) {
    throw StructuralError("operation tables must be " + std::to_string(order_) + "x" + std::to_string(order_));
  }
  for (const auto* tab : {&add_, &mul_}) {
    for (ElementId e : *tab) {
      if (e.index() >= order_) throw StructuralError("table entry " + std::to_string(e.index()) + " out of range");
    }
  }
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw StructuralError("duplicate element name in semiring '" + name_ + "'");
  }
}

std::optional<ElementId> SemiringTable::find(std::string_view element_name) const {
  for (std::size_t i = 0; i < order_; ++i) {
    if (names_[i] == element_name) return ElementId(i);
  }
  return std::nullopt;
}

SemiringTable SemiringTable::with_cell(TableKind kind, ElementId a, ElementId b, ElementId value) const {
  if (a.index() >= order_ || b.index() >= order_ || value.index() >= order_) {
    throw StructuralError("with_cell: element out of range");
  }
  SemiringTable copy = *this;
  auto& tab = kind == TableKind::kAdd ? copy.add_ : copy.mul_;
  tab[a.index() * order_ + b.index()] = value;
  return copy;
}

bool AxiomReport::mentions(std::string_view axiom) const {
  return std::any_of(violations.begin(), violations.end(), [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

AxiomReport validate_axioms(const SemiringTable& t) {
  AxiomReport report;
  const auto elems = iota_elements(t.order());
  auto record = [&](std::string axiom, std::string message, std::vector<ElementId> witness) {
    report.violations.push_back({std::move(axiom), std::move(message), std::move(witness)});
  };

  for (ElementId a : elems) {
    if (t.add(kZero, a) != a || t.add(a, kZero) != a) {
      record("additive-identity", "0 is not an additive identity: fails for " + quoted(t, a), {a});
      break;
    }
  }
  for (ElementId a : elems) {
    bool bad = false;
    for (ElementId b : elems) {
      if (t.add(a, b) != t.add(b, a)) {
        record("additive-commutativity",
               "addition is not commutative: " + quoted(t, a) + "+" + quoted(t, b) + " != " + quoted(t, b) + "+" +
                   quoted(t, a),
               {a, b});
        bad = true;
        break;
      }
    }
    if (bad) break;
  }

  auto first_triple = [&](auto&& pred) -> std::optional<std::vector<ElementId>> {
    for (ElementId a : elems)
      for (ElementId b : elems)
        for (ElementId c : elems)
          if (!pred(a, b, c)) return std::vector<ElementId>{a, b, c};
    return std::nullopt;
  };
  auto triple_text = [&](const std::vector<ElementId>& w) {
    return "(" + quoted(t, w[0]) + ", " + quoted(t, w[1]) + ", " + quoted(t, w[2]) + ")";
  };

  if (auto w = first_triple([&](ElementId a, ElementId b, ElementId c) {
        return t.add(t.add(a, b), c) == t.add(a, t.add(b, c));
      })) {
    record("additive-associativity", "addition is not associative at " + triple_text(*w), *w);
  }

  for (ElementId a : elems) {
    if (t.mul(kOne, a) != a || t.mul(a, kOne) != a) {
      record("multiplicative-identity", "1 is not a multiplicative identity: fails for " + quoted(t, a), {a});
      break;
    }
  }

  if (auto w = first_triple([&](ElementId a, ElementId b, ElementId c) {
        return t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c));
      })) {
    record("multiplicative-associativity", "multiplication is not associative at " + triple_text(*w), *w);
  }
  if (auto w = first_triple([&](ElementId a, ElementId b, ElementId c) {
        return t.mul(a, t.add(b, c)) == t.add(t.mul(a, b), t.mul(a, c));
      })) {
    record("left-distributivity", "a(b+c) != ab+ac at " + triple_text(*w), *w);
  }
  if (auto w = first_triple([&](ElementId a, ElementId b, ElementId c) {
        return t.mul(t.add(a, b), c) == t.add(t.mul(a, c), t.mul(b, c));
      })) {
    record("right-distributivity", "(a+b)c != ac+bc at " + triple_text(*w), *w);
  }

  for (ElementId a : elems) {
    if (t.mul(kZero, a) != kZero || t.mul(a, kZero) != kZero) {
      record("zero-annihilation", "0 does not annihilate " + quoted(t, a), {a});
      break;
    }
  }
  return report;
}

SemiringProperties classify(const SemiringTable& t) {
  const auto elems = iota_elements(t.order());
  SemiringProperties p;
  p.commutative = true;
  p.entire = true;
  p.antinegative = true;
  for (ElementId a : elems) {
    for (ElementId b : elems) {
      if (t.mul(a, b) != t.mul(b, a)) p.commutative = false;
      if (a != kZero && b != kZero) {
        if (t.mul(a, b) == kZero) p.entire = false;
        if (t.add(a, b) == kZero) p.antinegative = false;
      }
    }
  }
  p.division = std::all_of(elems.begin() + 1, elems.end(), [&](ElementId a) {
    return std::any_of(elems.begin(), elems.end(),
                       [&](ElementId b) { return t.mul(a, b) == kOne && t.mul(b, a) == kOne; });
  });
  return p;
}

std::optional<std::pair<ElementId, ElementId>> find_zero_divisor_pair(const SemiringTable& t) {
  for (std::size_t x = 1; x < t.order(); ++x) {
    for (std::size_t y = 1; y < t.order(); ++y) {
      ElementId a(x), b(y);
      if (t.mul(a, b) == kZero && t.mul(b, a) == kZero) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

SemiringTable canonicalize(const SemiringTable& t) {
  auto zero = find_additive_identity(t);
  auto one = find_multiplicative_identity(t);
  if (!zero || !one) return t;
  if (*zero == *one) throw StructuralError("semiring '" + t.name() + "' has 0 = 1");

  const std::size_t k = t.order();
  std::vector<std::size_t> perm;  // new index -> old index
  perm.push_back(zero->index());
  perm.push_back(one->index());
  for (std::size_t i = 0; i < k; ++i) {
    if (i != zero->index() && i != one->index()) perm.push_back(i);
  }
  std::vector<std::size_t> inverse(k);
  for (std::size_t i = 0; i < k; ++i) inverse[perm[i]] = i;

  std::vector<std::string> names(k);
  std::vector<ElementId> add(k * k), mul(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    names[i] = t.element_names()[perm[i]];
    for (std::size_t j = 0; j < k; ++j) {
      ElementId oi(perm[i]), oj(perm[j]);
      add[i * k + j] = ElementId(inverse[t.add(oi, oj).index()]);
      mul[i * k + j] = ElementId(inverse[t.mul(oi, oj).index()]);
    }
  }
  return SemiringTable(t.name(), std::move(names), std::move(add), std::move(mul));
}

SemiringTable builtin_semiring(BuiltinSpec spec) {
  const std::size_t k = spec.kind == BuiltinKind::kBoolean ? 2 : spec.parameter;
  if (k < 2) throw StructuralError("builtin semiring parameter must be at least 2");
  if (k > SemiringTable::kMaxOrder) throw StructuralError("builtin semiring parameter exceeds 64");

  std::vector<std::string> names(k);
  std::vector<ElementId> add(k * k), mul(k * k);
  switch (spec.kind) {
    case BuiltinKind::kBoolean:
    case BuiltinKind::kChain: {
      // rank: 0 is the bottom, 1 the top, the rest sit in between in index order.
      auto rank = [k](std::size_t i) { return i == 0 ? 0 : i == 1 ? k - 1 : i - 1; };
      std::vector<std::size_t> by_rank(k);
      for (std::size_t i = 0; i < k; ++i) by_rank[rank(i)] = i;
      for (std::size_t i = 0; i < k; ++i) {
        names[i] = i < 2 ? std::to_string(i) : "c" + std::to_string(i - 1);
        for (std::size_t j = 0; j < k; ++j) {
          add[i * k + j] = ElementId(by_rank[std::max(rank(i), rank(j))]);
          mul[i * k + j] = ElementId(by_rank[std::min(rank(i), rank(j))]);
        }
      }
      break;
    }
    case BuiltinKind::kModular:
      for (std::size_t i = 0; i < k; ++i) {
        names[i] = std::to_string(i);
        for (std::size_t j = 0; j < k; ++j) {
          add[i * k + j] = ElementId((i + j) % k);
          mul[i * k + j] = ElementId((i * j) % k);
        }
      }
      break;
  }
  return SemiringTable(builtin_name(spec), std::move(names), std::move(add), std::move(mul));
}

std::optional<BuiltinSpec> parse_builtin_name(std::string_view name) {
  if (name == "boolean") return BuiltinSpec{BuiltinKind::kBoolean, 2};
  auto with_param = [&](std::string_view prefix, BuiltinKind kind) -> std::optional<BuiltinSpec> {
    if (!name.starts_with(prefix)) return std::nullopt;
    std::string_view digits = name.substr(prefix.size());
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) return std::nullopt;
    return BuiltinSpec{kind, value};
  };
  if (auto s = with_param("modular:", BuiltinKind::kModular)) return s;
  if (auto s = with_param("chain:", BuiltinKind::kChain)) return s;
  return std::nullopt;
}

std::string builtin_name(BuiltinSpec spec) {
  switch (spec.kind) {
    case BuiltinKind::kBoolean:
      return "boolean";
    case BuiltinKind::kModular:
      return "modular:" + std::to_string(spec.parameter);
    case BuiltinKind::kChain:
      return "chain:" + std::to_string(spec.parameter);
  }
  return {};
}

const SemiringPtr& boolean_semiring() {
  static const SemiringPtr instance = make_semiring(builtin_semiring({BuiltinKind::kBoolean, 2}));
  return instance;
}

SemiringPtr make_semiring(SemiringTable table) { return std::make_shared<const SemiringTable>(std::move(table)); }

// -- text format -----------------------------------------------------------

SemiringTable parse_semiring_text(std::string_view text) {
  using detail::fail;
  detail::LineCursor cursor(detail::tokenize_lines(text));

  const detail::Line& header = cursor.take();
  if (header.tokens.size() != 4 || header.tokens[0].text != "semiring" || header.tokens[2].text != "order") {
    fail(header, header.tokens[0], "expected 'semiring <name> order <k>'");
  }
  const std::string name = header.tokens[1].text;
  std::size_t k = 0;
  {
    const auto& tok = header.tokens[3];
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), k);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) fail(header, tok, "invalid order '" + tok.text + "'");
    if (k < 2 || k > SemiringTable::kMaxOrder) fail(header, tok, "order must be between 2 and 64");
  }

  std::optional<std::vector<std::string>> names;
  std::optional<std::vector<ElementId>> add, mul;

  auto lookup = [&](const detail::Line& line, const detail::Token& tok) {
    for (std::size_t i = 0; i < names->size(); ++i) {
      if ((*names)[i] == tok.text) return ElementId(i);
    }
    fail(line, tok, "unknown element '" + tok.text + "'");
  };

  while (!cursor.done()) {
    const detail::Line& line = cursor.take();
    const std::string& head = line.tokens[0].text;
    if (head == "elements:") {
      if (names) fail(line, line.tokens[0], "duplicate section 'elements:'");
      names.emplace();
      for (std::size_t i = 1; i < line.tokens.size(); ++i) names->push_back(line.tokens[i].text);
      if (names->size() != k) {
        fail(line, line.tokens[0],
             "expected " + std::to_string(k) + " element names, got " + std::to_string(names->size()));
      }
      std::vector<std::string> sorted = *names;
      std::sort(sorted.begin(), sorted.end());
      if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
        fail(line, line.tokens[0], "duplicate element name '" + *dup + "'");
      }
    } else if (head == "add:" || head == "mul:") {
      auto& target = head == "add:" ? add : mul;
      if (target) fail(line, line.tokens[0], "duplicate section '" + head + "'");
      if (!names) fail(line, line.tokens[0], "'" + head + "' before 'elements:'");
      if (line.tokens.size() != 1) fail(line, line.tokens[1], "table rows start on the next line");
      target.emplace();
      for (std::size_t r = 0; r < k; ++r) {
        if (cursor.done()) cursor.fail_at_end("table '" + head + "' has fewer than " + std::to_string(k) + " rows");
        const detail::Line& row = cursor.take();
        if (row.tokens[0].text.ends_with(':')) {
          fail(row, row.tokens[0], "table '" + head + "' has only " + std::to_string(r) + " rows");
        }
        if (row.tokens.size() != k) {
          fail(row, row.tokens[std::min(row.tokens.size(), k) - 1],
               "expected " + std::to_string(k) + " entries, got " + std::to_string(row.tokens.size()));
        }
        for (const auto& tok : row.tokens) target->push_back(lookup(row, tok));
      }
    } else {
      fail(line, line.tokens[0], "unexpected token '" + head + "'");
    }
  }
  if (!names || !add || !mul) cursor.fail_at_end("missing section (need elements:, add: and mul:)");
  return canonicalize(SemiringTable(name, std::move(*names), std::move(*add), std::move(*mul)));
}

SemiringTable parse_semiring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open semiring file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_semiring_text(buffer.str());
}

std::string serialize_semiring(const SemiringTable& t) {
  std::ostringstream out;
  out << "semiring " << t.name() << " order " << t.order() << "\n";
  out << "elements:";
  for (const auto& n : t.element_names()) out << ' ' << n;
  out << "\n";
  for (TableKind kind : {TableKind::kAdd, TableKind::kMul}) {
    out << (kind == TableKind::kAdd ? "add:" : "mul:") << "\n";
    auto tab = t.table(kind);
    for (std::size_t i = 0; i < t.order(); ++i) {
      for (std::size_t j = 0; j < t.order(); ++j) {
        out << (j ? " " : "") << t.name_of(tab[i * t.order() + j]);
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace comgraph
