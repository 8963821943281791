#include "comgraph/tropical.hpp"

#include <algorithm>
#include <cctype>

namespace comgraph {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::optional<TropicalScalar> TropicalScalar::parse(std::string_view text) {
  if (text == "-inf") return bottom();
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  mpq_class value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d{std::string(den)};
    if (d == 0) return std::nullopt;
    value = mpq_class(mpz_class(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) return std::nullopt;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole));
    value = mpq_class(w * scale + mpz_class(std::string(frac)), scale);
  } else {
    if (!all_digits(body)) return std::nullopt;
    value = mpq_class(mpz_class(std::string(body)));
  }
  value.canonicalize();
  if (negative) value = -value;
  return TropicalScalar(value);
}

std::string TropicalScalar::to_string() const {
  if (!finite_) return "-inf";
  return value_.get_str();
}

}  // namespace comgraph
