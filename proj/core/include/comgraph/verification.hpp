#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "comgraph/matrix.hpp"

namespace comgraph {

using ordered_json = nlohmann::ordered_json;

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Largest |S|^(n^2) a check may enumerate; bigger instances are reported
  /// as incomplete.
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned workers = 1;
  std::uint64_t memory_cap_bytes = std::uint64_t{1} << 30;
  /// Random tropical matrices per dimension for the E-centralizer check.
  std::uint64_t tropical_samples = 10000;
  /// Random endpoint pairs per dimension for tropical path construction.
  std::uint64_t path_samples = 1000;
};

enum class CheckStatus {
  kPass,
  kFail,
  kIncomplete,
  /// Recorded for completeness; established elsewhere and not counted.
  kCrossReference,
};

const char* status_name(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  ordered_json counters = ordered_json::object();
  std::optional<ordered_json> counterexample;
};

struct VerificationReport {
  std::string theorem;
  CheckStatus status = CheckStatus::kPass;  // kPass, kFail or kIncomplete
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  double elapsed_ms = 0;
};

/// Claim ids accepted by verify(), in report order.
const std::vector<std::string>& theorem_ids();

/// Runs the checks for one id. Throws DomainError for an unknown id.
VerificationReport verify(std::string_view theorem, const VerifyOptions& options = {});

/// {theorem, status, checks, seed, elapsed_ms}. elapsed_ms is omitted when
/// include_timing is false so that output depends only on the inputs.
ordered_json to_json(const VerificationReport& report, bool include_timing = true);

/// JSON rendering of a matrix: array of rows of element names.
ordered_json matrix_json(const Matrix& m);
ordered_json matrix_json(const TropicalMatrix& m);

/// Predicate for E-commutation: every row maximum and every column
/// maximum of a equal one common value (-inf allowed).
bool uniform_line_maxima(const TropicalMatrix& a);

}  // namespace comgraph
