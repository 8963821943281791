#include <doctest.h>

#include <random>

#include "comgraph/errors.hpp"
#include "comgraph/verification.hpp"
#include "helpers.hpp"

using namespace comgraph;
using testing::kNegInf;
using testing::t;
using testing::tmat;

namespace {

VerifyOptions small_options() {
  VerifyOptions o;
  o.tropical_samples = 300;
  o.path_samples = 100;
  return o;
}

const CheckResult* find_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

// Direct tropical product, used to check the line-maxima predicate.
bool commutes_with_all_units(const TropicalMatrix& a) {
  return commutes(a, tropical_special(SpecialKind::kAllUnits, a.dim()));
}

}  // namespace

TEST_CASE("theorem ids") {
  const auto& ids = theorem_ids();
  CHECK(ids == std::vector<std::string>{"intro-example", "lemma-2.1", "thm-2.2", "cor-2.3", "lemma-3.1", "thm-3.2",
                                        "prop-4.1", "thm-4.2"});
  CHECK_THROWS_AS(verify("thm-9.9"), DomainError);
}

TEST_CASE("report JSON has a stable key order") {
  const auto r = verify("intro-example");
  CHECK(r.status == CheckStatus::kPass);
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"theorem", "status", "checks", "seed", "elapsed_ms"});
  const auto& check = j["checks"][0];
  std::vector<std::string> ckeys;
  for (auto it = check.begin(); it != check.end(); ++it) ckeys.push_back(it.key());
  CHECK(ckeys == std::vector<std::string>{"name", "status", "counters"});

  const auto untimed = to_json(r, false);
  CHECK_FALSE(untimed.contains("elapsed_ms"));
}

TEST_CASE("small checks pass") {
  for (const std::string id : {"intro-example", "lemma-2.1", "prop-4.1"}) {
    CAPTURE(id);
    const auto r = verify(id);
    CHECK(r.status == CheckStatus::kPass);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.status == CheckStatus::kPass);
      CHECK_FALSE(c.counterexample.has_value());
    }
  }
}

TEST_CASE("thm-2.2 counters") {
  const auto r = verify("thm-2.2");
  REQUIRE(r.status == CheckStatus::kPass);
  const auto* d = find_check(r, "diameter-n3");
  REQUIRE(d != nullptr);
  CHECK(d->counters["diameter"] == 4);
  CHECK(d->counters["vertices"] == 510);
  const auto* c4 = find_check(r, "certificate-ge4-n4");
  REQUIRE(c4 != nullptr);
  CHECK(c4->counters["scanned"] == 65536);
}

TEST_CASE("thm-3.2 covers every branch and keeps the lower bound out of the status") {
  const auto r = verify("thm-3.2", small_options());
  CHECK(r.status == CheckStatus::kPass);
  const auto* lb = find_check(r, "lower-bound");
  REQUIRE(lb != nullptr);
  CHECK(lb->status == CheckStatus::kCrossReference);
  CHECK(std::string(status_name(lb->status)) == "cross-reference");
}

TEST_CASE("a tiny budget makes enumeration checks incomplete, never pass") {
  VerifyOptions o;
  o.budget = 10;
  const auto r = verify("lemma-2.1", o);
  CHECK(r.status == CheckStatus::kIncomplete);
  for (const auto& c : r.checks) CHECK(c.status != CheckStatus::kPass);
}

TEST_CASE("reports do not depend on the worker count") {
  VerifyOptions one = small_options();
  VerifyOptions four = small_options();
  four.workers = 4;
  for (const std::string id : {"thm-2.2", "lemma-3.1", "thm-3.2"}) {
    CAPTURE(id);
    CHECK(to_json(verify(id, one), false).dump() == to_json(verify(id, four), false).dump());
  }
}

TEST_CASE("seed changes randomized checks but not their outcome") {
  VerifyOptions a = small_options();
  VerifyOptions b = small_options();
  b.seed = 1;
  const auto ra = verify("lemma-3.1", a), rb = verify("lemma-3.1", b);
  CHECK(ra.status == CheckStatus::kPass);
  CHECK(rb.status == CheckStatus::kPass);
  CHECK(ra.seed == kDefaultSeed);
  CHECK(rb.seed == 1);
}

TEST_CASE("uniform line maxima matches commutation with E") {
  CHECK(uniform_line_maxima(tropical_special(SpecialKind::kAllUnits, 3)));
  CHECK(uniform_line_maxima(tmat(3, {t(1), t(0), t(1), t(1), t(1), t(-2), t(0), t(1), kNegInf})));
  CHECK_FALSE(uniform_line_maxima(tmat(3, {t(1), t(0), t(0), t(0), t(0), t(0), t(0), t(0), t(0)})));
  // All -inf rows and columns: the common maximum is -inf.
  CHECK(uniform_line_maxima(TropicalMatrix(3)));

  std::mt19937_64 rng(5);
  const long grid[] = {-1, 0, 1};
  for (int trial = 0; trial < 3000; ++trial) {
    TropicalMatrix m(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const auto r = rng() % 4;
        if (r < 3) m.set(i, j, TropicalScalar(grid[r]));
      }
    CHECK(uniform_line_maxima(m) == commutes_with_all_units(m));
  }
}

TEST_CASE("matrix JSON") {
  const auto b = testing::sr("boolean");
  const auto j = matrix_json(testing::mat(b, 2, {0, 1, 1, 0}));
  CHECK(j.dump() == R"([["0","1"],["1","0"]])");
  const auto tj = matrix_json(tmat(2, {t(0), kNegInf, TropicalScalar(mpq_class(1, 2)), t(-3)}));
  CHECK(tj.dump() == R"([["0","-inf"],["1/2","-3"]])");
}
