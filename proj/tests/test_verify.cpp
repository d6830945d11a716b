#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <set>

#include "core/errors.hpp"
#include "core/verify.hpp"
#include "doctest.h"

using namespace zalcman;

namespace {
const GridSpec kFast{128, 6, 8.0};

double detail(const CheckRecord& r, const std::string& key) {
  for (const auto& [k, v] : r.details)
    if (k == key) return v;
  FAIL("missing detail ", key);
  return 0.0;
}
}  // namespace

TEST_CASE("chain check passes and carries the printed values") {
  for (int n : {3, 4, 100}) {
    const CheckRecord r = check_chain(n);
    CHECK(r.passed);
    CHECK(r.margin > 0.0);
  }
  const CheckRecord r3 = check_chain(3);
  CHECK(detail(r3, "b_nplus") == doctest::Approx(0.5));
  CHECK(detail(r3, "small_max") == doctest::Approx(6.0 / 7.0));
  CHECK(detail(r3, "aux_a") == doctest::Approx(1.75));
}

TEST_CASE("lemma5: corner maximum in the top regime") {
  {
    const CheckRecord r = check_lemma5(3, 1.75, kFast);
    CHECK(r.passed);
    CHECK(detail(r, "claim") == doctest::Approx(31.0));
  }
  CHECK(check_lemma5(3, 2.0, kFast).passed);
  CHECK(check_lemma5(5, 1.4, kFast).passed);
  CHECK_THROWS_AS(check_lemma5(3, 1.0, kFast), window_error);
}

TEST_CASE("lemma6 window") {
  CHECK(check_lemma6(3, 1.4, kFast).passed);
  CHECK(check_lemma6(7, thresholds(7).t_6n2, kFast).passed);
  CHECK_THROWS_AS(check_lemma6(3, 1.8, kFast), window_error);
}

TEST_CASE("lemma7: envelope nonpositive in the small regime") {
  CHECK(check_lemma7(3, 0.5, kFast).passed);
  CHECK(check_lemma7(3, 6.0 / 7.0, kFast).passed);
  CHECK(check_lemma7(9, 0.1, kFast).passed);
  CHECK_THROWS_AS(check_lemma7(3, 1.0, kFast), window_error);
  for (int n = 3; n <= 10; ++n) {
    CHECK(check_lemma7_case1(n).passed);
    CHECK(check_lemma7_case2(n).passed);
  }
}

TEST_CASE("lemma8: boundary maximum matches the two-branch form") {
  CHECK(check_lemma8(3, 1.0, kFast).passed);
  CHECK(check_lemma8(3, 1.2, kFast).passed);
  CHECK(check_lemma8(6, 0.8, kFast).passed);
  CHECK_THROWS_AS(check_lemma8(3, 0.5, kFast), window_error);
}

TEST_CASE("lemma9: closed-form points and identities") {
  CHECK(check_lemma9(3, 1.0).passed);
  CHECK(check_lemma9(3, 1.3).passed);  // above the flip, v^2 >= 1 side
  CHECK(check_lemma9(8, 0.3).passed);
  CHECK_THROWS_AS(check_lemma9(3, 2.0), window_error);
}

TEST_CASE("lemma10: count per side and the flip location") {
  {
    const CheckRecord r = check_lemma10(3, 1.0);
    CHECK(r.passed);
    CHECK(detail(r, "f_pair") == doctest::Approx(8.392305).epsilon(1e-6));
    CHECK(detail(r, "f_origin") == doctest::Approx(8.0));
  }
  CHECK(check_lemma10(3, 1.25).passed);
  for (int n : {3, 4, 10}) CHECK(check_lemma10_flip(n).passed);
}

TEST_CASE("lemma11: interior beats the boundary in the middle window") {
  const CheckRecord r = check_lemma11(3, 1.0, kFast);
  CHECK(r.passed);
  CHECK(detail(r, "interior_claim") == doctest::Approx(8.392305).epsilon(1e-6));
  CHECK(detail(r, "boundary_claim") == doctest::Approx(6.0));
  CHECK(check_lemma11(3, 1.3, kFast).passed);
}

TEST_CASE("theorem check per regime") {
  {
    const CheckRecord r = check_theorem(4, 1.0, 256);
    CHECK(r.passed);
    CHECK(r.check_id == "theorem1.1");
    CHECK(detail(r, "bound") == doctest::Approx(9.0));
    CHECK(std::fabs(detail(r, "koebe_value") - 9.0) < 1e-9);
  }
  {
    const CheckRecord r = check_theorem(3, 1.0, 512);
    CHECK(r.passed);
    CHECK(r.check_id == "theorem1.2");
    CHECK(detail(r, "sharpness_gap") < 1e-3);
  }
  {
    const CheckRecord r = check_theorem(3, 0.3, 256);
    CHECK(r.passed);
    CHECK(r.check_id == "theorem1.3");
  }
}

TEST_CASE("a wrong claim is reported with a negative margin") {
  const CheckRecord good = check_sweep_vs_claim(3, 2.0, 128, 13.0, "fixture");
  CHECK(good.passed);
  const CheckRecord bad = check_sweep_vs_claim(3, 2.0, 128, 12.0, "fixture");
  CHECK(!bad.passed);
  CHECK(bad.margin < 0.0);
}

TEST_CASE("corollary specializations") {
  CHECK(check_corollary(3).passed);
  const CheckRecord r4 = check_corollary(4);
  CHECK(r4.passed);
  CHECK(detail(r4, "printed_clause2_lower") == doctest::Approx(13.0 / 8.0));
  CHECK(detail(r4, "general_clause2_lower") == doctest::Approx(8.0 / 13.0));
  CHECK_THROWS_AS(check_corollary(5), argument_error);
}

TEST_CASE("property suites pass under the default seed") {
  const auto records = check_properties(20260808ULL);
  REQUIRE(records.size() == 7);
  std::set<std::string> ids;
  for (const auto& r : records) {
    CAPTURE(r.check_id);
    CHECK(r.passed);
    ids.insert(r.check_id);
  }
  CHECK(ids == std::set<std::string>{"prop.symmetry", "prop.envelope",
                                     "prop.form_agreement", "prop.gradient_fd",
                                     "prop.rotation", "prop.jconvexity",
                                     "prop.jdominates"});
}

TEST_CASE("lambda samples straddle every threshold") {
  const RegimeThresholds t = thresholds(3);
  const auto xs = lambda_samples_for(t, 15);
  CHECK(xs.size() >= 45);
  for (double tau : {t.lambda_small_max, t.lambda_large_min, t.t_5n1, t.t_6n2, t.aux_a}) {
    CHECK(std::count_if(xs.begin(), xs.end(), [&](double l) {
            return std::fabs(l - tau) < 1.5e-6;
          }) >= 2);
  }
  for (double l : xs) {
    CHECK(l > 0.0);
    CHECK(l <= 2.0);
  }
  CHECK(std::is_sorted(xs.begin(), xs.end()));
  // one sample per regime in the minimal configuration
  const auto minimal = lambda_samples_for(t, 1);
  CHECK(minimal.size() == 3);
}

TEST_CASE("small full run passes and is deterministic") {
  VerifyConfig cfg;
  cfg.n_min = 3;
  cfg.n_max = 4;
  cfg.lambda_samples = 3;
  cfg.grid = 128;
  const VerificationReport rep = run_full(cfg);
  CHECK(rep.failure_count() == 0);
  CHECK(!rep.records.empty());
  CHECK(rep.flags.size() == 1);
  CHECK(rep.flags[0].find("corollary_n4_range_discrepancy") == 0);
  const VerificationReport again = run_full(cfg);
  CHECK(rep.render_text() == again.render_text());

  const auto counts = rep.counts_by_id();
  CHECK(counts.at("chain") == 2);
  CHECK(counts.at("lemma10.flip") == 2);
  CHECK(counts.count("theorem1.1") == 1);
  CHECK(counts.count("theorem1.2") == 1);
  CHECK(counts.count("theorem1.3") == 1);
}

TEST_CASE("vacuous run yields an empty report") {
  VerifyConfig cfg;
  cfg.lambda_samples = 0;
  const VerificationReport rep = run_full(cfg);
  CHECK(rep.records.empty());
  CHECK(rep.failure_count() == 0);
  CHECK(rep.counts_by_id().empty());
  CHECK(rep.render_text().empty());
}

TEST_CASE("config validation") {
  VerifyConfig cfg;
  cfg.n_min = 2;
  CHECK_THROWS_AS(run_full(cfg), domain_error);
  cfg.n_min = 5;
  cfg.n_max = 3;
  CHECK_THROWS_AS(run_full(cfg), argument_error);
}

TEST_CASE("report text format") {
  VerifyConfig cfg;
  cfg.n_min = 3;
  cfg.n_max = 3;
  cfg.lambda_samples = 1;
  cfg.grid = 128;
  const VerificationReport rep = run_full(cfg);
  const std::string text = rep.render_text();
  CHECK(text.find("check_id=chain n=3 lambda=nan passed=true margin=") == 0);
  CHECK(text.find("check_id=theorem1.") != std::string::npos);
  // every line carries the five required keys
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string line = text.substr(pos, eol - pos);
    CHECK(line.find("check_id=") == 0);
    CHECK(line.find(" n=") != std::string::npos);
    CHECK(line.find(" lambda=") != std::string::npos);
    CHECK(line.find(" passed=") != std::string::npos);
    CHECK(line.find(" margin=") != std::string::npos);
    pos = eol + 1;
  }
}
