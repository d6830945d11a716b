#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/optimize.hpp"
#include "core/params.hpp"

namespace zalcman {

/// One verified claim. margin is the minimum slack over the record's
/// assertions after each assertion's tolerance has been folded in, so
/// passed == (margin >= 0); a negative margin is the distance to the
/// violated claim. details carries every intermediate quantity needed to
/// recompute the margin by hand.
struct CheckRecord {
  std::string check_id;
  int n = 0;           // 0 when the check is not tied to an n
  double lambda;       // NaN when the check is not tied to a lambda
  bool passed = false;
  double margin = 0.0;
  std::vector<std::pair<std::string, double>> details;

  CheckRecord();
};

struct VerifyConfig {
  int n_min = 3;
  int n_max = 10;
  int lambda_samples = 15;  // per regime; 0 means a vacuous (empty) run
  int grid = 512;           // sweep grid and oracle resolution
  std::uint64_t seed = 20260808ULL;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  std::vector<std::string> flags;
  VerifyConfig config;

  int failure_count() const;
  std::map<std::string, int> counts_by_id() const;
  /// Canonical line-per-record rendering:
  ///   check_id=<id> n=<n> lambda=<float> passed=<bool> margin=<float>
  /// Byte-identical for identical configs.
  std::string render_text() const;
};

// --- individual checkers ------------------------------------------------

/// Strict ordering of all threshold constants (the two printed chains plus
/// the ordering used by the critical-point count analysis).
CheckRecord check_chain(int n);

/// lambda >= (10n-2)/(n+1)^2: max F = 4Ln^2-12n+4, attained at (1,-1)/(-1,1).
CheckRecord check_lemma5(int n, double lambda, const GridSpec& spec);

/// (6n-2)/(n^2+n) <= lambda < (10n-2)/(n+1)^2: same max for F via G.
CheckRecord check_lemma6(int n, double lambda, const GridSpec& spec);

/// 0 < lambda <= 2n/(n^2-n+1): G <= 0 on the square, plus the printed
/// edge-case formulas.
CheckRecord check_lemma7(int n, double lambda, const GridSpec& spec);

/// The two rank-deficient lambdas where G collapses to an explicit negative
/// form; checked as identities on a 101^2 lattice.
CheckRecord check_lemma7_case1(int n);  // lambda = 2/(n+1)
CheckRecord check_lemma7_case2(int n);  // lambda = 2n/(n^2-n+1)

/// Boundary max of F equals the two-branch closed form A_{n,lambda}.
CheckRecord check_lemma8(int n, double lambda, const GridSpec& spec);

/// Closed-form critical points: vanishing gradient, discriminant and
/// factorization identities, ratio-root consistency.
CheckRecord check_lemma9(int n, double lambda);

/// Critical-point count per regime side and the interior-vs-origin ordering.
CheckRecord check_lemma10(int n, double lambda);

/// The pair-existence flip sits at (3n+sqrt(5n^2-4n))/(n^2+n) to 1e-9.
CheckRecord check_lemma10_flip(int n);

/// Global max of F equals max(interior value, boundary value) per regime side.
CheckRecord check_lemma11(int n, double lambda, const GridSpec& spec);

/// Sweep of J over extreme points stays below the bound; in the large regime
/// the Koebe point attains it.
CheckRecord check_theorem(int n, double lambda, int grid);

/// Compare the sweep against an arbitrary claimed bound (test fixture hook).
CheckRecord check_sweep_vs_claim(int n, double lambda, int grid, double claim,
                                 const std::string& check_id);

/// Printed n=3 / n=4 specializations agree with the general formulas on a
/// lambda grid. The n=4 record carries the clause-(2) range discrepancy note.
CheckRecord check_corollary(int n);

/// Seeded property suites: symmetry, envelope identity, form agreement,
/// gradient vs finite differences, rotation invariance, J convexity, and
/// J dominating the real part.
std::vector<CheckRecord> check_properties(std::uint64_t seed);

/// Deterministic lambda sample set for one n: per-regime Chebyshev nodes with
/// endpoints nudged inward by 1e-6, plus straddles of every threshold.
std::vector<double> lambda_samples_for(const RegimeThresholds& t, int per_regime);

/// Everything above over the configured (n, lambda) set.
VerificationReport run_full(const VerifyConfig& config);

}  // namespace zalcman
