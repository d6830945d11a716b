#pragma once

#include <string_view>

namespace zalcman {

/// Problem instance: coefficient index n >= 3 and weight lambda > 0 of the
/// functional lambda*a_n^2 - a_{2n-1}.
struct ProblemParams {
  int n;
  double lambda;
};

/// Validates (n, lambda). n is capped at 1e6 so n^4-scale intermediates stay
/// comfortably inside double range. Throws domain_error on violation.
ProblemParams make_params(int n, double lambda);

/// The three lambda intervals of the bound. Endpoint convention: the small
/// branch is closed above, the large branch closed below, the middle open.
enum class Regime { SmallLambda, MiddleLambda, LargeLambda };

std::string_view to_string(Regime r);

/// Every n-dependent threshold constant used by the case analysis.
struct RegimeThresholds {
  double lambda_small_max;  // 2n/(n^2-n+1): top of the small-lambda branch
  double lambda_large_min;  // (3n+sqrt(5n^2-4n))/(n^2+n): bottom of the large branch
  double aux_a;             // A(n) = (10n-2)/(n+1)^2
  double aux_b_nminus;      // B(n-1) = 2/(n-1)
  double aux_b_nplus;       // B(n+1) = 2/(n+1)
  double aux_b;             // B(n) = 2/n
  double t_6n2;             // (6n-2)/(n^2+n)
  double t_5n1;             // (5n-1)/(n^2+n): branch split of the boundary max
  double t_4n2;             // (4n-2)/n^2
  double t_8n;              // 8n/(n+1)^2: sign change of (n+1)^2*lambda - 8n
  double t_small_mirror;    // (3n-sqrt(5n^2-4n))/(n^2+n): unused mirror root
};

RegimeThresholds thresholds(int n);

Regime classify(const ProblemParams& p);

/// Three-branch bound for |lambda*a_n^2 - a_{2n-1}| over close-to-convex
/// functions:
///   large:  lambda*n^2 - (2n-1)
///   middle: (lambda[4n(n+1)-(3n^2+1)lambda] + 4n(2-lambda)sqrt(n lambda(2-lambda)))
///           / (lambda[8n - lambda(n+1)^2])
///   small:  2n-1
double theorem_bound(const ProblemParams& p);

/// Middle-branch closed form evaluated unconditionally (for cross-route checks).
double theorem_bound_middle(const ProblemParams& p);

}  // namespace zalcman
