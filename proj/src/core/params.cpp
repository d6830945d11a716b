#include "core/params.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace zalcman {

namespace {
constexpr int kMaxN = 1'000'000;
}

ProblemParams make_params(int n, double lambda) {
  if (n < 3) throw domain_error("n must be >= 3");
  if (n > kMaxN) throw domain_error("n must be <= 1e6");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw domain_error("lambda must be positive and finite");
  return ProblemParams{n, lambda};
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::SmallLambda: return "SmallLambda";
    case Regime::MiddleLambda: return "MiddleLambda";
    case Regime::LargeLambda: return "LargeLambda";
  }
  return "?";
}

RegimeThresholds thresholds(int n) {
  if (n < 3) throw domain_error("n must be >= 3");
  if (n > kMaxN) throw domain_error("n must be <= 1e6");
  const double dn = n;
  const double root = std::sqrt(5.0 * dn * dn - 4.0 * dn);
  RegimeThresholds t;
  t.lambda_small_max = 2.0 * dn / (dn * dn - dn + 1.0);
  t.lambda_large_min = (3.0 * dn + root) / (dn * dn + dn);
  t.aux_a = (10.0 * dn - 2.0) / ((dn + 1.0) * (dn + 1.0));
  t.aux_b_nminus = 2.0 / (dn - 1.0);
  t.aux_b_nplus = 2.0 / (dn + 1.0);
  t.aux_b = 2.0 / dn;
  t.t_6n2 = (6.0 * dn - 2.0) / (dn * dn + dn);
  t.t_5n1 = (5.0 * dn - 1.0) / (dn * dn + dn);
  t.t_4n2 = (4.0 * dn - 2.0) / (dn * dn);
  t.t_8n = 8.0 * dn / ((dn + 1.0) * (dn + 1.0));
  t.t_small_mirror = (3.0 * dn - root) / (dn * dn + dn);
  return t;
}

Regime classify(const ProblemParams& p) {
  make_params(p.n, p.lambda);
  const RegimeThresholds t = thresholds(p.n);
  if (p.lambda <= t.lambda_small_max) return Regime::SmallLambda;
  if (p.lambda < t.lambda_large_min) return Regime::MiddleLambda;
  return Regime::LargeLambda;
}

double theorem_bound_middle(const ProblemParams& p) {
  const double dn = p.n;
  const double l = p.lambda;
  const double s = std::sqrt(dn * l * (2.0 - l));
  const double num = l * (4.0 * dn * (dn + 1.0) - (3.0 * dn * dn + 1.0) * l) +
                     4.0 * dn * (2.0 - l) * s;
  const double den = l * (8.0 * dn - l * (dn + 1.0) * (dn + 1.0));
  return num / den;
}

double theorem_bound(const ProblemParams& p) {
  const double dn = p.n;
  switch (classify(p)) {
    case Regime::LargeLambda: return p.lambda * dn * dn - (2.0 * dn - 1.0);
    case Regime::MiddleLambda: return theorem_bound_middle(p);
    case Regime::SmallLambda: return 2.0 * dn - 1.0;
  }
  return 0.0;  // unreachable
}

}  // namespace zalcman
