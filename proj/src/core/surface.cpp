#include "core/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace zalcman {

namespace {

void require_in_square(double u, double v) {
  if (!(std::fabs(u) <= 1.0 && std::fabs(v) <= 1.0))
    throw domain_error("(u, v) must lie in the closed square [-1,1]^2");
}

double root_term(double x) {
  // guards against -0.0/-1e-17 noise when |x| == 1 exactly
  return std::sqrt(std::max(0.0, 1.0 - x * x));
}

}  // namespace

double eval_F(const ProblemParams& p, double u, double v) {
  make_params(p.n, p.lambda);
  require_in_square(u, v);
  const double dn = p.n, l = p.lambda;
  const double a = (dn + 1.0) * (dn + 1.0) * l - 8.0 * dn;
  const double b = (dn - 1.0) * ((dn + 1.0) * l - 2.0);
  const double c = (dn - 1.0) * (dn - 1.0) * l;
  return a * u * u - 2.0 * b * u * v + 4.0 * (dn - 1.0) * root_term(u) * root_term(v) +
         c * v * v;
}

double eval_G(const ProblemParams& p, double u, double v) {
  make_params(p.n, p.lambda);
  require_in_square(u, v);
  const double dn = p.n, l = p.lambda;
  return (l * (dn + 1.0) * (dn + 1.0) - 10.0 * dn + 2.0) * u * u -
         2.0 * (dn - 1.0) * (l * (dn + 1.0) - 2.0) * u * v +
         (dn - 1.0) * (l * (dn - 1.0) - 2.0) * v * v;
}

double eval_G_via_aux(const ProblemParams& p, double u, double v) {
  make_params(p.n, p.lambda);
  require_in_square(u, v);
  const double dn = p.n, l = p.lambda;
  const RegimeThresholds t = thresholds(p.n);
  return (dn + 1.0) * (dn + 1.0) * (l - t.aux_a) * u * u -
         2.0 * (dn * dn - 1.0) * (l - t.aux_b_nplus) * u * v +
         (dn - 1.0) * (dn - 1.0) * (l - t.aux_b_nminus) * v * v;
}

Gradient gradient_F(const ProblemParams& p, double u, double v) {
  make_params(p.n, p.lambda);
  require_in_square(u, v);
  if (std::fabs(u) == 1.0 || std::fabs(v) == 1.0)
    throw domain_error(
        "gradient_F is defined on the open square only; "
        "use boundary_restrictions for the edges");
  const double dn = p.n, l = p.lambda;
  const double a = (dn + 1.0) * (dn + 1.0) * l - 8.0 * dn;
  const double b = (dn - 1.0) * ((dn + 1.0) * l - 2.0);
  const double c = (dn - 1.0) * (dn - 1.0) * l;
  const double ru = root_term(u);
  const double rv = root_term(v);
  Gradient g;
  g.du = 2.0 * a * u - 2.0 * b * v - 4.0 * (dn - 1.0) * u * rv / ru;
  g.dv = -2.0 * b * u + 2.0 * c * v - 4.0 * (dn - 1.0) * v * ru / rv;
  return g;
}

CriticalPointParts critical_point_parts(const ProblemParams& p) {
  make_params(p.n, p.lambda);
  const double dn = p.n, l = p.lambda;
  const RegimeThresholds t = thresholds(p.n);

  CriticalPointParts parts;
  parts.in_window = l > t.lambda_small_max && l < t.t_6n2;
  const double q = dn * l * (2.0 - l);
  parts.sqrt_q = q > 0.0 ? std::sqrt(q) : std::numeric_limits<double>::quiet_NaN();
  parts.pair_num = (dn - 1.0) * l - parts.sqrt_q;
  parts.pair_denom = (dn - 1.0) * l - 2.0 * parts.sqrt_q;
  parts.v_sq = std::pow(std::sqrt(dn * l) + std::sqrt(std::max(0.0, 2.0 - l)), 2) *
               parts.pair_num / ((dn - 1.0) * (dn - 1.0) * l * l);
  parts.uv = ((dn + 1.0) * l - 2.0) * parts.pair_num /
             ((dn - 1.0) * l * parts.pair_denom);
  parts.u_sq = (parts.pair_denom + 2.0) * parts.pair_num /
               (parts.pair_denom * parts.pair_denom);
  parts.a_coef = ((dn + 1.0) * (dn + 1.0) * l - 8.0 * dn) * ((dn + 1.0) * l - 2.0);
  parts.b_coef = -2.0 * l * (dn - 1.0) *
                 ((dn + 1.0) * (dn + 1.0) * l - 2.0 * (3.0 * dn + 1.0));
  parts.c_coef = l * (dn - 1.0) * (dn - 1.0) * ((dn + 1.0) * l - 2.0);
  parts.disc_closed = 64.0 * (dn - 1.0) * (dn - 1.0) * l * dn * (2.0 - l);
  parts.disc_from_abc = parts.b_coef * parts.b_coef - 4.0 * parts.a_coef * parts.c_coef;
  const double core = l * ((dn + 1.0) * (dn + 1.0) * l - 2.0 * (3.0 * dn + 1.0));
  parts.ratio_root_plus =
      (dn - 1.0) * (core + 4.0 * parts.sqrt_q) / parts.a_coef;
  parts.ratio_root_minus =
      (dn - 1.0) * (core - 4.0 * parts.sqrt_q) / parts.a_coef;
  parts.factor_lhs = l * ((dn + 1.0) * (dn + 1.0) * l - 8.0 * dn);
  parts.factor_rhs = ((dn - 1.0) * l + 2.0 * parts.sqrt_q) * parts.pair_denom;
  return parts;
}

CriticalPointSet critical_points(const ProblemParams& p) {
  make_params(p.n, p.lambda);
  CriticalPointSet set;

  Gradient g0 = gradient_F(p, 0.0, 0.0);
  set.points.push_back({0.0, 0.0, eval_F(p, 0.0, 0.0), std::hypot(g0.du, g0.dv),
                        CriticalKind::Origin});

  const CriticalPointParts parts = critical_point_parts(p);
  if (!parts.in_window) {
    set.regime_note =
        "outside the interior critical-point window "
        "(2n/(n^2-n+1), (6n-2)/(n^2+n)); origin only";
    return set;
  }
  if (!(parts.v_sq < 1.0 - 1e-12)) {
    set.regime_note = "v^2 >= 1 at the closed-form point; interior pair excluded";
    return set;
  }

  // first pair member takes v > 0, u signed by the uv product
  const double v1 = std::sqrt(parts.v_sq);
  const double u1 = parts.uv / v1;
  const Gradient g1 = gradient_F(p, u1, v1);
  const double res = std::hypot(g1.du, g1.dv);
  const double fv = eval_F(p, u1, v1);
  set.points.push_back({u1, v1, fv, res, CriticalKind::InteriorPair});
  const Gradient g2 = gradient_F(p, -u1, -v1);
  set.points.push_back({-u1, -v1, eval_F(p, -u1, -v1), std::hypot(g2.du, g2.dv),
                        CriticalKind::InteriorPair});
  set.regime_note = "interior pair present (middle window)";
  return set;
}

double F_at_interior_critical(const ProblemParams& p) {
  if (classify(p) != Regime::MiddleLambda)
    throw window_error("F_at_interior_critical requires the middle-lambda regime");
  const double dn = p.n, l = p.lambda;
  const double s = std::sqrt(dn * l * (2.0 - l));
  return (4.0 * l * (dn - 1.0) * (l * (dn * dn + 1.0) - 4.0 * dn) +
          16.0 * dn * (2.0 - l) * s) /
         (l * (8.0 * dn - l * (dn + 1.0) * (dn + 1.0)));
}

namespace {

EdgeRestriction make_edge(double c2, double c1, double c0) {
  EdgeRestriction e;
  e.c2 = c2;
  e.c1 = c1;
  e.c0 = c0;
  e.stationary = c2 != 0.0 ? -c1 / (2.0 * c2) : std::numeric_limits<double>::quiet_NaN();
  e.stationary_interior = c2 < 0.0 && e.stationary > -1.0 && e.stationary < 1.0;

  double best_x = -1.0;
  double best_v = e.eval(-1.0);
  const double at_hi = e.eval(1.0);
  if (at_hi > best_v) {
    best_v = at_hi;
    best_x = 1.0;
  }
  if (e.stationary_interior) {
    const double at_s = e.eval(e.stationary);
    if (at_s > best_v || (at_s == best_v && e.stationary < best_x)) {
      best_v = at_s;
      best_x = e.stationary;
    }
  }
  e.max_value = best_v;
  e.argmax = best_x;
  return e;
}

}  // namespace

BoundaryRestrictions boundary_restrictions(const ProblemParams& p) {
  make_params(p.n, p.lambda);
  const double dn = p.n, l = p.lambda;
  const double fa = (dn + 1.0) * (dn + 1.0) * l - 8.0 * dn;
  const double fb = (dn - 1.0) * ((dn + 1.0) * l - 2.0);
  const double fc = (dn - 1.0) * (dn - 1.0) * l;
  const double ga = l * (dn + 1.0) * (dn + 1.0) - 10.0 * dn + 2.0;
  const double gb = (dn - 1.0) * (l * (dn + 1.0) - 2.0);
  const double gc = (dn - 1.0) * (l * (dn - 1.0) - 2.0);

  BoundaryRestrictions r;
  r.f_on_u_edge = make_edge(fc, -2.0 * fb, fa);  // F(1, v)
  r.f_on_v_edge = make_edge(fa, -2.0 * fb, fc);  // F(u, 1)
  r.g_on_u_edge = make_edge(gc, -2.0 * gb, ga);  // G(1, v)
  r.g_on_v_edge = make_edge(ga, -2.0 * gb, gc);  // G(u, 1)
  return r;
}

double boundary_max_F(const ProblemParams& p) {
  make_params(p.n, p.lambda);
  const RegimeThresholds t = thresholds(p.n);
  if (!(p.lambda > t.lambda_small_max && p.lambda < t.t_6n2))
    throw window_error(
        "boundary_max_F requires 2n/(n^2-n+1) < lambda < (6n-2)/(n^2+n)");
  const double dn = p.n, l = p.lambda;
  if (l <= t.t_5n1)
    return 4.0 * (dn - 1.0) * (dn - 1.0) * (l * (dn - 1.0) + 1.0) /
           (8.0 * dn - (dn + 1.0) * (dn + 1.0) * l);
  return 4.0 * l * dn * dn - 12.0 * dn + 4.0;
}

double discriminant(const ProblemParams& p) {
  make_params(p.n, p.lambda);
  const double dn = p.n, l = p.lambda;
  return 64.0 * (dn - 1.0) * (dn - 1.0) * l * dn * (2.0 - l);
}

CubicA cubic_A(const ProblemParams& p) {
  make_params(p.n, p.lambda);
  const double dn = p.n, l = p.lambda;
  CubicA a;
  a.expanded = dn * (dn + 1.0) * (dn + 1.0) * l * l * l -
               2.0 * dn * (dn + 1.0) * (dn + 3.0) * l * l +
               4.0 * (3.0 * dn * dn + dn + 1.0) * l - 8.0 * dn;
  a.factored = (dn * (dn + 1.0) * l * l - 6.0 * dn * l + 4.0) * ((dn + 1.0) * l - 2.0 * dn);
  return a;
}

}  // namespace zalcman
