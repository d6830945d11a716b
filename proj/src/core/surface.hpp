#pragma once

#include <string>
#include <vector>

#include "core/params.hpp"

namespace zalcman {

/// F(u,v) = [(n+1)^2 L - 8n] u^2 - 2(n-1)[(n+1)L - 2] uv
///          + 4(n-1) sqrt(1-u^2) sqrt(1-v^2) + (n-1)^2 L v^2  on [-1,1]^2.
double eval_F(const ProblemParams& p, double u, double v);

/// G(u,v) = [L(n+1)^2 - 10n + 2] u^2 - 2(n-1)[L(n+1) - 2] uv
///          + (n-1)[L(n-1) - 2] v^2, the quadratic envelope of F - 4(n-1).
double eval_G(const ProblemParams& p, double u, double v);

/// Same surface through the A(n), B(n) decomposition:
/// (n+1)^2 [L-A(n)] u^2 - 2(n^2-1)[L-B(n+1)] uv + (n-1)^2 [L-B(n-1)] v^2.
double eval_G_via_aux(const ProblemParams& p, double u, double v);

struct Gradient {
  double du;
  double dv;
};

/// Analytic gradient of F; defined on the open square only (the square-root
/// terms are not differentiable at |u| = 1 or |v| = 1). Boundary inputs are
/// rejected with a pointer to boundary_restrictions.
Gradient gradient_F(const ProblemParams& p, double u, double v);

enum class CriticalKind { Origin, InteriorPair };

struct CriticalPoint {
  double u;
  double v;
  double f_value;
  double gradient_residual;
  CriticalKind kind;
};

struct CriticalPointSet {
  std::vector<CriticalPoint> points;  // origin first, then the +- pair if present
  std::string regime_note;
};

/// Raw sub-expressions of the critical-point formulas, exposed for sign checks.
struct CriticalPointParts {
  bool in_window;      // 2n/(n^2-n+1) < lambda < (6n-2)/(n^2+n)
  double sqrt_q;       // sqrt(n*lambda*(2-lambda))
  double pair_num;     // (n-1)*lambda - sqrt_q            (> 0 in the window)
  double pair_denom;   // (n-1)*lambda - 2*sqrt_q          (< 0 in the window)
  double v_sq;         // (sqrt(nL)+sqrt(2-L))^2 * pair_num / ((n-1)^2 L^2)
  double uv;           // ((n+1)L-2) * pair_num / ((n-1) L * pair_denom)
  double u_sq;         // (pair_denom + 2) * pair_num / pair_denom^2
  double a_coef;       // [(n+1)^2 L - 8n][(n+1)L - 2]
  double b_coef;       // -2 L (n-1)[(n+1)^2 L - 2(3n+1)]
  double c_coef;       // L (n-1)^2 [(n+1)L - 2]
  double disc_closed;  // 64 (n-1)^2 L n (2-L)
  double disc_from_abc;
  double ratio_root_plus;   // (u/v) root with the + radical
  double ratio_root_minus;  // (u/v) root with the - radical (the rejected one)
  double factor_lhs;        // L[(n+1)^2 L - 8n]
  double factor_rhs;        // ((n-1)L + 2 sqrt_q)((n-1)L - 2 sqrt_q)
};

CriticalPointParts critical_point_parts(const ProblemParams& p);

/// Origin always; the +- interior pair exactly when it lies inside the open
/// square (v^2 < 1 up to a 1e-12 boundary-touching collar). The first pair
/// member carries v > 0, its u sign fixed by the uv product.
CriticalPointSet critical_points(const ProblemParams& p);

/// Closed form for F at the interior pair,
///   (4L(n-1)[L(n^2+1)-4n] + 16n(2-L) sqrt(nL(2-L))) / (L[8n - L(n+1)^2]).
/// Middle regime only; throws window_error otherwise.
double F_at_interior_critical(const ProblemParams& p);

/// One edge of the square as a quadratic in the free coordinate.
struct EdgeRestriction {
  double c2, c1, c0;         // value(x) = c2 x^2 + c1 x + c0
  double stationary;         // -c1/(2 c2); NaN if c2 == 0
  bool stationary_interior;  // c2 < 0 and stationary strictly inside (-1,1)
  double max_value;          // exact quadratic max over [-1, 1]
  double argmax;             // ties broken toward the smaller coordinate
  double eval(double x) const { return (c2 * x + c1) * x + c0; }
};

/// The four one-dimensional restrictions; the u = -1 and v = -1 edges follow
/// from the central symmetry F(u,v) = F(-u,-v), G likewise.
struct BoundaryRestrictions {
  EdgeRestriction f_on_u_edge;  // Psi(v) = F(1, v)
  EdgeRestriction f_on_v_edge;  // Phi(u) = F(u, 1)
  EdgeRestriction g_on_u_edge;  // psi(v) = G(1, v)
  EdgeRestriction g_on_v_edge;  // phi(u) = G(u, 1)
};

BoundaryRestrictions boundary_restrictions(const ProblemParams& p);

/// The two-branch closed form A_{n,lambda} for max F over the boundary of the
/// square, valid for 2n/(n^2-n+1) < lambda < (6n-2)/(n^2+n):
///   4(n-1)^2[L(n-1)+1]/(8n-(n+1)^2 L)   for lambda <= (5n-1)/(n^2+n),
///   4 L n^2 - 12n + 4                    otherwise.
double boundary_max_F(const ProblemParams& p);

/// Discriminant of the u/v quadratic, 64 (n-1)^2 lambda n (2-lambda).
double discriminant(const ProblemParams& p);

struct CubicA {
  double expanded;  // n(n+1)^2 L^3 - 2n(n+1)(n+3) L^2 + 4(3n^2+n+1) L - 8n
  double factored;  // [n(n+1) L^2 - 6n L + 4] [(n+1) L - 2n]
};

CubicA cubic_A(const ProblemParams& p);

}  // namespace zalcman
