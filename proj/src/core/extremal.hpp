#pragma once

#include <complex>
#include <vector>

#include "core/params.hpp"

namespace zalcman {

/// Torus parameters of an extreme point of the closed convex hull of the
/// close-to-convex family: x = e^{is}, y = e^{it} with x != y.
struct ExtremePoint {
  double s;  // radians in [0, 2*pi)
  double t;  // radians in [0, 2*pi)
};

/// Wraps both angles into [0, 2*pi) and rejects s == t (x == y is outside
/// the family). Throws domain_error.
ExtremePoint make_extreme_point(double s, double t);

/// k-th Taylor coefficient of the extreme point,
///   a_k = ((k+1)/2) y^{k-1} - ((k-1)/2) x y^{k-2},   k >= 2.
/// a_1 = 1 by normalization and is not produced here (k < 2 rejected).
std::complex<double> extreme_coeff(const ExtremePoint& p, int k);

/// Finitely many Taylor coefficients a_1..a_N of a normalized function;
/// a_1 = 1 is enforced at construction.
class CoefficientVector {
 public:
  explicit CoefficientVector(std::vector<std::complex<double>> coeffs);

  /// a_1 = 1, a_k = 0 for k >= 2 (the identity map z -> z).
  static CoefficientVector identity(int count);
  static CoefficientVector from_extreme_point(const ExtremePoint& p, int count);

  int count() const { return static_cast<int>(a_.size()); }
  std::complex<double> coeff(int k) const;  // 1-based index

 private:
  std::vector<std::complex<double>> a_;
};

struct FunctionalValue {
  std::complex<double> z_complex;  // lambda*a_n^2 - a_{2n-1}
  double z_modulus;
  double j_value;  // J = lambda*(Re a_n)^2 - Re a_{2n-1}; J >= Re z always
};

/// Needs coefficients up to index 2n-1; throws argument_error otherwise.
FunctionalValue zalcman_functional(const CoefficientVector& c, const ProblemParams& p);

/// Functional value at an extreme point, evaluated directly from the angles.
FunctionalValue functional_at(const ProblemParams& p, double s, double t);

/// J alone, the cheap inner loop of the sweep.
double j_at(const ProblemParams& p, double s, double t);

/// a_k -> a_k * e^{i(k-1)theta}: the coefficient action of z -> e^{-i theta} f(e^{i theta} z).
CoefficientVector rotate(const CoefficientVector& c, double theta);

/// Exact convexity deficit of J along a segment: J(t g + (1-t) h) equals
/// t J(g) + (1-t) J(h) minus this quantity, lambda*t*(1-t)*(b_n - c_n)^2,
/// where b_n, c_n are the real parts of the n-th coefficients.
double j_convexity_remainder(double b_n, double c_n, double t_mix, double lambda);

struct SweepResult {
  double max_value;  // max of J over the sampled extreme points
  ExtremePoint argmax;
};

/// Dense (s, t) lattice plus local refinement; deterministic, ties broken
/// toward the smallest t, then smallest s. Lattice points with s == t are
/// skipped. grid >= 8.
SweepResult sweep_extreme_points(const ProblemParams& p, int grid);

}  // namespace zalcman
