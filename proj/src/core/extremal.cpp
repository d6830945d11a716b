#include "core/extremal.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "core/errors.hpp"

namespace zalcman {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

std::complex<double> unit_phase(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

ExtremePoint make_extreme_point(double s, double t) {
  if (!std::isfinite(s) || !std::isfinite(t))
    throw domain_error("extreme point angles must be finite");
  const double ws = wrap_angle(s);
  const double wt = wrap_angle(t);
  if (ws == wt) throw domain_error("extreme point requires x != y (s != t mod 2*pi)");
  return ExtremePoint{ws, wt};
}

std::complex<double> extreme_coeff(const ExtremePoint& p, int k) {
  if (k < 2) throw argument_error("extreme_coeff: k >= 2 (a_1 = 1 by normalization)");
  const double kk = k;
  return 0.5 * (kk + 1.0) * unit_phase((kk - 1.0) * p.t) -
         0.5 * (kk - 1.0) * unit_phase(p.s + (kk - 2.0) * p.t);
}

CoefficientVector::CoefficientVector(std::vector<std::complex<double>> coeffs)
    : a_(std::move(coeffs)) {
  if (a_.empty()) throw argument_error("coefficient vector must not be empty");
  if (a_.front() != std::complex<double>(1.0, 0.0))
    throw argument_error("normalization requires a_1 = 1");
}

CoefficientVector CoefficientVector::identity(int count) {
  if (count < 1) throw argument_error("coefficient count must be >= 1");
  std::vector<std::complex<double>> a(count, {0.0, 0.0});
  a[0] = {1.0, 0.0};
  return CoefficientVector(std::move(a));
}

CoefficientVector CoefficientVector::from_extreme_point(const ExtremePoint& p, int count) {
  if (count < 1) throw argument_error("coefficient count must be >= 1");
  std::vector<std::complex<double>> a(count);
  a[0] = {1.0, 0.0};
  for (int k = 2; k <= count; ++k) a[k - 1] = extreme_coeff(p, k);
  return CoefficientVector(std::move(a));
}

std::complex<double> CoefficientVector::coeff(int k) const {
  if (k < 1 || k > count()) throw argument_error("coefficient index out of range");
  return a_[k - 1];
}

FunctionalValue zalcman_functional(const CoefficientVector& c, const ProblemParams& p) {
  make_params(p.n, p.lambda);
  const int need = 2 * p.n - 1;
  if (c.count() < need)
    throw argument_error("insufficient coefficient length: need indices up to 2n-1");
  const std::complex<double> an = c.coeff(p.n);
  const std::complex<double> a2 = c.coeff(need);
  FunctionalValue f;
  f.z_complex = p.lambda * an * an - a2;
  f.z_modulus = std::abs(f.z_complex);
  f.j_value = p.lambda * an.real() * an.real() - a2.real();
  return f;
}

FunctionalValue functional_at(const ProblemParams& p, double s, double t) {
  make_params(p.n, p.lambda);
  const double dn = p.n;
  const std::complex<double> an =
      0.5 * (dn + 1.0) * unit_phase((dn - 1.0) * t) -
      0.5 * (dn - 1.0) * unit_phase(s + (dn - 2.0) * t);
  const std::complex<double> a2 =
      dn * unit_phase(2.0 * (dn - 1.0) * t) -
      (dn - 1.0) * unit_phase(s + (2.0 * dn - 3.0) * t);
  FunctionalValue f;
  f.z_complex = p.lambda * an * an - a2;
  f.z_modulus = std::abs(f.z_complex);
  f.j_value = p.lambda * an.real() * an.real() - a2.real();
  return f;
}

double j_at(const ProblemParams& p, double s, double t) {
  const double dn = p.n;
  const double re_an = 0.5 * (dn + 1.0) * std::cos((dn - 1.0) * t) -
                       0.5 * (dn - 1.0) * std::cos(s + (dn - 2.0) * t);
  const double re_a2 = dn * std::cos(2.0 * (dn - 1.0) * t) -
                       (dn - 1.0) * std::cos(s + (2.0 * dn - 3.0) * t);
  return p.lambda * re_an * re_an - re_a2;
}

CoefficientVector rotate(const CoefficientVector& c, double theta) {
  std::vector<std::complex<double>> a(c.count());
  a[0] = {1.0, 0.0};
  for (int k = 2; k <= c.count(); ++k)
    a[k - 1] = c.coeff(k) * unit_phase((k - 1.0) * theta);
  return CoefficientVector(std::move(a));
}

double j_convexity_remainder(double b_n, double c_n, double t_mix, double lambda) {
  if (!(t_mix >= 0.0 && t_mix <= 1.0)) throw argument_error("t_mix must lie in [0, 1]");
  if (!(lambda > 0.0)) throw domain_error("lambda must be positive");
  const double d = b_n - c_n;
  return lambda * t_mix * (1.0 - t_mix) * d * d;
}

SweepResult sweep_extreme_points(const ProblemParams& p, int grid) {
  make_params(p.n, p.lambda);
  if (grid < 8) throw argument_error("sweep grid must be >= 8");

  const double step = kTwoPi / grid;
  double best = -std::numeric_limits<double>::infinity();
  double best_s = 0.0, best_t = 0.0;

  // Pass 1: full lattice. t-major iteration makes "first strictly greater
  // wins" the same as breaking ties toward the smallest (t, s).
  for (int jt = 0; jt < grid; ++jt) {
    const double t = jt * step;
    for (int is = 0; is < grid; ++is) {
      if (is == jt) continue;  // x == y excluded
      const double s = is * step;
      const double j = j_at(p, s, t);
      if (j > best) {
        best = j;
        best_s = s;
        best_t = t;
      }
    }
  }

  // Pass 2: rectangular refinement around the incumbent, 6 rounds of 10x zoom.
  constexpr int kRounds = 6;
  constexpr double kZoom = 10.0;
  constexpr int kSub = 17;
  double half = step;
  for (int round = 0; round < kRounds; ++round) {
    const double cs = best_s, ct = best_t;
    for (int a = 0; a < kSub; ++a) {
      const double t = ct - half + (2.0 * half) * a / (kSub - 1);
      for (int b = 0; b < kSub; ++b) {
        const double s = cs - half + (2.0 * half) * b / (kSub - 1);
        if (wrap_angle(s) == wrap_angle(t)) continue;
        const double j = j_at(p, s, t);
        if (j > best) {
          best = j;
          best_s = s;
          best_t = t;
        }
      }
    }
    half /= kZoom;
  }

  SweepResult r;
  r.max_value = best;
  r.argmax.s = wrap_angle(best_s);
  r.argmax.t = wrap_angle(best_t);
  return r;
}

}  // namespace zalcman
