#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "core/errors.hpp"
#include "core/extremal.hpp"
#include "doctest.h"

using namespace zalcman;

namespace {
constexpr double kPi = std::numbers::pi;

double unit_double(std::mt19937_64& g) { return (g() >> 11) * 0x1.0p-53; }
}  // namespace

TEST_CASE("extreme point construction") {
  CHECK_THROWS_AS(make_extreme_point(1.0, 1.0), domain_error);
  CHECK_THROWS_AS(make_extreme_point(0.0, 2.0 * kPi), domain_error);  // same after wrap
  const ExtremePoint p = make_extreme_point(-kPi, 0.5);
  CHECK(p.s == doctest::Approx(kPi));
  CHECK(p.t == 0.5);
}

TEST_CASE("koebe coefficients: a_k = k at (s, t) = (pi, 0)") {
  const ExtremePoint koebe = make_extreme_point(kPi, 0.0);
  for (int k = 2; k <= 50; ++k) {
    const std::complex<double> a = extreme_coeff(koebe, k);
    CHECK(a.real() == double(k));  // exact: cos(pi) rounds to -1
    CHECK(std::fabs(a.imag()) < 1e-13);
  }
}

TEST_CASE("alternating koebe rotation: a_k = (-1)^(k-1) k at (0, pi)") {
  const ExtremePoint p = make_extreme_point(0.0, kPi);
  for (int k = 2; k <= 50; ++k) {
    const std::complex<double> a = extreme_coeff(p, k);
    const double want = (k % 2 == 0 ? -1.0 : 1.0) * k;
    CHECK(a.real() == doctest::Approx(want).epsilon(1e-13));
    CHECK(std::fabs(a.imag()) < 1e-12);
  }
}

TEST_CASE("hand-substituted coefficient at x = i, y = 1") {
  const std::complex<double> a3 = extreme_coeff(make_extreme_point(kPi / 2.0, 0.0), 3);
  CHECK(a3.real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(a3.imag() == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("coefficient index preconditions") {
  const ExtremePoint p = make_extreme_point(1.0, 2.0);
  CHECK_THROWS_AS(extreme_coeff(p, 1), argument_error);
  CHECK_THROWS_AS(extreme_coeff(p, 0), argument_error);
  const std::vector<std::complex<double>> bad{{2.0, 0.0}};
  CHECK_THROWS_AS(CoefficientVector{bad}, argument_error);
  CHECK_THROWS_AS(
      zalcman_functional(CoefficientVector::identity(3), make_params(3, 1.0)),
      argument_error);
}

TEST_CASE("functional values on the koebe function") {
  const auto koebe = CoefficientVector::from_extreme_point(
      make_extreme_point(kPi, 0.0), 9);
  {
    const FunctionalValue f = zalcman_functional(koebe, make_params(3, 1.0));
    CHECK(f.z_complex.real() == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(f.z_modulus == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(f.j_value == doctest::Approx(4.0).epsilon(1e-14));
  }
  {
    const FunctionalValue f = zalcman_functional(koebe, make_params(4, 2.0));
    CHECK(f.z_complex.real() == doctest::Approx(25.0).epsilon(1e-14));
    CHECK(f.z_modulus == doctest::Approx(25.0).epsilon(1e-14));
  }
}

TEST_CASE("identity function has vanishing functional") {
  const auto id = CoefficientVector::identity(9);
  const FunctionalValue f = zalcman_functional(id, make_params(3, 1.7));
  CHECK(f.z_complex == std::complex<double>(0.0, 0.0));
  CHECK(f.j_value == 0.0);
}

TEST_CASE("rotation by pi matches the alternating extreme point") {
  const auto koebe = CoefficientVector::from_extreme_point(
      make_extreme_point(kPi, 0.0), 12);
  const auto rotated = rotate(koebe, kPi);
  const auto alternating = CoefficientVector::from_extreme_point(
      make_extreme_point(0.0, kPi), 12);
  for (int k = 2; k <= 12; ++k)
    CHECK(std::abs(rotated.coeff(k) - alternating.coeff(k)) < 1e-12);
}

TEST_CASE("zero rotation is the identity") {
  const auto c = CoefficientVector::from_extreme_point(make_extreme_point(1.2, 2.3), 9);
  const auto r = rotate(c, 0.0);
  for (int k = 1; k <= 9; ++k) CHECK(r.coeff(k) == c.coeff(k));
}

TEST_CASE("modulus is rotation invariant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + int(rng() % 8);
    const ProblemParams p = make_params(n, 0.05 + 1.9 * unit_double(rng));
    const double s = 2.0 * kPi * unit_double(rng);
    const double t = s + 0.1 + 5.0 * unit_double(rng);
    const auto c = CoefficientVector::from_extreme_point(make_extreme_point(s, t),
                                                         2 * n - 1);
    const double base = zalcman_functional(c, p).z_modulus;
    const double theta = 2.0 * kPi * unit_double(rng);
    CHECK(zalcman_functional(rotate(c, theta), p).z_modulus ==
          doctest::Approx(base).epsilon(1e-13));
  }
}

TEST_CASE("convexity remainder examples") {
  CHECK(j_convexity_remainder(2.0, 2.0, 0.5, 1.0) == 0.0);
  CHECK(j_convexity_remainder(3.0, 1.0, 0.5, 1.0) == doctest::Approx(1.0));
  CHECK(j_convexity_remainder(3.0, 1.0, 0.25, 2.0) == doctest::Approx(1.5));
  CHECK_THROWS_AS(j_convexity_remainder(1.0, 1.0, 1.5, 1.0), argument_error);
}

TEST_CASE("convexity remainder is the exact mixing defect of J") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + int(rng() % 6);
    const ProblemParams p = make_params(n, 0.1 + 1.8 * unit_double(rng));
    const int count = 2 * n - 1;
    std::vector<std::complex<double>> ga(count), ha(count);
    ga[0] = ha[0] = {1.0, 0.0};
    for (int i = 1; i < count; ++i) {
      ga[i] = {4.0 * unit_double(rng) - 2.0, 4.0 * unit_double(rng) - 2.0};
      ha[i] = {4.0 * unit_double(rng) - 2.0, 4.0 * unit_double(rng) - 2.0};
    }
    const double tm = unit_double(rng);
    std::vector<std::complex<double>> mixed(count);
    for (int i = 0; i < count; ++i) mixed[i] = tm * ga[i] + (1.0 - tm) * ha[i];
    mixed[0] = {1.0, 0.0};
    const CoefficientVector g(ga), h(ha), m(mixed);
    const double lhs = zalcman_functional(m, p).j_value;
    const double rhs = tm * zalcman_functional(g, p).j_value +
                       (1.0 - tm) * zalcman_functional(h, p).j_value -
                       j_convexity_remainder(g.coeff(n).real(), h.coeff(n).real(), tm,
                                             p.lambda);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("J dominates the real part of the functional") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 3 + int(rng() % 10);
    const ProblemParams p = make_params(n, 0.05 + 1.9 * unit_double(rng));
    const double s = 2.0 * kPi * unit_double(rng);
    double t = 2.0 * kPi * unit_double(rng);
    if (t == s) t += 0.25;
    const FunctionalValue f = functional_at(p, s, t);
    CHECK(f.j_value >= f.z_complex.real() - 1e-12);
    CHECK(f.z_modulus == doctest::Approx(std::abs(f.z_complex)).epsilon(1e-15));
  }
}

TEST_CASE("direct functional evaluation agrees with the coefficient route") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + int(rng() % 8);
    const ProblemParams p = make_params(n, 0.05 + 1.9 * unit_double(rng));
    const double s = 2.0 * kPi * unit_double(rng);
    const double t = s + 0.05 + unit_double(rng);
    const auto via_coeffs = zalcman_functional(
        CoefficientVector::from_extreme_point(make_extreme_point(s, t), 2 * n - 1), p);
    const auto direct = functional_at(p, s, t);
    CHECK(std::abs(via_coeffs.z_complex - direct.z_complex) < 1e-11);
    CHECK(via_coeffs.j_value == doctest::Approx(direct.j_value).epsilon(1e-12));
    CHECK(j_at(p, s, t) == doctest::Approx(direct.j_value).epsilon(1e-14));
  }
}

TEST_CASE("sweep reaches the koebe value in the large regime") {
  const SweepResult r = sweep_extreme_points(make_params(3, 2.0), 512);
  CHECK(r.max_value == doctest::Approx(13.0).epsilon(1e-9));
  CHECK(r.argmax.s == doctest::Approx(kPi).epsilon(1e-6));
  CHECK(std::fabs(r.argmax.t) < 1e-6);
}

TEST_CASE("sweep approaches the middle-regime bound") {
  const SweepResult r = sweep_extreme_points(make_params(3, 1.0), 1024);
  CHECK(r.max_value == doctest::Approx(5.0980762113533157).epsilon(1e-7));
  CHECK(r.max_value <= 5.0980762113533157 + 1e-9);
}

TEST_CASE("sweep stays below the small-regime bound") {
  const SweepResult r = sweep_extreme_points(make_params(3, 0.5), 512);
  CHECK(r.max_value <= 5.0 + 1e-6);
  CHECK(r.max_value > 4.9);  // the bound 2n-1 is attained in the limit
}

TEST_CASE("sweep rejects tiny grids") {
  CHECK_THROWS_AS(sweep_extreme_points(make_params(3, 1.0), 4), argument_error);
}

TEST_CASE("sweep is deterministic") {
  const SweepResult a = sweep_extreme_points(make_params(5, 1.1), 128);
  const SweepResult b = sweep_extreme_points(make_params(5, 1.1), 128);
  CHECK(a.max_value == b.max_value);
  CHECK(a.argmax.s == b.argmax.s);
  CHECK(a.argmax.t == b.argmax.t);
}
