#include <catch2/catch_amalgamated.hpp>

#include "reciplab/oracle.hpp"
#include "reciplab/rng.hpp"

using namespace reciplab;

namespace {
constexpr Precision P = 256;
}

TEST_CASE("series oracle matches the closed form") {
  const Complex z(0.3, 0.4, P);
  for (Kind j : {Kind::I, Kind::II}) {
    for (unsigned long n = 1; n <= 6; ++n) {
      const SeriesResult s = phi_series(j, n, z, 2000);
      const Complex direct = phi(j, n, z);
      CHECK((direct - s.value).abs() <= s.tail_bound);
    }
  }
}

TEST_CASE("series oracle on seeded band points") {
  Rng rng(99);
  for (int i = 0; i < 5; ++i) {
    const Complex z(rng.uniform01(), 0.1 + 0.9 * rng.uniform01(), P);
    const auto sums = phi_series_batch(z, 2000, 6);
    for (Kind j : {Kind::I, Kind::II}) {
      for (unsigned long n = 1; n <= 6; ++n) {
        const Real bound = series_tail_bound(j, n, z, 2000);
        CHECK((phi(j, n, z) - sums[j == Kind::I ? 0 : 1][n]).abs() <= bound);
        // batch and single-call paths share one kernel
        if (i == 0 && n <= 2) {
          const SeriesResult s = phi_series(j, n, z, 2000);
          CHECK((s.value - sums[j == Kind::I ? 0 : 1][n]).abs().is_zero());
        }
      }
    }
  }
}

TEST_CASE("series elementary values") {
  // csc(pi/2) = 1
  const SeriesResult s = phi_series(Kind::II, 1, Complex(Rational(1, 2), P), 1000);
  CHECK((s.value - Complex(Real::pi(P), Real(P))).abs() <= s.tail_bound);
  // phi_1^{(I)}(i) is already close to the -i pi limit
  const SeriesResult si = phi_series(Kind::I, 1, Complex(0.0, 1.0, P), 4000);
  CHECK((si.value + Complex(Real(P), Real::pi(P))).abs() <=
        si.tail_bound + Real(2e-2, P));

  CHECK_THROWS_AS(phi_series(Kind::I, 1, Complex(1e-5, 0.0, P), 1000), PoleProximityError);
  CHECK_THROWS_AS(phi_series(Kind::I, 1, Complex(0.5, 100.0, P), 80), Error);
}

TEST_CASE("tail bounds shrink to practical size for higher orders") {
  const Complex z(0.3, 0.7, P);
  for (unsigned long n = 2; n <= 6; ++n)
    for (Kind j : {Kind::I, Kind::II})
      CHECK(series_tail_bound(j, n, z, 10000) <= Real(1e-3, P));
}

TEST_CASE("contour oracle on the first-order factors") {
  const auto f_cot = [](const Complex& z) { return phi(Kind::I, 1, z); };
  const Rational half(1, 2);
  // residue 1/z
  const Complex c0 = contour_coefficient(f_cot, Rational(0), -1, half, 256, P);
  CHECK((c0 - Complex(Real(1L, P), Real(P))).abs() <= Real::exp2i(-120, P));
  // first Taylor coefficient -alpha_2 = -pi^2/3
  const Complex c1 = contour_coefficient(f_cot, Rational(0), 1, half, 256, P);
  const Real expect = -(Real::pi(P) * Real::pi(P) / Real(3L, P));
  CHECK((c1 - Complex(expect, Real(P))).abs() <= Real::exp2i(-120, P));
  // coefficients with an odd zeta index vanish
  const auto f_csc = [](const Complex& z) { return phi(Kind::II, 1, z); };
  const Complex c2 = contour_coefficient(f_csc, Rational(0), 0, half, 256, P);
  CHECK(c2.abs() <= Real::exp2i(-120, P));
  const auto f_csc2 = [](const Complex& z) { return phi(Kind::II, 2, z); };
  const Complex c3 = contour_coefficient(f_csc2, Rational(0), 1, half, 256, P);
  CHECK(c3.abs() <= Real::exp2i(-120, P));
  // the even-index constant of the second cosecant derivative is -alpha_2^{(II)}
  const Complex c4 = contour_coefficient(f_csc2, Rational(0), 0, half, 256, P);
  const Real a2 = Real::pi(P) * Real::pi(P) / Real(6L, P);
  CHECK((c4 + Complex(a2, Real(P))).abs() <= Real::exp2i(-120, P));

  // node-count contract
  CHECK_THROWS_AS(contour_coefficient(f_cot, Rational(0), 0, half, 100, P), UsageError);
  CHECK_THROWS_AS(contour_coefficient(f_cot, Rational(0), 0, half, 300, P), UsageError);

  // starting grids lead to the same converged value
  const Complex again = contour_coefficient(f_cot, Rational(0), 1, half, 512, P);
  CHECK((again - c1).abs() <= Real::exp2i(-120, P));
}

TEST_CASE("derivation ladder via central differences") {
  const Complex z1(0.3, 0.5, P);
  const Real h1(1e-3, P), h2(5e-4, P), h3(2.5e-4, P);
  const Real r1 = finite_diff_check(Kind::I, 1, z1, h1);
  const Real r2 = finite_diff_check(Kind::I, 1, z1, h2);
  const Real r3 = finite_diff_check(Kind::I, 1, z1, h3);
  CHECK(r1 <= Real(1e-2, P));
  CHECK(r1 / r2 >= Real(3.6, P));
  CHECK(r2 / r3 >= Real(3.6, P));

  const Complex z2(0.25, 0.4, P);
  const Real s1 = finite_diff_check(Kind::II, 2, z2, h1);
  const Real s2 = finite_diff_check(Kind::II, 2, z2, h2);
  CHECK(s1 / s2 >= Real(3.6, P));

  CHECK_THROWS_AS(finite_diff_check(Kind::I, 1, Complex(0.001, 0.0, P), Real(1e-3, P)),
                  PoleProximityError);
}
