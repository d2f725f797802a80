#include <doctest.h>

#include <cmath>
#include <numbers>

#include "minrep/errors.hpp"
#include "minrep/specfun.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace minrep;
using testing::rel_err;

TEST_CASE("gamma family matches frozen values") {
  for (const auto& c : oracle::kGamma) {
    // Near the overflow edge the exponential of log Gamma amplifies its rounding.
    const double tol = c.x < 50.0 ? 1e-13 : 1e-12;
    CHECK(rel_err(gamma_fn(c.x), c.gamma) < tol);
    CHECK(std::fabs(log_gamma(c.x) - c.log_gamma) < 1e-13 * std::max(1.0, std::fabs(c.log_gamma)));
    CHECK(rel_err(rgamma(c.x), 1.0 / c.gamma) < tol);
  }
}

TEST_CASE("reciprocal gamma vanishes at the poles") {
  for (double x : {0.0, -1.0, -2.0, -7.0}) CHECK(rgamma(x) == 0.0);
}

TEST_CASE("normalized modified Bessel matches frozen values") {
  for (const auto& c : oracle::kITilde) {
    INFO("nu=" << c.nu << " z=" << c.z);
    CHECK(rel_err(bessel_i_tilde(c.nu, c.z), c.value) < 1e-12);
  }
}

TEST_CASE("normalized Bessel J matches frozen values") {
  for (const auto& c : oracle::kJTilde) {
    INFO("nu=" << c.nu << " z=" << c.z);
    // Near zeros of J the relative error is taken against the series scale.
    const double scale = std::max(std::abs(c.value), std::abs(bessel_i_tilde(c.nu, std::abs(c.z))) * 1e-16);
    CHECK(std::abs(bessel_j_tilde(c.nu, c.z) - c.value) / std::max(std::abs(c.value), scale) < 1e-10);
  }
}

TEST_CASE("plain modified Bessel matches frozen values") {
  for (const auto& c : oracle::kIPlain) {
    INFO("nu=" << c.nu << " z=" << c.z);
    CHECK(rel_err(bessel_i(c.nu, c.z), c.value) < 1e-12);
  }
}

TEST_CASE("series and recurrence agree in the switching region") {
  for (double nu : {0.0, 0.5, 3.0})
    for (double x : {8.0, 12.0, 16.0}) {
      const cplx z(x, 0.7 * x);
      CHECK(rel_err(bessel_i_tilde(nu, z), bessel_i_tilde_series(nu, z)) < 1e-10);
    }
}

TEST_CASE("J tilde is I tilde on the rotated argument") {
  for (double nu : {0.0, 1.5, 4.0})
    for (cplx z : {cplx(1.0, 0.2), cplx(6.0, -1.0), cplx(0.3, 9.0)})
      CHECK(rel_err(bessel_j_tilde(nu, z), bessel_i_tilde(nu, cplx(0.0, 1.0) * z)) < 1e-12);
}

TEST_CASE("half order closed forms") {
  for (double z : {0.2, 1.0, 5.0, 20.0}) {
    CHECK(rel_err(bessel_i_tilde(0.5, z), 2.0 * std::sinh(z) / (std::sqrt(std::numbers::pi) * z)) < 1e-13);
    CHECK(rel_err(bessel_i_tilde(-0.5, z), std::cosh(z) / std::sqrt(std::numbers::pi)) < 1e-13);
  }
}

TEST_CASE("scaled Bessel keeps large arguments finite") {
  const ScaledComplex s = bessel_i_tilde_scaled(1.0, 2000.0);
  CHECK(std::isfinite(s.log_scale));
  CHECK(std::abs(s.mantissa) > 0.0);
  // log I~_1(x) ~ x - 1.5 log x + log(2 / sqrt(2 pi)).
  const double expected = 2000.0 - 1.5 * std::log(2000.0) + std::log(2.0 / std::sqrt(2.0 * std::numbers::pi));
  CHECK(std::fabs(std::log(std::abs(s.mantissa)) + s.log_scale - expected) < 1e-3);
}

TEST_CASE("Laguerre matches frozen values") {
  for (const auto& c : oracle::kLaguerre) {
    INFO("n=" << c.n << " alpha=" << c.param << " x=" << c.x);
    const double scale = std::max(1.0, std::fabs(c.value));
    CHECK(std::fabs(laguerre(c.n, c.param, c.x) - c.value) / scale < 1e-11);
  }
}

TEST_CASE("Laguerre coefficients are the Rodrigues rational values") {
  // L_3^{1}(x) = 4 - 6x + 2x^2 - x^3/6.
  const PolynomialCoeffs p = laguerre_coeffs(3, 1.0);
  REQUIRE(p.coeffs.size() == 4);
  CHECK(p.coeffs[0] == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(p.coeffs[1] == doctest::Approx(-6.0).epsilon(1e-15));
  CHECK(p.coeffs[2] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p.coeffs[3] == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("Gegenbauer tilde matches frozen values") {
  for (const auto& c : oracle::kGegenbauerTilde) {
    INFO("l=" << c.n << " nu=" << c.param << " x=" << c.x);
    CHECK(std::fabs(gegenbauer_tilde(c.n, c.param, c.x) - c.value) / std::max(1.0, std::fabs(c.value)) < 1e-12);
  }
}

TEST_CASE("Gegenbauer tilde at one and the nu = 0 limit") {
  for (int l = 0; l <= 6; ++l)
    for (double nu : {0.5, 1.0, 2.5})
      CHECK(gegenbauer_tilde(l, nu, 1.0) == doctest::Approx(gegenbauer_tilde_at_one(l, nu)).epsilon(1e-13));
  for (int l = 1; l <= 5; ++l) {
    const double th = 0.7;
    CHECK(gegenbauer_tilde(l, 0.0, std::cos(th)) == doctest::Approx(2.0 * std::cos(l * th) / l).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gegenbauer_tilde(0, 0.0, 0.5), DomainError);
}

TEST_CASE("Hermite polynomials through Laguerre follow the three-term recurrence") {
  for (double x : {-1.3, 0.0, 0.4, 2.2}) {
    double hm = 1.0, h = 2.0 * x;
    CHECK(hermite_via_laguerre(0, x) == doctest::Approx(hm).epsilon(1e-13));
    CHECK(hermite_via_laguerre(1, x) == doctest::Approx(h).epsilon(1e-13));
    for (int n = 1; n < 9; ++n) {
      const double hp = 2.0 * x * h - 2.0 * n * hm;
      hm = h;
      h = hp;
      CHECK(hermite_via_laguerre(n + 1, x) == doctest::Approx(h).epsilon(1e-11));
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(laguerre(-1, 0.0, 1.0), ArgumentError);
  CHECK_THROWS_AS(gegenbauer_tilde(-1, 1.0, 0.5), ArgumentError);
}
