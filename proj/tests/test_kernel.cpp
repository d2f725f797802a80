#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "minrep/errors.hpp"
#include "minrep/kernel.hpp"
#include "minrep/points.hpp"
#include "minrep/specfun.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace minrep;
using testing::rel_err;

TEST_CASE("full kernel matches frozen values") {
  for (const auto& c : oracle::kFullKernel) {
    INFO("m=" << c.m << " r=" << c.r << " rp=" << c.rp << " s=" << c.s);
    CHECK(rel_err(full_kernel_polar(c.r, c.rp, c.s, ComplexTime(c.t), ModelParams(c.m)), c.value) < 1e-12);
  }
}

TEST_CASE("psi has the two equivalent forms") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int k = 0; k < 20; ++k) {
    SpatialPoint x{{g(rng), g(rng), g(rng), g(rng)}};
    SpatialPoint y{{g(rng), g(rng), g(rng), g(rng)}};
    CHECK(psi(x, y) == doctest::Approx(psi_angle_form(x, y)).epsilon(1e-12));
  }
  // Antipodal points give psi = 0.
  CHECK(psi(SpatialPoint{{1.0, 0.0, 0.0}}, SpatialPoint{{-2.0, 0.0, 0.0}}) == doctest::Approx(0.0));
}

TEST_CASE("full kernel depends only on radii and angle") {
  const ModelParams p(3);
  const ComplexTime t(0.6, 0.2);
  const SpatialPoint x{{1.0, 0.5, -0.2}}, y{{0.3, -0.4, 0.9}};
  // Rotate both points about the z axis.
  const double c = std::cos(0.8), s = std::sin(0.8);
  const SpatialPoint xr{{c * 1.0 - s * 0.5, s * 1.0 + c * 0.5, -0.2}};
  const SpatialPoint yr{{c * 0.3 + s * 0.4, s * 0.3 - c * 0.4, 0.9}};
  CHECK(rel_err(full_kernel(x, y, t, p), full_kernel(xr, yr, t, p)) < 1e-13);
  CHECK(rel_err(full_kernel(x, y, t, p), full_kernel(y, x, t, p)) < 1e-14);
}

TEST_CASE("cone kernel equals the full kernel of the projections") {
  const ModelParams p(5);
  const ComplexTime t(0.5, 1.0);
  const SpatialPoint x{{0.3, 0.2, -0.5, 0.1, 0.7}}, y{{-0.1, 0.6, 0.2, 0.4, -0.3}};
  CHECK(rel_err(cone_kernel(ConePoint::from_spatial(x), ConePoint::from_spatial(y), t, p), full_kernel(x, y, t, p)) <
        1e-12);
  CHECK_THROWS_AS(cone_kernel(ConePoint{{1.0, 0.0, 0.0, 0.0, 0.0, 0.5}}, ConePoint::from_spatial(y), t, p),
                  DomainError);
}

TEST_CASE("sphere volume") {
  CHECK(sphere_volume(1) == doctest::Approx(2.0 * std::numbers::pi));
  CHECK(sphere_volume(2) == doctest::Approx(4.0 * std::numbers::pi));
  CHECK(sphere_volume(3) == doctest::Approx(2.0 * std::numbers::pi * std::numbers::pi));
}

TEST_CASE("zonal spectrum of a Gegenbauer profile is diagonal") {
  // h = C~_k^{(m-2)/2} has spectrum zero on l != k.
  const ModelParams p(5);
  const double nu = 1.5;
  for (int k = 0; k <= 3; ++k) {
    const auto h = [=](double s) { return cplx(gegenbauer_tilde(k, nu, s)); };
    for (int l = 0; l <= 4; ++l) {
      const cplx c = clm_spectrum(h, l, p);
      if (l != k) CHECK(std::abs(c) < 1e-12);
      else CHECK(std::abs(c) > 1e-3);
    }
  }
}

TEST_CASE("zonal expansion round trip") {
  const auto f = [](double x) { return cplx(std::exp(0.7 * x), std::sin(x)); };
  const std::vector<cplx> coeffs = zonal_expand(f, 1.0, 30);
  for (double x : {-0.9, -0.2, 0.4, 0.95}) CHECK(std::abs(zonal_sum(coeffs, 1.0, x) - f(x)) < 1e-12);
  const std::vector<double> tab = gegenbauer_tilde_table(5, 1.5, 0.3);
  for (int l = 0; l <= 5; ++l) CHECK(tab[l] == doctest::Approx(gegenbauer_tilde(l, 1.5, 0.3)).epsilon(1e-14));
}

TEST_CASE("angular reduction agrees with the radial kernel") {
  const ModelParams p(3);
  const ComplexTime t(0.5, 0.5);
  for (int l = 0; l <= 2; ++l) CHECK(rel_err(angular_reduce(0.8, 1.4, t, l, p), radial_kernel(0.8, 1.4, t, l, p)) < 1e-8);
}

TEST_CASE("expansion partial sum converges to the full kernel") {
  const ModelParams p(3);
  const ComplexTime t(1.0, 0.0);
  const SpatialPoint x{{0.5, 0.3, 0.2}}, y{{-0.4, 0.6, 0.1}};
  const cplx full = full_kernel(x, y, t, p);
  const double e10 = rel_err(expansion_partial_sum(x, y, t, 2, p), full);
  const double e40 = rel_err(expansion_partial_sum(x, y, t, 40, p), full);
  CHECK(e40 < 1e-10);
  CHECK(e40 < e10);
}

TEST_CASE("Bessel specialization sides agree") {
  const auto [lhs, rhs] = bessel_expansion_sides(1.0, 4.0, 1.1, 40);
  CHECK(rel_err(rhs, lhs) < 1e-10);
}

TEST_CASE("angular operations need m >= 3") {
  CHECK_THROWS_AS(clm_spectrum([](double) { return cplx(1.0); }, 0, ModelParams(2)), UnsupportedError);
}
