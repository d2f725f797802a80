#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "minrep/errors.hpp"
#include "minrep/inversion.hpp"
#include "minrep/kernel.hpp"
#include "minrep/profile.hpp"
#include "minrep/radial.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace minrep;
using testing::rel_err;

TEST_CASE("radial inversion kernel matches frozen values") {
  for (const auto& c : oracle::kInversionRadial) {
    INFO("m=" << c.m << " l=" << c.l << " r=" << c.r << " rp=" << c.rp);
    CHECK(std::abs(inversion_radial_kernel(c.r, c.rp, c.l, ModelParams(c.m)) - c.value) <=
          1e-12 * std::max(1.0, std::abs(c.value)));
  }
}

TEST_CASE("radial inversion kernel is the semigroup kernel at t = pi i") {
  for (int m : {3, 4})
    for (int l : {0, 1})
      CHECK(rel_err(inversion_radial_kernel(0.7, 1.9, l, ModelParams(m)),
                    radial_kernel(0.7, 1.9, ComplexTime::pi_i(), l, ModelParams(m))) < 1e-12);
}

TEST_CASE("boundary phase is a fourth root of unity") {
  CHECK(std::abs(boundary_phase(3) - cplx(-1.0, 0.0)) == 0.0);
  CHECK(std::abs(boundary_phase(4) - cplx(0.0, 1.0)) == 0.0);
  CHECK(std::abs(boundary_phase(5) - cplx(1.0, 0.0)) == 0.0);
}

TEST_CASE("inversion kernel at psi = 0 is a gamma constant") {
  for (int m : {3, 4, 5}) {
    const ModelParams p(m);
    std::vector<double> x(m, 0.0), y(m, 0.0);
    x[0] = 1.0;
    y[0] = -2.5;
    const InversionKernelEval k = inversion_kernel(SpatialPoint{x}, SpatialPoint{y}, p);
    const double mag = 2.0 / (std::pow(std::numbers::pi, 0.5 * (m - 1)) * std::tgamma(0.5 * (m - 1)));
    CHECK(std::abs(k.value - mag * boundary_phase(m)) < 1e-14);
    CHECK(k.phase_convention == boundary_phase(m));
  }
}

TEST_CASE("cone inversion kernel is supported on equal sheets") {
  const ModelParams p(3);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  int zeros = 0;
  for (int k = 0; k < 200; ++k) {
    const SpatialPoint x{{g(rng), g(rng), g(rng)}}, y{{g(rng), g(rng), g(rng)}};
    const int sx = k % 2 == 0 ? 1 : -1;
    const int sy = (k / 2) % 2 == 0 ? 1 : -1;
    const ConePoint zx = ConePoint::from_spatial(x, sx), zy = ConePoint::from_spatial(y, sy);
    const cplx v = cone_inversion_kernel(zx, zy, p);
    if (sx != sy) {
      CHECK(v == cplx(0.0, 0.0));
      ++zeros;
    } else {
      CHECK(rel_err(v, inversion_kernel(x, y, p).value) < 1e-12);
    }
  }
  CHECK(zeros == 100);
}

TEST_CASE("T_l squares to (-1)^{m+1}") {
  for (int m : {3, 4}) {
    const ModelParams p(m);
    const QuasiPolynomial f = make_fal(2, 1, p);
    const RadialRule rule = truncation_rule({DecayKind::exponential, 2.0}, 200);
    const SampledProfile once = apply_inversion_radial_on(f, 1, p, rule);
    const std::vector<double> grid = {0.1, 0.5, 1.5, 3.0};
    const std::vector<cplx> twice = apply_inversion_radial(once, 1, p, grid);
    const double sign = m % 2 == 1 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) CHECK(std::abs(twice[i] - sign * f(grid[i])) < 1e-7);
  }
}

TEST_CASE("Hankel fixed point and the Phi change of variables") {
  const int nu = 2;
  const ProfileFunction h{[](double y) { return cplx(std::pow(y, 2.5) * std::exp(-0.5 * y * y)); },
                          {DecayKind::gaussian, 0.5}};
  const std::vector<double> xs = {0.2, 1.0, 2.5};
  const std::vector<cplx> out = hankel_transform(h, nu, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(rel_err(out[i], h.f(xs[i])) < 1e-9);

  const ModelParams p(3);
  const QuasiPolynomial f = make_fal(1, 0, p);
  const ProfileFunction phi = phi_map(f, p);
  const ProfileFunction back = phi_inverse(phi, p);
  for (double r : {0.1, 0.8, 3.0}) CHECK(rel_err(back.f(r), f(r)) < 1e-13);
  // Phi is unitary from r^{m-2} dr to dx.
  const RadialRule rule = truncation_rule(phi.decay, 300);
  double n2 = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) n2 += rule.w[j] * std::norm(phi.f(rule.r[j]));
  CHECK(n2 == doctest::Approx(fal_norm2(1, 0, p)).epsilon(1e-10));
}

TEST_CASE("Hankel transform rejects uncertified samples") {
  const RadialRule rule = sqrt_legendre_rule(20, 5.0);
  const SampledProfile s{rule, std::vector<cplx>(rule.size(), 1.0), std::nullopt};
  const std::vector<double> xs = {1.0};
  CHECK_THROWS_AS(hankel_transform(s, 1, xs), DomainError);
}

// The phase factor in the Hankel conjugation is taken as stated for every m.
// For even m it disagrees with the boundary eigenvalue e^{-(a+(m-1)/2) pi i}
// by (-1)^{m-1}, so the m = 4 case is expected to fail.
TEST_CASE("Hankel transform is the conjugated radial inversion") {
  for (int m : {3, 4, 5})
    for (int l : {0, 1}) {
      const ModelParams p(m);
      const int nu = m - 2 + 2 * l;
      const ProfileFunction mapped = phi_map(make_fal(l + 1, l, p), p);
      const std::vector<double> xs = {0.5, 1.5, 3.0};
      const std::vector<cplx> hankel = hankel_transform(mapped, nu, xs);
      // Phi T_l Phi^{-1} on Phi f_{a,l} multiplies by the eigenvalue of T_l.
      const cplx phase = std::exp(cplx(0.0, -(l + 0.5 * (m - 1)) * std::numbers::pi));
      const cplx eig = std::exp(semigroup_log_eigenvalue(l + 1, ComplexTime::pi_i(), p));
      for (std::size_t i = 0; i < xs.size(); ++i) {
        INFO("m=" << m << " l=" << l << " x=" << xs[i]);
        CHECK(std::abs(hankel[i] - phase * eig * mapped.f(xs[i])) < 1e-7);
      }
    }
}
