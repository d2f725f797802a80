#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "minrep/errors.hpp"
#include "minrep/group.hpp"
#include "minrep/radial.hpp"

using namespace minrep;

namespace {

double max_abs(const Eigen::MatrixXd& a) { return a.cwiseAbs().maxCoeff(); }

Eigen::MatrixXd exp_series(const Eigen::MatrixXd& x) {
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(x.rows(), x.cols());
  Eigen::MatrixXd sum = term;
  for (int k = 1; k < 60; ++k) {
    term = term * x / k;
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("generators lie in the Lie algebra") {
  for (int m : {3, 5}) {
    const Generators g = make_generators(ModelParams(m));
    const Eigen::MatrixXd j = lorentz_metric(m);
    const auto in_algebra = [&](const Eigen::MatrixXd& x) { return max_abs(x.transpose() * j + j * x) == 0.0; };
    for (const auto& x : g.nbar) CHECK(in_algebra(x));
    for (const auto& x : g.n) CHECK(in_algebra(x));
    CHECK(in_algebra(g.E));
    CHECK(in_algebra(g.Z));
  }
  CHECK_THROWS_AS(make_generators(ModelParams(4)), UnsupportedError);
}

TEST_CASE("closed-form exponentials match the power series") {
  const int m = 3;
  const Generators g = make_generators(ModelParams(m));
  Eigen::VectorXd b(m + 1);
  b << 0.3, -0.7, 0.2, 0.5;
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(m + 3, m + 3);
  for (int j = 0; j <= m; ++j) x += b(j) * g.nbar[j];
  CHECK(max_abs(make_nbar(b) - exp_series(x)) < 1e-14);
  CHECK(max_abs(make_scaling(0.8, m) - exp_series(0.8 * g.E)) < 1e-14);
  CHECK(max_abs(make_w0(m) - exp_series(std::numbers::pi * g.Z)) < 1e-12);
}

TEST_CASE("nbar is a homomorphism from the additive group") {
  Eigen::VectorXd a(6), b(6);
  a << 0.1, 0.4, -0.3, 0.2, 0.9, -0.5;
  b << -0.6, 0.2, 0.7, 0.1, -0.2, 0.3;
  CHECK(max_abs(make_nbar(a) * make_nbar(b) - make_nbar(a + b)) < 1e-14);
  CHECK(lorentz_defect(make_nbar(a)) < 1e-14);
}

TEST_CASE("w0 squares to the identity with two half turns") {
  for (int m : {3, 5}) {
    const CoverElement w = cover_w0(m);
    const CoverElement w2 = w * w;
    CHECK(max_abs(w2.g - Eigen::MatrixXd::Identity(m + 3, m + 3)) == 0.0);
    CHECK_FALSE(w2.is_identity());
    CHECK((w2 * w2).is_identity());
    CHECK(cover_central_sign(w2, m) == ((m + 1) % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("Bruhat factors of w0 are trivial") {
  const BruhatFactors f = bruhat_factor(make_w0(3), ModelParams(3));
  CHECK(f.b.norm() == 0.0);
  CHECK(f.a.norm() == 0.0);
  CHECK(f.t == 0.0);
  CHECK(f.delta == 1);
  CHECK(max_abs(f.m_plus - Eigen::MatrixXd::Identity(6, 6)) < 1e-15);
}

TEST_CASE("Bruhat factorization reconstructs random elements") {
  for (int m : {3, 5}) {
    const ModelParams p(m);
    std::mt19937_64 rng(42 + m);
    for (int k = 0; k < 200; ++k) {
      const LorentzMatrix g = random_group_element(rng, p);
      const BruhatFactors f = bruhat_factor(g, p);
      CHECK(f.reconstruction_error <= 1e-10);
      CHECK(max_abs(bruhat_reconstruct(f) - g) <= 1e-10 * std::max(1.0, max_abs(g)));
      CHECK((f.delta == 1 || f.delta == -1));
    }
  }
}

TEST_CASE("parabolic elements are detected and factored") {
  const int m = 3;
  const ModelParams p(m);
  CHECK_THROWS_AS(bruhat_factor(make_scaling(1.0, m), p), InParabolicError);
  Eigen::VectorXd b(m + 1);
  b << 0.5, -0.2, 0.1, 0.3;
  const LorentzMatrix g = -(make_nbar(b) * make_scaling(-0.4, m) * m_plus_rotation(m, 1, 3, 0.6));
  CHECK_THROWS_AS(bruhat_factor(g, p), InParabolicError);
  const ParabolicFactors f = parabolic_factor(g, p);
  CHECK(f.delta == -1);
  CHECK(f.t == doctest::Approx(-0.4).epsilon(1e-12));
  CHECK((f.b - b).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(max_abs(parabolic_reconstruct(f) - g) < 1e-12);
}

TEST_CASE("non-group matrices are rejected") {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(6, 6);
  g(0, 1) = 0.1;
  CHECK_THROWS_AS(bruhat_factor(g, ModelParams(3)), DomainError);
  CHECK_THROWS_AS(check_lorentz(g, 3), DomainError);
}

TEST_CASE("criterion is symmetric under inversion of the element") {
  const ModelParams p(3);
  std::mt19937_64 rng(5);
  const Eigen::MatrixXd j = lorentz_metric(3);
  for (int k = 0; k < 50; ++k) {
    const LorentzMatrix g = random_group_element(rng, p);
    CHECK(bruhat_criterion(g) == doctest::Approx(bruhat_criterion(j * g.transpose() * j)).epsilon(1e-12));
  }
}

TEST_CASE("sl2 action is exact on f_{a,l}") {
  for (int m : {3, 4, 6})
    for (int l = 0; l <= 2; ++l)
      for (int a = l; a <= l + 2; ++a) {
        const ModelParams p(m);
        const QuasiPolynomial f = make_fal(a, l, p);
        const QuasiPolynomial d = apply_sl2_operator(Sl2Generator::D, l, f, p);
        CHECK(coefficient_distance(d, f * cplx(-(a + 0.5 * (m - 1)))) <= 1e-12);
        const QuasiPolynomial e = apply_sl2_operator(Sl2Generator::e_tilde, l, f, p);
        const QuasiPolynomial h = apply_sl2_operator(Sl2Generator::h_tilde, l, f, p);
        const QuasiPolynomial he = apply_sl2_operator(Sl2Generator::h_tilde, l, e, p);
        const QuasiPolynomial eh = apply_sl2_operator(Sl2Generator::e_tilde, l, h, p);
        CHECK(coefficient_distance(he - eh, e * cplx(2.0)) <= 1e-12);
      }
}

TEST_CASE("opposite nilradical is abelian and fixes e0 - e_{m+2}") {
  const int m = 5;
  const Generators g = make_generators(ModelParams(m));
  for (const auto& a : g.nbar)
    for (const auto& b : g.nbar) CHECK(max_abs(a * b - b * a) == 0.0);
  Eigen::VectorXd b(m + 1);
  b << 0.2, -0.4, 1.1, 0.3, -0.6, 0.8;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(m + 3);
  v(0) = 1.0;
  v(m + 2) = -1.0;
  CHECK((make_nbar(b) * v - v).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(max_abs(make_nbar(Eigen::VectorXd::Zero(m + 1)) - Eigen::MatrixXd::Identity(m + 3, m + 3)) == 0.0);
  Eigen::VectorXd u = Eigen::VectorXd::Zero(m + 3);
  u(0) = 1.0;
  u(m + 2) = 1.0;
  CHECK((make_scaling(0.7, m) * u - std::exp(0.7) * u).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("generator products preserve the metric") {
  const ModelParams p(3);
  std::mt19937_64 rng(17);
  LorentzMatrix g = Eigen::MatrixXd::Identity(6, 6);
  for (int k = 0; k < 20; ++k) {
    g = g * random_group_element(rng, p, 2);
    CHECK(lorentz_defect(g) <= 1e-10 * std::max(1.0, max_abs(g) * max_abs(g)));
  }
}

TEST_CASE("remaining sl2 relations on f_{2,1}") {
  const ModelParams p(5);
  const int l = 1;
  const QuasiPolynomial f = make_fal(2, l, p);
  const auto op = [&](Sl2Generator s, const QuasiPolynomial& q) { return apply_sl2_operator(s, l, q, p); };
  const auto e = Sl2Generator::e_tilde, fg = Sl2Generator::f_tilde, h = Sl2Generator::h_tilde;
  CHECK(coefficient_distance(op(h, op(fg, f)) - op(fg, op(h, f)), op(fg, f) * cplx(-2.0)) <= 1e-12);
  CHECK(coefficient_distance(op(e, op(fg, f)) - op(fg, op(e, f)), op(h, f)) <= 1e-12);
  const QuasiPolynomial rhs = (op(fg, f) - op(e, f)) * (1.0 / cplx(0.0, 2.0));
  CHECK(coefficient_distance(op(Sl2Generator::D, f), rhs) <= 1e-12);
}
