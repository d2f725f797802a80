#include <doctest.h>

#include <cmath>
#include <numbers>

#include "minrep/errors.hpp"
#include "minrep/quadrature.hpp"
#include "minrep/specfun.hpp"
#include "oracle_values.hpp"

using namespace minrep;

namespace {

double apply(const QuadratureRule& q, auto f) {
  double s = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) s += q.weights[j] * f(q.nodes[j]);
  return s;
}

}  // namespace

TEST_CASE("generalized Laguerre rule integrates monomials exactly") {
  for (double alpha : {0.0, 1.0, 2.5})
    for (int n : {5, 20, 60}) {
      const QuadratureRule q = gauss_laguerre_rule(n, alpha);
      for (int k = 0; k < std::min(2 * n, 12); ++k) {
        const double exact = std::exp(log_gamma(alpha + k + 1.0));
        CHECK(apply(q, [k](double x) { return std::pow(x, k); }) == doctest::Approx(exact).epsilon(1e-11));
      }
    }
}

TEST_CASE("Laguerre log weights stay finite where weights underflow") {
  const QuadratureRule q = gauss_laguerre_rule(400, 1.0);
  bool any_underflow = false;
  for (std::size_t j = 0; j < q.size(); ++j) {
    CHECK(std::isfinite(q.log_weights[j]));
    if (q.weights[j] == 0.0) any_underflow = true;
  }
  CHECK(any_underflow);
  CHECK(q.kind == RuleKind::gauss_laguerre_generalized);
}

TEST_CASE("Jacobi rules match frozen moments") {
  for (const auto& c : oracle::kJacobiMoments) {
    const QuadratureRule q = gauss_jacobi_rule_ab(c.n, c.a, c.b);
    CHECK(apply(q, [&](double x) { return std::pow(x, c.k); }) == doctest::Approx(c.value).epsilon(1e-13));
  }
}

TEST_CASE("symmetric Jacobi rule equals the two-parameter rule") {
  for (double lam : {0.5, 1.0, 2.0}) {
    const QuadratureRule a = gauss_jacobi_rule(10, lam);
    const QuadratureRule b = gauss_jacobi_rule_ab(10, lam - 0.5, lam - 0.5);
    for (std::size_t j = 0; j < a.size(); ++j) {
      CHECK(a.nodes[j] == doctest::Approx(b.nodes[j]).epsilon(1e-13));
      CHECK(a.weights[j] == doctest::Approx(b.weights[j]).epsilon(1e-12));
    }
  }
}

TEST_CASE("Legendre rule nodes are sorted and symmetric") {
  const QuadratureRule q = gauss_legendre_rule(31);
  for (std::size_t j = 0; j + 1 < q.size(); ++j) CHECK(q.nodes[j] < q.nodes[j + 1]);
  for (std::size_t j = 0; j < q.size(); ++j) CHECK(q.nodes[j] == doctest::Approx(-q.nodes[q.size() - 1 - j]).epsilon(1e-14));
  CHECK(apply(q, [](double) { return 1.0; }) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("radial rules integrate exponentials") {
  const auto integ = [](const RadialRule& r, auto f) {
    double s = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) s += r.w[j] * f(r.r[j]);
    return s;
  };
  const auto g = [](double r) { return r * r * std::exp(-3.0 * r); };
  const double exact = 2.0 / 27.0;
  CHECK(integ(damped_laguerre_rule(60, 3.0), g) == doctest::Approx(exact).epsilon(1e-13));
  CHECK(integ(sqrt_legendre_rule(120, 20.0), g) == doctest::Approx(exact).epsilon(1e-12));
  CHECK(integ(linear_legendre_rule(120, 20.0), g) == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("integrate_radial uses the r^{m-2} measure") {
  for (int m : {3, 4, 6}) {
    const cplx v = integrate_radial([](double r) { return cplx(std::exp(-2.0 * r)); }, m, 2.0, 30);
    CHECK(v.real() == doctest::Approx(std::exp(log_gamma(m - 1.0) - (m - 1.0) * std::numbers::ln2)).epsilon(1e-12));
  }
}

TEST_CASE("integrate_radial rejects non-finite integrands") {
  CHECK_THROWS_AS(integrate_radial([](double) { return cplx(NAN); }, 3, 1.0, 10), EvaluationError);
}

TEST_CASE("rule sizes are validated") {
  CHECK_THROWS(gauss_laguerre_rule(0, 0.0));
  CHECK_THROWS(gauss_jacobi_rule(4, -1.0));
}
