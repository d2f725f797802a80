#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace minrep {

enum class RuleKind { gauss_laguerre_generalized, gauss_jacobi, gauss_legendre };

/// Gaussian rule. Laguerre weights for large n underflow a double, so the
/// rule also keeps log_weights; `weights` is exp(log_weights) and may contain
/// zeros in the far tail.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> log_weights;
  RuleKind kind = RuleKind::gauss_legendre;

  std::size_t size() const { return nodes.size(); }
};

/// Exact for p(x) x^alpha e^{-x} on (0, inf), deg p <= 2n-1.
QuadratureRule gauss_laguerre_rule(int n, double alpha);
/// Exact for p(x) (1-x^2)^{lam-1/2} on (-1, 1), deg p <= 2n-1.
QuadratureRule gauss_jacobi_rule(int n, double lam);
/// Exact for p(x) (1-x)^a (1+x)^b on (-1, 1), deg p <= 2n-1.
QuadratureRule gauss_jacobi_rule_ab(int n, double a, double b);
/// Gauss-Legendre on (-1, 1).
QuadratureRule gauss_legendre_rule(int n);

/// Nodes and weights for plain dr on (0, inf) or a subinterval:
/// integral g(r) dr ~ sum_j weight[j] g(r[j]).
struct RadialRule {
  std::vector<double> r;
  std::vector<double> w;

  std::size_t size() const { return r.size(); }
};

/// Laguerre rule mapped by r = x / damping, weights carrying e^{x}/damping,
/// for integrands decaying like e^{-damping r}.
RadialRule damped_laguerre_rule(int n, double damping);
/// Gauss-Legendre in u = sqrt(r) on [0, sqrt(r_max)], for integrands that are
/// negligible beyond r_max. The square-root map clusters nodes near r = 0.
RadialRule sqrt_legendre_rule(int n, double r_max);
/// Gauss-Legendre in r on [0, r_max].
RadialRule linear_legendre_rule(int n, double r_max);

using RadialIntegrand = std::function<std::complex<double>(double)>;

/// integral_0^inf f(r) r^{m-2} dr with r = x/damping in the generalized
/// Laguerre rule of order alpha = m - 2. Throws EvaluationError on NaN/Inf.
std::complex<double> integrate_radial(const RadialIntegrand& f, int m, double damping, int n_points);

}  // namespace minrep
