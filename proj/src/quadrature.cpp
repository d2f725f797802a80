#include "minrep/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "minrep/errors.hpp"
#include "minrep/simd.hpp"
#include "minrep/specfun.hpp"

namespace minrep {

namespace {

// Three-term data of a monic orthogonal family:
//   p_{k+1} = (x - diag[k]) p_k - offsq[k] p_{k-1},  offsq[0] unused.
struct Recurrence {
  std::vector<double> diag;
  std::vector<double> offsq;
  double log_mass = 0.0;  // log of the total weight mu_0
};

// Eigenvalues of the symmetric tridiagonal matrix (implicit QL, Wilkinson shift).
std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
  const int n = static_cast<int>(d.size());
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (++iter > 100) throw InternalError("tridiagonal eigenvalue iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        bool deflated = false;
        for (; i >= l; --i) {
          const double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            deflated = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (deflated) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Value over derivative of the monic degree-n polynomial, overflow-safe.
double newton_ratio(const Recurrence& rec, double x) {
  const int n = static_cast<int>(rec.diag.size());
  double p_prev = 0.0, p = 1.0, dp_prev = 0.0, dp = 0.0;
  for (int k = 0; k < n; ++k) {
    const double b = k > 0 ? rec.offsq[k] : 0.0;
    const double p_next = (x - rec.diag[k]) * p - b * p_prev;
    const double dp_next = p + (x - rec.diag[k]) * dp - b * dp_prev;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
    const double big = std::max(std::fabs(p), std::fabs(dp));
    if (big > 1e200) {
      p *= 1e-200;
      p_prev *= 1e-200;
      dp *= 1e-200;
      dp_prev *= 1e-200;
    }
  }
  return p / dp;
}

// log of the Christoffel weight 1 / sum_k q_k(x)^2 with orthonormal q_k.
double log_christoffel(const Recurrence& rec, double x) {
  const int n = static_cast<int>(rec.diag.size());
  double q_prev = 0.0;
  double q = 1.0;  // q_0 = mu_0^{-1/2}, applied through log_mass at the end
  double sum = 1.0;
  double log_shift = 0.0;  // sum and q carry a common factor exp(-log_shift)
  for (int k = 0; k + 1 < n; ++k) {
    const double off_k = k > 0 ? std::sqrt(rec.offsq[k]) : 0.0;
    const double off_next = std::sqrt(rec.offsq[k + 1]);
    const double q_next = ((x - rec.diag[k]) * q - off_k * q_prev) / off_next;
    q_prev = q;
    q = q_next;
    sum += q * q;
    if (std::fabs(q) > 1e150) {
      q *= 1e-150;
      q_prev *= 1e-150;
      sum *= 1e-300;
      log_shift += 300.0 * std::numbers::ln10;
    }
  }
  return rec.log_mass - (std::log(sum) + log_shift);
}

QuadratureRule build_rule(const Recurrence& rec, RuleKind kind) {
  const int n = static_cast<int>(rec.diag.size());
  std::vector<double> off(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(rec.offsq[k]);
  QuadratureRule rule;
  rule.kind = kind;
  rule.nodes = tridiagonal_eigenvalues(rec.diag, off);
  // Newton polish; eigenvalues carry absolute error ~ eps * ||J||, which is
  // large relative to the small Laguerre nodes.
  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[i];
    const double lo = i > 0 ? rule.nodes[i - 1] : -std::numeric_limits<double>::infinity();
    const double hi = i + 1 < n ? rule.nodes[i + 1] : std::numeric_limits<double>::infinity();
    for (int it = 0; it < 4; ++it) {
      const double step = newton_ratio(rec, x);
      const double nx = x - step;
      if (!(nx > lo && nx < hi) || !std::isfinite(nx)) break;
      x = nx;
      if (std::fabs(step) <= 1e-16 * std::max(1.0, std::fabs(x))) break;
    }
    rule.nodes[i] = x;
  }
  rule.log_weights.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rule.log_weights[i] = log_christoffel(rec, rule.nodes[i]);
    rule.weights[i] = std::exp(rule.log_weights[i]);
  }
  return rule;
}

void check_points(int n) {
  if (n < 1) throw ArgumentError("quadrature rule needs n_points >= 1");
}

}  // namespace

QuadratureRule gauss_laguerre_rule(int n, double alpha) {
  check_points(n);
  if (!(alpha > -1.0)) throw DomainError("gauss_laguerre_rule: alpha must exceed -1");
  Recurrence rec;
  rec.diag.resize(static_cast<std::size_t>(n));
  rec.offsq.assign(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    rec.diag[k] = 2.0 * k + alpha + 1.0;
    if (k > 0) rec.offsq[k] = k * (k + alpha);
  }
  rec.log_mass = log_gamma(alpha + 1.0);
  return build_rule(rec, RuleKind::gauss_laguerre_generalized);
}

QuadratureRule gauss_jacobi_rule_ab(int n, double a, double b) {
  check_points(n);
  if (!(a > -1.0 && b > -1.0)) throw DomainError("gauss_jacobi_rule: exponents must exceed -1");
  Recurrence rec;
  rec.diag.resize(static_cast<std::size_t>(n));
  rec.offsq.assign(static_cast<std::size_t>(n), 0.0);
  const double s = a + b;
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      rec.diag[k] = (b - a) / (s + 2.0);
    } else {
      rec.diag[k] = (a == b) ? 0.0 : (b * b - a * a) / ((2.0 * k + s) * (2.0 * k + s + 2.0));
    }
    if (k == 1) {
      rec.offsq[k] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
    } else if (k > 1) {
      const double t = 2.0 * k + s;
      rec.offsq[k] = 4.0 * k * (k + a) * (k + b) * (k + s) / (t * t * (t + 1.0) * (t - 1.0));
    }
  }
  rec.log_mass = (s + 1.0) * std::numbers::ln2 + log_gamma(a + 1.0) + log_gamma(b + 1.0) - log_gamma(s + 2.0);
  return build_rule(rec, RuleKind::gauss_jacobi);
}

QuadratureRule gauss_jacobi_rule(int n, double lam) {
  if (!(lam > -0.5)) throw DomainError("gauss_jacobi_rule: lam must exceed -1/2");
  return gauss_jacobi_rule_ab(n, lam - 0.5, lam - 0.5);
}

QuadratureRule gauss_legendre_rule(int n) {
  QuadratureRule rule = gauss_jacobi_rule_ab(n, 0.0, 0.0);
  rule.kind = RuleKind::gauss_legendre;
  return rule;
}

RadialRule damped_laguerre_rule(int n, double damping) {
  if (!(damping > 0.0)) throw DomainError("damping must be positive");
  const QuadratureRule base = gauss_laguerre_rule(n, 0.0);
  RadialRule out;
  out.r.resize(base.size());
  out.w.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    out.r[i] = base.nodes[i] / damping;
    out.w[i] = std::exp(base.log_weights[i] + base.nodes[i]) / damping;
  }
  return out;
}

RadialRule sqrt_legendre_rule(int n, double r_max) {
  if (!(r_max > 0.0)) throw DomainError("r_max must be positive");
  const QuadratureRule base = gauss_legendre_rule(n);
  const double umax = std::sqrt(r_max);
  RadialRule out;
  out.r.resize(base.size());
  out.w.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    const double u = 0.5 * (base.nodes[i] + 1.0) * umax;
    out.r[i] = u * u;
    out.w[i] = base.weights[i] * 0.5 * umax * 2.0 * u;
  }
  return out;
}

RadialRule linear_legendre_rule(int n, double r_max) {
  if (!(r_max > 0.0)) throw DomainError("r_max must be positive");
  const QuadratureRule base = gauss_legendre_rule(n);
  RadialRule out;
  out.r.resize(base.size());
  out.w.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    out.r[i] = 0.5 * (base.nodes[i] + 1.0) * r_max;
    out.w[i] = base.weights[i] * 0.5 * r_max;
  }
  return out;
}

std::complex<double> integrate_radial(const RadialIntegrand& f, int m, double damping, int n_points) {
  if (m < 2) throw DomainError("integrate_radial: m must be >= 2");
  if (!(damping > 0.0)) throw DomainError("integrate_radial: damping must be positive");
  const QuadratureRule rule = gauss_laguerre_rule(n_points, m - 2.0);
  std::vector<double> w(rule.size());
  std::vector<std::complex<double>> v(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double r = rule.nodes[i] / damping;
    const std::complex<double> val = f(r);
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag()))
      throw EvaluationError("integrate_radial: non-finite integrand at node " + std::to_string(i) +
                            " (r=" + std::to_string(r) + ")");
    w[i] = std::exp(rule.log_weights[i] + rule.nodes[i]);
    v[i] = val;
  }
  return simd::weighted_sum(w.data(), v.data(), v.size()) / std::pow(damping, m - 1.0);
}

}  // namespace minrep
