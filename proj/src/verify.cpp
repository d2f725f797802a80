#include "minrep/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "minrep/errors.hpp"
#include "minrep/group.hpp"
#include "minrep/inversion.hpp"
#include "minrep/kernel.hpp"
#include "minrep/quadrature.hpp"
#include "minrep/radial.hpp"
#include "minrep/specfun.hpp"
#include "parallel.hpp"

namespace minrep {

namespace {

using Params = std::vector<std::pair<std::string, double>>;

struct Pending {
  std::string id;
  Params params;
  double tol;
  std::function<double()> error;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string time_label(const ComplexTime& t) {
  const cplx v = t.value();
  if (v.real() == 0.0 && v.imag() == std::numbers::pi) return "pi*i";
  if (v.imag() == 0.0) return num(v.real());
  return num(v.real()) + (v.imag() < 0 ? "" : "+") + num(v.imag()) + "i";
}

std::vector<VerifyCase> run_cases(std::vector<Pending> pending, const VerifyOptions& opts) {
  std::vector<VerifyCase> out(pending.size());
  detail::parallel_for(pending.size(), [&](std::size_t i, unsigned) {
    VerifyCase& c = out[i];
    c.id = pending[i].id;
    c.params = pending[i].params;
    c.tol = opts.tol ? *opts.tol : pending[i].tol;
    try {
      c.error = pending[i].error();
    } catch (const Error&) {
      c.error = std::numeric_limits<double>::infinity();
    }
    c.pass = c.error <= c.tol;
  });
  std::sort(out.begin(), out.end(), [](const VerifyCase& a, const VerifyCase& b) { return a.id < b.id; });
  return out;
}

std::vector<int> dims(const VerifyOptions& opts, std::vector<int> defaults) {
  if (!opts.m) return defaults;
  if (std::find(defaults.begin(), defaults.end(), *opts.m) != defaults.end()) return {*opts.m};
  return {};
}

double rel_l2(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double num2 = 0.0, den2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num2 += std::norm(a[i] - b[i]);
    den2 += std::norm(b[i]);
  }
  return den2 > 0.0 ? std::sqrt(num2 / den2) : std::sqrt(num2);
}

double rel_err(cplx a, cplx b) {
  const double d = std::abs(a - b);
  const double s = std::abs(b);
  return s > 0.0 ? d / s : d;
}

std::vector<cplx> sample_qp(const QuasiPolynomial& f, const std::vector<double>& grid) {
  std::vector<cplx> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = f(grid[i]);
  return v;
}

std::vector<ComplexTime> eigen_times() {
  return {ComplexTime(0.5, 0.0), ComplexTime(1.0, 0.0), ComplexTime(0.3, 0.9), ComplexTime::pi_i()};
}

}  // namespace

// ---- special functions ---------------------------------------------------------

std::vector<VerifyCase> check_specfun(const VerifyOptions& opts) {
  std::vector<Pending> p;
  for (double alpha : {0.0, 1.0, 2.0, 3.0}) {
    p.push_back({"specfun/laguerre_norm/alpha=" + num(alpha), {{"alpha", alpha}}, 1e-9, [alpha] {
                   const QuadratureRule rule = gauss_laguerre_rule(24, alpha);
                   double worst = 0.0;
                   for (int a = 0; a <= 6; ++a)
                     for (int b = 0; b <= 6; ++b) {
                       double s = 0.0;
                       for (std::size_t j = 0; j < rule.size(); ++j)
                         s += rule.weights[j] * laguerre(a, alpha, rule.nodes[j]) * laguerre(b, alpha, rule.nodes[j]);
                       const double na = std::exp(log_gamma(alpha + a + 1.0) - log_gamma(a + 1.0));
                       const double nb = std::exp(log_gamma(alpha + b + 1.0) - log_gamma(b + 1.0));
                       const double expect = a == b ? na : 0.0;
                       worst = std::max(worst, std::abs(s - expect) / std::sqrt(na * nb));
                     }
                   return worst;
                 }});
  }
  for (double nu : {0.5, 1.0, 1.5}) {
    p.push_back({"specfun/gegenbauer_norm/nu=" + num(nu), {{"nu", nu}}, 1e-9, [nu] {
                   const QuadratureRule rule = gauss_jacobi_rule(16, nu);
                   double worst = 0.0;
                   for (int a = 0; a <= 6; ++a)
                     for (int b = 0; b <= 6; ++b) {
                       double s = 0.0;
                       for (std::size_t j = 0; j < rule.size(); ++j)
                         s += rule.weights[j] * gegenbauer_tilde(a, nu, rule.nodes[j]) *
                              gegenbauer_tilde(b, nu, rule.nodes[j]);
                       const auto closed = [nu](int l) {
                         return std::exp((1.0 - 2.0 * nu) * std::numbers::ln2 + std::log(std::numbers::pi) +
                                         log_gamma(2.0 * nu + l) - log_gamma(l + 1.0) - std::log(l + nu));
                       };
                       const double expect = a == b ? closed(a) : 0.0;
                       worst = std::max(worst, std::abs(s - expect) / std::sqrt(closed(a) * closed(b)));
                     }
                   return worst;
                 }});
  }
  for (int m : dims(opts, {3, 4, 5})) {
    p.push_back({"specfun/fal_orthogonality/m=" + std::to_string(m), {{"m", m}}, 1e-9, [m] {
                   const ModelParams params(m);
                   double worst = 0.0;
                   for (int l = 0; l <= 2; ++l)
                     for (int a = l; a <= l + 3; ++a)
                       for (int b = l; b <= l + 3; ++b) {
                         const QuasiPolynomial fa = make_fal(a, l, params);
                         const QuasiPolynomial fb = make_fal(b, l, params);
                         const cplx s = integrate_radial([&](double r) { return fa(r) * fb(r); }, m, 4.0, 40);
                         const auto closed = [&](int k) {
                           return std::exp(log_gamma(m - 1.0 + k + l) - (m - 1.0 + 2.0 * l) * std::log(4.0) -
                                           log_gamma(k - l + 1.0));
                         };
                         const double expect = a == b ? closed(a) : 0.0;
                         worst = std::max(worst, std::abs(s - expect) / std::sqrt(closed(a) * closed(b)));
                       }
                   return worst;
                 }});
  }
  for (double alpha : {1.0, 2.0, 3.0})
    for (double w : {-0.5, 0.25, 0.5}) {
      p.push_back({"specfun/hille_hardy/alpha=" + num(alpha) + "/w=" + num(w), {{"alpha", alpha}, {"w", w}}, 1e-9,
                   [alpha, w] {
                     double worst = 0.0;
                     for (double x : {0.5, 2.0, 8.0})
                       for (double y : {0.25, 3.0, 8.0}) {
                         // |L_n^a(x)| <= Gamma(n+a+1)/(n! Gamma(a+1)) e^{x/2}
                         double lhs = 0.0;
                         for (int n = 0; n < 2000; ++n) {
                           const double coef = std::exp(log_gamma(n + 1.0) - log_gamma(n + alpha + 1.0));
                           lhs += coef * laguerre(n, alpha, x) * laguerre(n, alpha, y) * std::pow(w, n);
                           const double bound = std::exp(log_gamma(n + alpha + 2.0) - log_gamma(n + 2.0) -
                                                         2.0 * log_gamma(alpha + 1.0) + 0.5 * (x + y)) *
                                                std::pow(std::fabs(w), n + 1) / (1.0 - std::fabs(w));
                           if (bound < 1e-13) break;
                         }
                         const cplx arg = 2.0 * std::sqrt(cplx(-x * y * w)) / (1.0 - w);
                         const cplx rhs = std::exp(-(x + y) * w / (1.0 - w)) / std::pow(1.0 - w, alpha + 1.0) *
                                          bessel_j_tilde(alpha, arg);
                         worst = std::max(worst, rel_err(lhs, rhs));
                       }
                     return worst;
                   }});
    }
  for (double nu : {0.5, 1.0})
    for (int beta : {0, 1, 2}) {
      p.push_back({"specfun/gegenbauer_moment/nu=" + num(nu) + "/beta=" + std::to_string(beta),
                   {{"nu", nu}, {"beta", beta}}, 1e-8, [nu, beta] {
                     const QuadratureRule rule = gauss_jacobi_rule_ab(12, nu - 0.5, beta);
                     double worst = 0.0;
                     for (int n = 0; n <= 4; ++n) {
                       double s = 0.0;
                       for (std::size_t j = 0; j < rule.size(); ++j)
                         s += rule.weights[j] * gegenbauer_tilde(n, nu, rule.nodes[j]);
                       const double closed = std::pow(2.0, beta - nu + 1.5) * std::sqrt(std::numbers::pi) *
                                             gamma_fn(beta + 1.0) * gamma_fn(2.0 * nu + n) *
                                             gamma_fn(beta - nu + 1.5) * rgamma(beta - nu - n + 1.5) /
                                             (gamma_fn(n + 1.0) * gamma_fn(beta + nu + n + 1.5));
                       worst = std::max(worst, std::abs(s - closed) / std::max(1.0, std::abs(closed)));
                     }
                     return worst;
                   }});
    }
  for (double nu : {0.0, 1.0})
    for (double alpha : {0.5, 1.0, 2.0}) {
      p.push_back({"specfun/bessel_sphere_integral/nu=" + num(nu) + "/alpha=" + num(alpha),
                   {{"nu", nu}, {"alpha", alpha}}, 1e-8, [nu, alpha] {
                     const QuadratureRule rule = gauss_jacobi_rule(48, nu + 0.5);
                     double worst = 0.0;
                     for (int l = 0; l <= 3; ++l) {
                       cplx s = 0.0;
                       for (std::size_t j = 0; j < rule.size(); ++j) {
                         const double x = rule.nodes[j];
                         // I_nu(a sqrt(1+x)) (1+x)^{-nu/2} = (a/2)^nu I~_nu(a sqrt(1+x))
                         s += rule.weights[j] * std::pow(0.5 * alpha, nu) * bessel_i_tilde(nu, alpha * std::sqrt(1.0 + x)) *
                              gegenbauer_tilde(l, nu + 0.5, x);
                       }
                       const cplx closed = std::pow(2.0, 1.5) * std::sqrt(std::numbers::pi) *
                                           std::exp(log_gamma(2.0 * nu + l + 1.0) - log_gamma(l + 1.0)) /
                                           std::pow(alpha, nu + 1.0) *
                                           bessel_i(2.0 * nu + 2.0 * l + 1.0, std::sqrt(2.0) * alpha);
                       worst = std::max(worst, rel_err(s, closed));
                     }
                     return worst;
                   }});
    }
  for (int m : dims(opts, {3, 5}))
    for (double alpha : {0.5, 1.0, 2.0}) {
      p.push_back({"specfun/zonal_spectrum/m=" + std::to_string(m) + "/alpha=" + num(alpha),
                   {{"m", m}, {"alpha", alpha}}, 1e-8, [m, alpha] {
                     const ModelParams params(m);
                     const double nu = 0.5 * (m - 3.0);
                     const auto h = [nu, alpha](double s) { return bessel_i_tilde(nu, alpha * std::sqrt(1.0 + s)); };
                     double worst = 0.0;
                     for (int l = 0; l <= 3; ++l) {
                       const cplx c = clm_spectrum(h, l, params);
                       const cplx closed = std::pow(2.0, 0.5 * (3.0 * m - 4.0)) *
                                           std::pow(std::numbers::pi, 0.5 * (m - 1.0)) * std::pow(alpha, 2.0 - m) *
                                           bessel_i(m - 2.0 + 2.0 * l, std::sqrt(2.0) * alpha);
                       worst = std::max(worst, rel_err(c, closed));
                     }
                     return worst;
                   }});
    }
  for (double nu : {-0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5}) {
    p.push_back({"specfun/i_tilde_bound/nu=" + num(nu), {{"nu", nu}}, 1e-12, [nu] {
                   // The constant is the value at z = 0.
                   const double c = std::abs(bessel_i_tilde(nu, 0.0));
                   double worst = 0.0;
                   for (int a = 0; a <= 30; ++a)
                     for (int b = 0; b < 24; ++b) {
                       const double rad = static_cast<double>(a);
                       const double ang = 2.0 * std::numbers::pi * b / 24.0;
                       const cplx z = std::polar(rad, ang);
                       const double ratio = std::abs(bessel_i_tilde(nu, z)) / (c * std::exp(std::fabs(z.real())));
                       worst = std::max(worst, ratio - 1.0);
                     }
                   return std::max(0.0, worst);
                 }});
  }
  p.push_back({"specfun/j_tilde_half_order", {}, 1e-12, [] {
                 double worst = 0.0;
                 for (double z : {0.1, 1.0, 3.0, 7.5}) {
                   const double closed = 2.0 * std::sin(z) / (std::sqrt(std::numbers::pi) * z);
                   worst = std::max(worst, rel_err(bessel_j_tilde(0.5, z), closed));
                   const double closed_i = 2.0 * std::sinh(z) / (std::sqrt(std::numbers::pi) * z);
                   worst = std::max(worst, rel_err(bessel_i_tilde(0.5, z), closed_i));
                 }
                 return worst;
               }});
  return run_cases(std::move(p), opts);
}

// ---- radial sector ------------------------------------------------------------------

std::vector<VerifyCase> check_eigenfunctions(const VerifyOptions& opts) {
  std::vector<Pending> p;
  const std::vector<double> grid = default_radial_grid();
  ApplyOptions ao;
  ao.quad_n = opts.quad_n;
  for (int m : dims(opts, {3, 4, 5}))
    for (int l = 0; l <= 2; ++l)
      for (int a = l; a <= l + 3; ++a)
        for (const ComplexTime& t : eigen_times()) {
          p.push_back({"eigen/m=" + std::to_string(m) + "/l=" + std::to_string(l) + "/a=" + std::to_string(a) +
                           "/t=" + time_label(t),
                       {{"m", m}, {"l", l}, {"a", a}, {"t_re", t.value().real()}, {"t_im", t.value().imag()}},
                       1e-6, [=, &grid] {
                         const ModelParams params(m);
                         const QuasiPolynomial f = make_fal(a, l, params);
                         const std::vector<cplx> out = apply_radial_semigroup(f, t, l, params, grid, ao);
                         std::vector<cplx> expect = sample_qp(f, grid);
                         const cplx ev = std::exp(semigroup_log_eigenvalue(a, t, params));
                         for (auto& v : expect) v *= ev;
                         return rel_l2(out, expect);
                       }});
        }
  return run_cases(std::move(p), opts);
}

std::vector<VerifyCase> check_semigroup_law(const VerifyOptions& opts) {
  std::vector<Pending> p;
  const std::vector<std::pair<double, double>> pairs = {{0.4, 0.7}, {0.2, 1.1}};
  const int n = std::max(opts.quad_n, 200);
  for (int m : dims(opts, {3, 4, 5}))
    for (int l = 0; l <= 2; ++l)
      for (const auto& [t1, t2] : pairs) {
        p.push_back({"semigroup_law/m=" + std::to_string(m) + "/l=" + std::to_string(l) + "/t1=" + num(t1) +
                         "/t2=" + num(t2),
                     {{"m", m}, {"l", l}, {"t1", t1}, {"t2", t2}}, 1e-6, [=] {
                       const ModelParams params(m);
                       const ComplexTime a(t1, 0.0), b(t2, 0.0), ab(t1 + t2, 0.0);
                       const double damping = 2.0 * (a.alpha() + b.alpha());
                       const RadialRule rule = damped_laguerre_rule(n, damping);
                       const std::vector<double> pts = {0.3, 0.8, 1.5, 2.5};
                       double worst = 0.0;
                       for (double r : pts)
                         for (double rp : pts) {
                           cplx s = 0.0;
                           for (std::size_t j = 0; j < rule.size(); ++j) {
                             const double x = rule.r[j];
                             s += rule.w[j] * std::pow(x, m - 2.0) * radial_kernel(r, x, a, l, params) *
                                  radial_kernel(x, rp, b, l, params);
                           }
                           worst = std::max(worst, rel_err(s, radial_kernel(r, rp, ab, l, params)));
                         }
                       return worst;
                     }});
      }
  return run_cases(std::move(p), opts);
}

std::vector<VerifyCase> check_sector_algebra(const VerifyOptions& opts) {
  std::vector<Pending> p;
  const cplx i(0.0, 1.0);
  for (int m : dims(opts, {3, 4, 5}))
    for (int l = 0; l <= 2; ++l)
      for (int a = l; a <= l + 3; ++a) {
        const std::string base = "sector_algebra/m=" + std::to_string(m) + "/l=" + std::to_string(l) + "/a=" +
                                 std::to_string(a);
        const Params prm = {{"m", m}, {"l", l}, {"a", a}};
        const auto op = [l, m](Sl2Generator g, const QuasiPolynomial& f) {
          return apply_sl2_operator(g, l, f, ModelParams(m));
        };
        const auto f = [=] { return make_fal(a, l, ModelParams(m)); };
        p.push_back({base + "/D_eigenvalue", prm, 1e-12, [=] {
                       return coefficient_distance(op(Sl2Generator::D, f()), f() * cplx(-(a + 0.5 * (m - 1.0))));
                     }});
        p.push_back({base + "/bracket_h_e", prm, 1e-12, [=] {
                       const auto h = Sl2Generator::h_tilde;
                       const auto e = Sl2Generator::e_tilde;
                       return coefficient_distance(op(h, op(e, f())) - op(e, op(h, f())), op(e, f()) * cplx(2.0));
                     }});
        p.push_back({base + "/bracket_h_f", prm, 1e-12, [=] {
                       const auto h = Sl2Generator::h_tilde;
                       const auto ft = Sl2Generator::f_tilde;
                       return coefficient_distance(op(h, op(ft, f())) - op(ft, op(h, f())), op(ft, f()) * cplx(-2.0));
                     }});
        p.push_back({base + "/bracket_e_f", prm, 1e-12, [=] {
                       const auto e = Sl2Generator::e_tilde;
                       const auto ft = Sl2Generator::f_tilde;
                       return coefficient_distance(op(e, op(ft, f())) - op(ft, op(e, f())),
                                                   op(Sl2Generator::h_tilde, f()));
                     }});
        p.push_back({base + "/D_from_e_f", prm, 1e-12, [=] {
                       const QuasiPolynomial rhs =
                           (op(Sl2Generator::f_tilde, f()) - op(Sl2Generator::e_tilde, f())) * (1.0 / (2.0 * i));
                       return coefficient_distance(op(Sl2Generator::D, f()), rhs);
                     }});
      }
  return run_cases(std::move(p), opts);
}

std::vector<VerifyCase> check_weber(const VerifyOptions& opts) {
  std::vector<Pending> p;
  const std::vector<std::pair<double, double>> ab = {{1.0, 1.0}, {2.0, 3.0}};
  for (double rho : {0.5, 1.0, 2.0})
    for (const auto& [alpha, beta] : ab)
      for (int nu : {1, 2}) {
        p.push_back({"weber/rho=" + num(rho) + "/alpha=" + num(alpha) + "/beta=" + num(beta) + "/nu=" +
                         std::to_string(nu),
                     {{"rho", rho}, {"alpha", alpha}, {"beta", beta}, {"nu", nu}}, 1e-8, [=] {
                       const WeberResult w = weber_check(rho, alpha, beta, nu, std::max(opts.quad_n, 200));
                       return std::fabs(w.lhs - w.rhs) / std::fabs(w.rhs);
                     }});
      }
  return run_cases(std::move(p), opts);
}

// ---- kernel --------------------------------------------------------------------------

std::vector<VerifyCase> check_reduction(const VerifyOptions& opts) {
  std::vector<Pending> p;
  const std::vector<ComplexTime> times = {ComplexTime(0.5, 0.0), ComplexTime(1.0, 0.0), ComplexTime(0.5, 0.5),
                                          ComplexTime(0.3, 0.9), ComplexTime::pi_i()};
  for (int m : dims(opts, {3, 5}))
    for (int l = 0; l <= 3; ++l)
      for (const ComplexTime& t : times) {
        p.push_back({"reduction/m=" + std::to_string(m) + "/l=" + std::to_string(l) + "/t=" + time_label(t),
                     {{"m", m}, {"l", l}, {"t_re", t.value().real()}, {"t_im", t.value().imag()}}, 1e-6, [=] {
                       const ModelParams params(m);
                       double worst = 0.0;
                       for (double r : {0.3, 1.0, 2.5})
                         for (double rp : {0.5, 1.7})
                           worst = std::max(worst, rel_err(angular_reduce(r, rp, t, l, params),
                                                           radial_kernel(r, rp, t, l, params)));
                       return worst;
                     }});
      }
  return run_cases(std::move(p), opts);
}

std::vector<VerifyCase> check_expansion(const VerifyOptions& opts) {
  std::vector<Pending> p;
  const std::vector<ComplexTime> times = {ComplexTime(0.5, 0.0), ComplexTime(1.0, 0.0), ComplexTime(2.0, 0.0),
                                          ComplexTime(0.5, 1.0), ComplexTime(1.0, 2.5)};
  for (int m : dims(opts, {3, 5}))
    for (const ComplexTime& t : times) {
      p.push_back({"expansion/m=" + std::to_string(m) + "/t=" + time_label(t),
                   {{"m", m}, {"t_re", t.value().real()}, {"t_im", t.value().imag()}, {"l_max", 40}}, 1e-8, [=] {
                     const ModelParams params(m);
                     const std::vector<std::vector<double>> xs = {{1.0, 0.0, 0.0, 0.0, 0.0},
                                                                  {0.5, 0.3, 0.2, -0.1, 0.4},
                                                                  {1.2, -0.4, 0.3, 0.2, -0.2}};
                     const std::vector<std::vector<double>> ys = {{0.0, 1.0, 0.0, 0.0, 0.0},
                                                                  {-0.4, 0.6, 0.1, 0.3, 0.0},
                                                                  {0.8, 0.9, -0.5, 0.1, 0.3}};
                     double worst = 0.0;
                     for (std::size_t k = 0; k < xs.size(); ++k) {
                       const SpatialPoint x{std::vector<double>(xs[k].begin(), xs[k].begin() + m)};
                       const SpatialPoint y{std::vector<double>(ys[k].begin(), ys[k].begin() + m)};
                       worst = std::max(worst, rel_err(expansion_partial_sum(x, y, t, 40, params),
                                                       full_kernel(x, y, t, params)));
                     }
                     return worst;
                   }});
    }
  for (double nu : {0.5, 1.0, 1.5})
    for (double z : {1.0, 4.0, 16.0}) {
      p.push_back({"expansion_bessel/nu=" + num(nu) + "/z=" + num(z), {{"nu", nu}, {"z", z}, {"l_max", 40}}, 1e-7,
                   [=] {
                     double worst = 0.0;
                     for (double theta : {0.3, 1.2, 2.5}) {
                       const auto [lhs, rhs] = bessel_expansion_sides(nu, z, theta, 40);
                       worst = std::max(worst, rel_err(rhs, lhs));
                     }
                     return worst;
                   }});
    }
  return run_cases(std::move(p), opts);
}

// ---- inversion -------------------------------------------------------------------------

std::vector<VerifyCase> check_inversion(const VerifyOptions& opts) {
  std::vector<Pending> p;
  const std::vector<double> grid = default_radial_grid();
  for (int m : dims(opts, {3, 4, 5}))
    for (int l = 0; l <= 2; ++l) {
      for (int a = l; a <= l + 3; ++a) {
        const std::string base =
            "inversion/m=" + std::to_string(m) + "/l=" + std::to_string(l) + "/a=" + std::to_string(a);
        const Params prm = {{"m", m}, {"l", l}, {"a", a}};
        p.push_back({base + "/order", prm, 1e-6, [=, &grid] {
                       const ModelParams params(m);
                       const QuasiPolynomial f = make_fal(a, l, params);
                       const RadialRule rule = truncation_rule({DecayKind::exponential, 2.0}, 200);
                       const SampledProfile once = apply_inversion_radial_on(f, l, params, rule);
                       const std::vector<cplx> twice = apply_inversion_radial(once, l, params, grid);
                       std::vector<cplx> expect = sample_qp(f, grid);
                       const double sign = m % 2 == 1 ? 1.0 : -1.0;
                       for (auto& v : expect) v *= sign;
                       return rel_l2(twice, expect);
                     }});
        p.push_back({base + "/boundary_eigenvalue", prm, 1e-6, [=, &grid] {
                       const ModelParams params(m);
                       const QuasiPolynomial f = make_fal(a, l, params);
                       const std::vector<cplx> out = apply_inversion_radial(f, l, params, grid);
                       std::vector<cplx> expect = sample_qp(f, grid);
                       const cplx ev = std::exp(semigroup_log_eigenvalue(a, ComplexTime::pi_i(), params));
                       for (auto& v : expect) v *= ev;
                       return rel_l2(out, expect);
                     }});
      }
      p.push_back({"inversion/m=" + std::to_string(m) + "/l=" + std::to_string(l) + "/plancherel",
                   {{"m", m}, {"l", l}}, 1e-5, [=] {
                     const ModelParams params(m);
                     const QuasiPolynomial f = make_fal(l, l, params) + make_fal(l + 2, l, params);
                     const RadialRule rule = truncation_rule({DecayKind::exponential, 2.0}, 400);
                     const SampledProfile out = apply_inversion_radial_on(f, l, params, rule);
                     SampledProfile in{rule, sample_qp(f, rule.r), std::nullopt};
                     const double n_in = profile_norm(in, m - 2.0);
                     return std::fabs(profile_norm(out, m - 2.0) - n_in) / n_in;
                   }});
    }
  for (int nu : {1, 2, 3}) {
    const std::vector<std::pair<std::string, std::function<double(double)>>> family = {
        {"gauss", [nu](double y) { return std::pow(y, nu + 0.5) * std::exp(-0.5 * y * y); }},
        {"narrow", [nu](double y) { return std::pow(y, nu + 0.5) * std::exp(-y * y); }},
        {"shifted", [nu](double y) { return std::pow(y, nu + 2.5) * std::exp(-0.75 * y * y); }},
    };
    const std::vector<double> rates = {0.5, 1.0, 0.75};
    for (std::size_t k = 0; k < family.size(); ++k) {
      const auto& [name, h] = family[k];
      const double rate = rates[k];
      const std::string base = "hankel/nu=" + std::to_string(nu) + "/" + name;
      const auto input = [h, rate] {
        return ProfileFunction{[h](double y) { return cplx(h(y)); }, {DecayKind::gaussian, rate}};
      };
      p.push_back({base + "/order", {{"nu", nu}}, 1e-6, [=] {
                     const DecayCertificate out_decay{DecayKind::gaussian, 0.25 / rate};
                     const RadialRule mid = truncation_rule(out_decay, 300);
                     const SampledProfile once = hankel_transform_on(input(), nu, mid);
                     const RadialRule back = truncation_rule({DecayKind::gaussian, rate}, 200);
                     const std::vector<cplx> twice = hankel_transform(once, nu, back.r);
                     std::vector<cplx> expect(back.size());
                     for (std::size_t j = 0; j < back.size(); ++j) expect[j] = h(back.r[j]);
                     return relative_distance(twice, expect, back);
                   }});
      p.push_back({base + "/plancherel", {{"nu", nu}}, 1e-6, [=] {
                     const RadialRule mid = truncation_rule({DecayKind::gaussian, 0.25 / rate}, 300);
                     const SampledProfile once = hankel_transform_on(input(), nu, mid);
                     const RadialRule in_rule = truncation_rule({DecayKind::gaussian, rate}, 300);
                     SampledProfile in{in_rule, {}, std::nullopt};
                     for (double y : in_rule.r) in.values.push_back(h(y));
                     const double n_in = profile_norm(in);
                     return std::fabs(profile_norm(once) - n_in) / n_in;
                   }});
    }
    p.push_back({"hankel/nu=" + std::to_string(nu) + "/fixed_point", {{"nu", nu}}, 1e-6, [nu] {
                   const auto h = [nu](double y) { return std::pow(y, nu + 0.5) * std::exp(-0.5 * y * y); };
                   const ProfileFunction in{[h](double y) { return cplx(h(y)); }, {DecayKind::gaussian, 0.5}};
                   const RadialRule rule = truncation_rule({DecayKind::gaussian, 0.5}, 200);
                   const std::vector<cplx> out = hankel_transform(in, nu, rule.r);
                   std::vector<cplx> expect(rule.size());
                   for (std::size_t j = 0; j < rule.size(); ++j) expect[j] = h(rule.r[j]);
                   return relative_distance(out, expect, rule);
                 }});
  }
  for (int m : dims(opts, {3, 4, 5}))
    for (int l = 0; l <= 1; ++l) {
      const int nu = m - 2 + 2 * l;
      for (int a = l; a <= l + 2; ++a) {
        p.push_back({"hankel_conjugation/m=" + std::to_string(m) + "/l=" + std::to_string(l) + "/a=" +
                         std::to_string(a),
                     {{"m", m}, {"l", l}, {"a", a}}, 1e-6, [=] {
                       const ModelParams params(m);
                       const ProfileFunction mapped = phi_map(make_fal(a, l, params), params);
                       const RadialRule rule = truncation_rule(mapped.decay, 200);
                       const std::vector<cplx> out = hankel_transform(mapped, nu, rule.r);
                       // T_l f_{a,l} = e^{-(a+(m-1)/2) pi i} f_{a,l}, conjugated by e^{-(l+(m-1)/2) pi i}.
                       const double sign = (a + l + m - 1) % 2 == 0 ? 1.0 : -1.0;
                       std::vector<cplx> expect(rule.size());
                       for (std::size_t j = 0; j < rule.size(); ++j) expect[j] = sign * mapped.f(rule.r[j]);
                       return relative_distance(out, expect, rule);
                     }});
      }
    }
  return run_cases(std::move(p), opts);
}

// ---- group ------------------------------------------------------------------------------

std::vector<VerifyCase> check_bruhat(const VerifyOptions& opts) {
  std::vector<Pending> p;
  for (int m : dims(opts, {3, 5})) {
    const std::string base = "bruhat/m=" + std::to_string(m);
    p.push_back({base + "/random_reconstruction", {{"m", m}, {"samples", 1000}}, 1e-10, [m] {
                   const ModelParams params(m);
                   std::mt19937_64 rng(20240601 + m);
                   double worst = 0.0;
                   for (int k = 0; k < 1000; ++k) {
                     const LorentzMatrix g = random_group_element(rng, params);
                     worst = std::max(worst, bruhat_factor(g, params).reconstruction_error);
                   }
                   return worst;
                 }});
    p.push_back({base + "/random_m_plus_fixes", {{"m", m}, {"samples", 1000}}, 1e-10, [m] {
                   const ModelParams params(m);
                   std::mt19937_64 rng(20240601 + m);
                   double worst = 0.0;
                   for (int k = 0; k < 1000; ++k) {
                     const LorentzMatrix g = random_group_element(rng, params);
                     const BruhatFactors f = bruhat_factor(g, params);
                     const Eigen::VectorXd e0 = Eigen::VectorXd::Unit(m + 3, 0);
                     const Eigen::VectorXd e2 = Eigen::VectorXd::Unit(m + 3, m + 2);
                     worst = std::max({worst, (f.m_plus * e0 - e0).cwiseAbs().maxCoeff(),
                                       (f.m_plus * e2 - e2).cwiseAbs().maxCoeff(),
                                       lorentz_defect(f.m_plus) / std::max(1.0, f.m_plus.cwiseAbs().maxCoeff())});
                   }
                   return worst;
                 }});
    p.push_back({base + "/random_criterion_symmetry", {{"m", m}, {"samples", 1000}}, 1e-12, [m] {
                   const ModelParams params(m);
                   std::mt19937_64 rng(20240601 + m);
                   const Eigen::MatrixXd j = lorentz_metric(m);
                   double worst = 0.0;
                   for (int k = 0; k < 1000; ++k) {
                     const LorentzMatrix g = random_group_element(rng, params);
                     const LorentzMatrix gi = j * g.transpose() * j;
                     const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
                     worst = std::max(worst, std::fabs(bruhat_criterion(g) - bruhat_criterion(gi)) / scale);
                   }
                   return worst;
                 }});
    p.push_back({base + "/parabolic_detection", {{"m", m}}, 0.0, [m] {
                   const ModelParams params(m);
                   std::mt19937_64 rng(99 + m);
                   std::uniform_real_distribution<double> unit(-1.0, 1.0);
                   int misses = 0;
                   for (int k = 0; k < 200; ++k) {
                     Eigen::VectorXd b(m + 1);
                     for (int q = 0; q <= m; ++q) b(q) = unit(rng);
                     LorentzMatrix g = make_nbar(b) * make_scaling(unit(rng), m) *
                                       m_plus_rotation(m, 1, 2, unit(rng)) * m_plus_boost(m, 1, unit(rng));
                     if (k % 2 == 1) g = -g;
                     try {
                       bruhat_factor(g, params);
                       ++misses;
                     } catch (const InParabolicError&) {
                       const ParabolicFactors f = parabolic_factor(g, params);
                       const double err = (parabolic_reconstruct(f) - g).cwiseAbs().maxCoeff() /
                                          std::max(1.0, g.cwiseAbs().maxCoeff());
                       if (err > 1e-10) ++misses;
                     }
                   }
                   // Elements off the parabolic subgroup must not be flagged.
                   for (int k = 0; k < 200; ++k) {
                     const LorentzMatrix g = random_group_element(rng, params);
                     try {
                       bruhat_factor(g, params);
                     } catch (const InParabolicError&) {
                       ++misses;
                     }
                   }
                   return static_cast<double>(misses);
                 }});
    p.push_back({base + "/w0_and_scaling", {{"m", m}}, 0.0, [m] {
                   const ModelParams params(m);
                   int misses = 0;
                   const BruhatFactors f = bruhat_factor(make_w0(m), params);
                   if (f.b.cwiseAbs().maxCoeff() != 0.0 || f.a.cwiseAbs().maxCoeff() != 0.0 || f.t != 0.0 ||
                       f.delta != 1 || (f.m_plus - Eigen::MatrixXd::Identity(m + 3, m + 3)).cwiseAbs().maxCoeff() > 1e-15)
                     ++misses;
                   try {
                     bruhat_factor(make_scaling(1.0, m), params);
                     ++misses;
                   } catch (const InParabolicError&) {
                   }
                   return static_cast<double>(misses);
                 }});
  }
  return run_cases(std::move(p), opts);
}

// ---- Dirac sequence ------------------------------------------------------------------------

std::vector<VerifyCase> check_dirac(const VerifyOptions& opts) {
  std::vector<Pending> p;
  const int n = std::max(opts.quad_n, 200);
  for (int nu : {1, 2}) {
    const std::vector<std::pair<std::string, ProfileFunction>> profiles = {
        {"gauss", {[nu](double x) { return cplx(std::pow(x, nu + 0.5) * std::exp(-0.5 * x * x)); },
                   {DecayKind::gaussian, 0.5}}},
        {"bump", {[nu](double x) { return cplx(std::pow(x, nu + 0.5) * (1.0 + x * x) * std::exp(-x * x)); },
                  {DecayKind::gaussian, 1.0}}},
    };
    for (const auto& [name, h] : profiles) {
      p.push_back({"dirac/nu=" + std::to_string(nu) + "/" + name + "/monotone", {{"nu", nu}}, 0.0, [=] {
                     const RadialRule rule = truncation_rule({DecayKind::gaussian, 0.25 * h.decay.rate}, n);
                     std::vector<cplx> ref(rule.size());
                     for (std::size_t j = 0; j < rule.size(); ++j) ref[j] = h.f(rule.r[j]);
                     double prev = std::numeric_limits<double>::infinity();
                     int violations = 0;
                     for (double s : {0.2, 0.1, 0.05}) {
                       ApplyOptions ao;
                       ao.quad_n = n;
                       const std::vector<cplx> out = dirac_operator(h, s, nu, rule.r, ao);
                       const double d = relative_distance(out, ref, rule);
                       if (!(d < prev)) ++violations;
                       prev = d;
                     }
                     return static_cast<double>(violations);
                   }});
    }
    p.push_back({"dirac/nu=" + std::to_string(nu) + "/semigroup", {{"nu", nu}, {"s1", 0.2}, {"s2", 0.3}}, 1e-7,
                 [=] {
                   const ProfileFunction& h = profiles[0].second;
                   ApplyOptions ao;
                   ao.quad_n = n;
                   const RadialRule mid = truncation_rule({DecayKind::gaussian, 0.1}, n, true);
                   const SampledProfile once = dirac_operator_on(h, 0.3, nu, mid, ao);
                   const RadialRule out = truncation_rule({DecayKind::gaussian, 0.25}, 120, true);
                   const std::vector<cplx> twice = dirac_operator(once, 0.2, nu, out.r, ao);
                   const std::vector<cplx> direct = dirac_operator(h, 0.5, nu, out.r, ao);
                   return relative_distance(twice, direct, out);
                 }});
  }
  for (int l = 0; l <= 1; ++l)
    for (int a = l; a <= l + 2; ++a)
      for (double s : {0.25, 0.5}) {
        const int m = opts.m.value_or(3);
        p.push_back({"dirac_conjugation/m=" + std::to_string(m) + "/l=" + std::to_string(l) + "/a=" +
                         std::to_string(a) + "/s=" + num(s),
                     {{"m", m}, {"l", l}, {"a", a}, {"s", s}}, 1e-8, [=] {
                       const ModelParams params(m);
                       const ProfileFunction mapped = phi_map(make_fal(a, l, params), params);
                       const RadialRule rule = truncation_rule(mapped.decay, 160, true);
                       ApplyOptions ao;
                       ao.quad_n = n;
                       const std::vector<cplx> out = dirac_operator(mapped, s, m - 2 + 2 * l, rule.r, ao);
                       const cplx ev = std::exp(semigroup_log_eigenvalue(a, ComplexTime(2.0 * s, 0.0), params));
                       std::vector<cplx> expect(rule.size());
                       for (std::size_t j = 0; j < rule.size(); ++j) expect[j] = ev * mapped.f(rule.r[j]);
                       return relative_distance(out, expect, rule);
                     }});
      }
  return run_cases(std::move(p), opts);
}

// ---- suites -----------------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all",       "specfun",   "eigen",  "weber",    "reduction",
                                                 "inversion", "bruhat",    "dirac",  "expansion"};
  return names;
}

VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts) {
  using Check = std::vector<VerifyCase> (*)(const VerifyOptions&);
  std::vector<Check> checks;
  if (suite == "specfun") checks = {check_specfun};
  else if (suite == "eigen") checks = {check_eigenfunctions, check_semigroup_law, check_sector_algebra};
  else if (suite == "weber") checks = {check_weber};
  else if (suite == "reduction") checks = {check_reduction};
  else if (suite == "inversion") checks = {check_inversion};
  else if (suite == "bruhat") checks = {check_bruhat};
  else if (suite == "dirac") checks = {check_dirac};
  else if (suite == "expansion") checks = {check_expansion};
  else if (suite == "all")
    checks = {check_specfun,   check_eigenfunctions, check_semigroup_law, check_sector_algebra, check_weber,
              check_reduction, check_expansion,      check_inversion,     check_bruhat,         check_dirac};
  else
    throw ArgumentError("unknown suite '" + suite + "'");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = suite;
  for (Check c : checks) {
    std::vector<VerifyCase> cases = c(opts);
    report.cases.insert(report.cases.end(), cases.begin(), cases.end());
  }
  std::sort(report.cases.begin(), report.cases.end(),
            [](const VerifyCase& a, const VerifyCase& b) { return a.id < b.id; });
  for (const auto& c : report.cases) (c.pass ? report.passed : report.failed) += 1;
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace minrep
