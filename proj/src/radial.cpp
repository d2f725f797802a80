#include "minrep/radial.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "minrep/errors.hpp"
#include "minrep/specfun.hpp"

namespace minrep {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Pieces of the radial kernel that depend only on (t, l, m), in log form:
//   K = exp(log_pref + l log(rr') - 2 (r + r') coth) * I~_nu(4 sqrt(rr') / sh)
// with nu = m - 2 + 2l and log_pref = (nu + 1) log 2 - (m - 1 + 2l) log sh.
struct RadialKernelCtx {
  int l;
  double order;
  cplx coth;
  cplx inv_sh;
  cplx log_pref;

  RadialKernelCtx(const ComplexTime& t, int l_, const ModelParams& p) : l(l_), order(p.m - 2.0 + 2.0 * l_) {
    const cplx sh = t.sinh_half();
    coth = t.coth_half();
    inv_sh = 1.0 / sh;
    log_pref = (order + 1.0) * std::numbers::ln2 - (p.m - 1.0 + 2.0 * l) * std::log(sh);
  }

  cplx operator()(double r, double rp) const {
    const double rr = r * rp;
    if (rr == 0.0 && l > 0) return 0.0;
    const ScaledComplex it = bessel_i_tilde_scaled(order, 4.0 * std::sqrt(rr) * inv_sh);
    if (it.mantissa == cplx(0.0, 0.0)) return 0.0;
    const double log_rr = l > 0 ? l * std::log(rr) : 0.0;
    return it.mantissa * std::exp(log_pref + log_rr - 2.0 * (r + rp) * coth + it.log_scale);
  }
};

void check_sector(int l) {
  if (l < 0) throw ArgumentError("angular degree l must be >= 0, got " + std::to_string(l));
}

// Inputs on the imaginary axis only converge absolutely with certified decay.
void check_boundary_input(const RadialInput& f, const ComplexTime& t) {
  if (t.on_imaginary_axis() && !decay_of(f))
    throw DomainError("sampled profile without a decay certificate cannot be transformed at Re t = 0");
}

std::optional<DecayCertificate> output_certificate(const RadialInput& f, const ComplexTime& t) {
  const auto in = decay_of(f);
  if (!in || in->kind != DecayKind::exponential) return std::nullopt;
  const double rate = semigroup_output_rate(t, in->rate);
  if (!(rate > 0.0)) return std::nullopt;
  return DecayCertificate{DecayKind::exponential, rate};
}

// Gaussian-in-x counterpart of semigroup_output_rate for the Bessel heat kernel.
std::optional<DecayCertificate> dirac_output_certificate(const RadialInput& h, cplx s) {
  const auto in = decay_of(h);
  if (!in || in->kind != DecayKind::gaussian) return std::nullopt;
  const cplx c = 1.0 / std::tanh(s);
  const cplx sh = std::sinh(s);
  const double rate = (0.5 * c - 1.0 / (2.0 * sh * sh * (2.0 * in->rate + c))).real();
  if (!(rate > 0.0)) return std::nullopt;
  return DecayCertificate{DecayKind::gaussian, rate};
}

}  // namespace

ModelParams::ModelParams(int dim) : m(dim) {
  if (dim < 2) throw DomainError("dimension m must be >= 2, got " + std::to_string(dim));
}

ComplexTime::ComplexTime(cplx t) : t_(t) {
  if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) throw DomainError("time must be finite");
  if (t.real() < 0.0) throw DomainError("time needs Re t >= 0");
  if (t.real() == 0.0) {
    const double k = std::round(t.imag() / kTwoPi);
    if (std::fabs(t.imag() - k * kTwoPi) <= 1e-12 * std::max(1.0, std::fabs(t.imag())))
      throw DomainError("time lies on the excluded lattice 2 pi i Z");
  }
}

ComplexTime ComplexTime::pi_i() { return ComplexTime(cplx(0.0, std::numbers::pi)); }

double ComplexTime::alpha() const {
  const double x = t_.real();
  const double y = t_.imag();
  return std::sinh(x) / (std::cosh(x) - std::cos(y));
}

double ComplexTime::beta() const { return std::cos(0.5 * t_.imag()) / std::cosh(0.5 * t_.real()); }

cplx ComplexTime::sinh_half() const {
  // At t = pi i the real part must be exactly zero.
  if (on_imaginary_axis()) return cplx(0.0, std::sin(0.5 * t_.imag()));
  return std::sinh(0.5 * t_);
}

cplx ComplexTime::coth_half() const {
  if (on_imaginary_axis()) return cplx(0.0, -1.0 / std::tan(0.5 * t_.imag()));
  return 1.0 / std::tanh(0.5 * t_);
}

void SectorIndex::validate() const {
  if (l < 0 || a < l)
    throw ArgumentError("sector needs 0 <= l <= a, got l=" + std::to_string(l) + " a=" + std::to_string(a));
}

QuasiPolynomial make_fal(int a, int l, const ModelParams& params) {
  SectorIndex{l, a}.validate();
  const PolynomialCoeffs lag = laguerre_coeffs(a - l, params.m - 2.0 + 2.0 * l);
  std::vector<cplx> c(lag.coeffs.size());
  double scale = 1.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = lag.coeffs[k] * scale;
    scale *= 4.0;
  }
  return QuasiPolynomial(l, std::move(c));
}

double fal_norm2(int a, int l, const ModelParams& params) {
  SectorIndex{l, a}.validate();
  const int m = params.m;
  return std::exp(log_gamma(m - 1.0 + a + l) - (m - 1.0 + 2.0 * l) * std::log(4.0) - log_gamma(a - l + 1.0));
}

cplx semigroup_log_eigenvalue(int a, const ComplexTime& t, const ModelParams& params) {
  return -(a + params.half_shift()) * t.value();
}

cplx radial_kernel(double r, double rp, const ComplexTime& t, int l, const ModelParams& params) {
  check_sector(l);
  if (r < 0.0 || rp < 0.0) throw DomainError("radial kernel needs r, r' >= 0");
  return RadialKernelCtx(t, l, params)(r, rp);
}

double kernel_bound_constant(int l, const ModelParams& params) {
  check_sector(l);
  // |I~_nu(z)| <= e^{|Re z|} / Gamma(nu + 1), with a 1.5 safety margin.
  const double order = params.m - 2.0 + 2.0 * l;
  return 1.5 * std::exp((order + 1.0) * std::numbers::ln2 - log_gamma(order + 1.0));
}

double kernel_upper_bound(double r, double rp, const ComplexTime& t, int l, const ModelParams& params) {
  const double c = kernel_bound_constant(l, params);
  const double decay = 2.0 * t.alpha() * (1.0 - std::fabs(t.beta())) * (r + rp);
  const double power = params.m - 1.0 + 2.0 * l;
  const double log_rr = l > 0 ? l * std::log(r * rp) : 0.0;
  return c * std::exp(log_rr - decay - power * std::log(std::abs(t.sinh_half())));
}

double semigroup_output_rate(const ComplexTime& t, double k) {
  if (!(k > 0.0)) return 0.0;
  const cplx c = t.coth_half();
  const cplx sh = t.sinh_half();
  const double rate = (2.0 * c - 2.0 / (sh * sh * (c + 0.5 * k))).real();
  return rate > 0.0 ? rate : 0.0;
}

std::vector<cplx> apply_radial_semigroup(const RadialInput& f, const ComplexTime& t, int l, const ModelParams& params,
                                         std::span<const double> out_r, const ApplyOptions& opts) {
  check_sector(l);
  check_boundary_input(f, t);
  const Discretized in = discretize(f, 1.0 + t.alpha(), opts.quad_n);
  const RadialKernelCtx kernel(t, l, params);
  const double power = params.m - 2.0;
  const auto bound = [&](double r, double rp) { return kernel_upper_bound(r, rp, t, l, params); };
  const auto measure = [power](double r) { return power == 0.0 ? 1.0 : std::pow(r, power); };
  return nystrom_apply(kernel, bound, in, measure, out_r, opts.prune);
}

SampledProfile apply_radial_semigroup_on(const RadialInput& f, const ComplexTime& t, int l, const ModelParams& params,
                                         const RadialRule& out_rule, const ApplyOptions& opts) {
  SampledProfile out;
  out.rule = out_rule;
  out.values = apply_radial_semigroup(f, t, l, params, out_rule.r, opts);
  out.decay = output_certificate(f, t);
  return out;
}

WeberResult weber_check(double rho, double alpha, double beta, int nu, int n_points) {
  if (!(rho > 0.0 && alpha > 0.0 && beta > 0.0)) throw DomainError("weber_check: parameters must be positive");
  if (nu < 1) throw DomainError("weber_check: order must be a positive integer");
  const RadialRule rule = truncation_rule({DecayKind::gaussian, rho}, n_points);
  std::vector<cplx> v(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double x = rule.r[j];
    v[j] = std::exp(-rho * x * x) * bessel_j(nu, alpha * x) * bessel_j(nu, beta * x) * x;
  }
  double lhs = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) lhs += rule.w[j] * v[j].real();
  const double rhs = std::exp(-(alpha * alpha + beta * beta) / (4.0 * rho)) *
                     bessel_i(nu, alpha * beta / (2.0 * rho)).real() / (2.0 * rho);
  return {lhs, rhs};
}

cplx dirac_kernel(double x, double y, cplx s, int nu) {
  if (!(s.real() > 0.0)) throw DomainError("dirac kernel needs Re s > 0");
  if (x < 0.0 || y < 0.0) throw DomainError("dirac kernel needs x, y >= 0");
  const double xy = x * y;
  if (xy == 0.0) return 0.0;
  // (xy)^{nu+1/2} 2^{-nu} sh^{-nu-1} e^{-(x^2+y^2) coth/2} I~_nu(xy/sh)
  const cplx sh = std::sinh(s);
  const cplx coth = 1.0 / std::tanh(s);
  const ScaledComplex it = bessel_i_tilde_scaled(nu, xy / sh);
  const cplx log_mag = (nu + 0.5) * std::log(xy) - nu * std::numbers::ln2 - (nu + 1.0) * std::log(sh) -
                       0.5 * (x * x + y * y) * coth + it.log_scale;
  return it.mantissa * std::exp(log_mag);
}

std::vector<cplx> dirac_operator(const RadialInput& h, cplx s, int nu, std::span<const double> out_x,
                                 const ApplyOptions& opts) {
  if (!(s.real() > 0.0)) throw DomainError("dirac operator needs Re s > 0");
  if (nu < 1) throw DomainError("dirac operator: order must be a positive integer");
  const Discretized in = discretize(h, 1.0, opts.quad_n, true);
  const auto kernel = [s, nu](double x, double y) { return dirac_kernel(x, y, s, nu); };
  return nystrom_apply(kernel, nullptr, in, nullptr, out_x, opts.prune);
}

SampledProfile dirac_operator_on(const RadialInput& h, cplx s, int nu, const RadialRule& out_rule,
                                 const ApplyOptions& opts) {
  SampledProfile out;
  out.rule = out_rule;
  out.values = dirac_operator(h, s, nu, out_rule.r, opts);
  out.decay = dirac_output_certificate(h, s);
  return out;
}

std::vector<double> geometric_grid(double r_min, double r_max, int n) {
  if (!(r_min > 0.0 && r_max > r_min) || n < 2) throw ArgumentError("geometric_grid needs 0 < r_min < r_max, n >= 2");
  std::vector<double> g(static_cast<std::size_t>(n));
  const double ratio = std::log(r_max / r_min);
  for (int i = 0; i < n; ++i) g[i] = r_min * std::exp(ratio * i / (n - 1));
  g.back() = r_max;
  return g;
}

std::vector<double> default_radial_grid() { return geometric_grid(1e-3, 20.0, 256); }

}  // namespace minrep
