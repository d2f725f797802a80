#include "minrep/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "minrep/errors.hpp"
#include "minrep/kernel.hpp"
#include "minrep/specfun.hpp"

namespace minrep {

namespace {

void require_certificate(const RadialInput& f, const char* what) {
  if (!decay_of(f)) throw DomainError(std::string(what) + ": input needs a decay certificate");
}

}  // namespace

cplx boundary_phase(int m) {
  switch (((m - 1) % 4 + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

InversionKernelEval inversion_kernel(const SpatialPoint& x, const SpatialPoint& xp, const ModelParams& params) {
  if (x.dim() != params.m || xp.dim() != params.m) throw ArgumentError("point dimension does not match m");
  const cplx phase = boundary_phase(params.m);
  const ScaledComplex jt = bessel_j_tilde_scaled(params.nu(), psi(x, xp));
  const double mag = std::exp(std::numbers::ln2 - 0.5 * (params.m - 1.0) * std::log(std::numbers::pi));
  return {mag * jt.value() * phase, phase};
}

cplx inversion_radial_kernel(double r, double rp, int l, const ModelParams& params) {
  if (l < 0) throw ArgumentError("angular degree l must be >= 0");
  if (r < 0.0 || rp < 0.0) throw DomainError("radial kernel needs r, r' >= 0");
  const double rr = r * rp;
  if (rr == 0.0 && l > 0) return 0.0;
  const double order = params.m - 2.0 + 2.0 * l;
  const ScaledComplex jt = bessel_j_tilde_scaled(order, 4.0 * std::sqrt(rr));
  const double log_mag = (order + 1.0) * std::numbers::ln2 + (l > 0 ? l * std::log(rr) : 0.0) + jt.log_scale;
  const double sign = (l % 2 == 0) ? 1.0 : -1.0;
  return sign * boundary_phase(params.m) * jt.mantissa * std::exp(log_mag);
}

ApplyOptions boundary_options() {
  ApplyOptions o;
  o.quad_n = 400;
  return o;
}

std::vector<cplx> apply_inversion_radial(const RadialInput& f, int l, const ModelParams& params,
                                         std::span<const double> out_r, const ApplyOptions& opts) {
  if (l < 0) throw ArgumentError("angular degree l must be >= 0");
  require_certificate(f, "apply_inversion_radial");
  const Discretized in = discretize(f, 1.0, opts.quad_n);
  const double order = params.m - 2.0 + 2.0 * l;
  // |J~_nu(x)| <= 1/Gamma(nu+1) on the real line.
  const double c = std::exp((order + 1.0) * std::numbers::ln2 - log_gamma(order + 1.0));
  const auto kernel = [l, &params](double r, double rp) { return inversion_radial_kernel(r, rp, l, params); };
  const auto bound = [c, l](double r, double rp) { return l > 0 ? c * std::pow(r * rp, l) : c; };
  const double power = params.m - 2.0;
  const auto measure = [power](double r) { return power == 0.0 ? 1.0 : std::pow(r, power); };
  return nystrom_apply(kernel, bound, in, measure, out_r, opts.prune);
}

SampledProfile apply_inversion_radial_on(const RadialInput& f, int l, const ModelParams& params,
                                         const RadialRule& out_rule, const ApplyOptions& opts) {
  SampledProfile out;
  out.rule = out_rule;
  out.values = apply_inversion_radial(f, l, params, out_rule.r, opts);
  const auto in = decay_of(f);
  if (in && in->kind == DecayKind::exponential) {
    const double rate = semigroup_output_rate(ComplexTime::pi_i(), in->rate);
    if (rate > 0.0) out.decay = DecayCertificate{DecayKind::exponential, rate};
  }
  return out;
}

std::vector<cplx> hankel_transform(const RadialInput& h, int nu, std::span<const double> out_x,
                                   const ApplyOptions& opts) {
  if (nu < 1) throw DomainError("hankel_transform: order must be a positive integer");
  require_certificate(h, "hankel_transform");
  const Discretized in = discretize(h, 1.0, opts.quad_n, true);
  const auto kernel = [nu](double x, double y) -> cplx {
    const double xy = x * y;
    if (xy == 0.0) return 0.0;
    const ScaledComplex jt = bessel_j_tilde_scaled(nu, xy);
    return jt.mantissa * std::exp((nu + 0.5) * std::log(xy) - nu * std::numbers::ln2 + jt.log_scale);
  };
  return nystrom_apply(kernel, nullptr, in, nullptr, out_x, opts.prune);
}

SampledProfile hankel_transform_on(const RadialInput& h, int nu, const RadialRule& out_rule,
                                   const ApplyOptions& opts) {
  SampledProfile out;
  out.rule = out_rule;
  out.values = hankel_transform(h, nu, out_rule.r, opts);
  const auto in = decay_of(h);
  if (in && in->kind == DecayKind::gaussian) out.decay = DecayCertificate{DecayKind::gaussian, 0.25 / in->rate};
  return out;
}

cplx cone_inversion_kernel(const ConePoint& zeta, const ConePoint& zetap, const ModelParams& params) {
  zeta.validate();
  zetap.validate();
  if (zeta.dim() != params.m || zetap.dim() != params.m) throw ArgumentError("cone point dimension does not match m");
  const double ip = dot(zeta.coords, zetap.coords);
  if (ip < 0.0) return 0.0;
  const ScaledComplex jt = bessel_j_tilde_scaled(params.nu(), 2.0 * std::sqrt(2.0 * ip));
  const double mag = std::exp(std::numbers::ln2 - 0.5 * (params.m - 1.0) * std::log(std::numbers::pi));
  return mag * jt.value() * boundary_phase(params.m);
}

cplx evaluate_input(const RadialInput& f, double r) {
  if (const auto* q = std::get_if<QuasiPolynomial>(&f)) return (*q)(r);
  if (const auto* p = std::get_if<ProfileFunction>(&f)) return p->f(r);
  return interpolate_profile(std::get<SampledProfile>(f), r);
}

ProfileFunction phi_map(const RadialInput& f, const ModelParams& params) {
  const auto decay = decay_of(f);
  if (decay && decay->kind != DecayKind::exponential)
    throw DomainError("phi_map: gaussian envelopes in r have no gaussian image in x");
  const double power = 0.5 * (2.0 * params.m - 3.0);
  ProfileFunction out;
  out.f = [f, power](double x) -> cplx {
    if (x == 0.0) return 0.0;
    return std::pow(0.5 * x, power) * evaluate_input(f, 0.25 * x * x);
  };
  // e^{-k r} with r = x^2/4 is a gaussian of rate k/4.
  out.decay = DecayCertificate{DecayKind::gaussian, decay ? 0.25 * decay->rate : 0.5};
  return out;
}

ProfileFunction phi_inverse(const RadialInput& h, const ModelParams& params) {
  const auto decay = decay_of(h);
  if (decay && decay->kind != DecayKind::gaussian) throw DomainError("phi_inverse: input needs a gaussian envelope");
  const double power = 0.25 * (2.0 * params.m - 3.0);
  ProfileFunction out;
  out.f = [h, power](double r) -> cplx {
    if (r == 0.0) return 0.0;
    return std::pow(r, -power) * evaluate_input(h, 2.0 * std::sqrt(r));
  };
  out.decay = DecayCertificate{DecayKind::exponential, decay ? 4.0 * decay->rate : 2.0};
  return out;
}

SampledProfile phi_map_samples(const SampledProfile& f, const ModelParams& params) {
  const double power = 0.5 * (2.0 * params.m - 3.0);
  SampledProfile out;
  out.rule.r.resize(f.rule.size());
  out.rule.w.resize(f.rule.size());
  out.values.resize(f.rule.size());
  for (std::size_t j = 0; j < f.rule.size(); ++j) {
    const double r = f.rule.r[j];
    const double x = 2.0 * std::sqrt(r);
    out.rule.r[j] = x;
    // dx = dr / sqrt(r)
    out.rule.w[j] = f.rule.w[j] / std::sqrt(r);
    out.values[j] = std::pow(0.5 * x, power) * f.values[j];
  }
  if (f.decay) {
    if (f.decay->kind != DecayKind::exponential) throw DomainError("phi_map_samples: expected an exponential envelope");
    out.decay = DecayCertificate{DecayKind::gaussian, 0.25 * f.decay->rate};
  }
  return out;
}

}  // namespace minrep
