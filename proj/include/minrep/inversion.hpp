#pragma once

#include <complex>
#include <span>
#include <vector>

#include "minrep/points.hpp"
#include "minrep/profile.hpp"
#include "minrep/radial.hpp"

namespace minrep {

/// e^{-(m-1) pi i / 2} = (-i)^{m-1}, built from the parity of m - 1.
cplx boundary_phase(int m);

struct InversionKernelEval {
  cplx value;
  /// The factor e^{-(m-1) pi i / 2} that multiplies the real Bessel part.
  cplx phase_convention;
};

/// Boundary kernel 2 J~_{(m-3)/2}(psi(x, x')) e^{-(m-1) pi i / 2} / pi^{(m-1)/2}.
InversionKernelEval inversion_kernel(const SpatialPoint& x, const SpatialPoint& xp, const ModelParams& params);
/// Radial part at t = pi i: 2^{nu+1} (-1)^l e^{-(m-1) pi i / 2} (rr')^l J~_nu(4 sqrt(rr')), nu = m-2+2l.
cplx inversion_radial_kernel(double r, double rp, int l, const ModelParams& params);

/// Defaults for boundary transforms: the oscillatory kernels get 400 nodes.
ApplyOptions boundary_options();

/// (T_l f)(r) = integral K_l(r, r') f(r') r'^{m-2} dr'. Inputs need a decay certificate.
std::vector<cplx> apply_inversion_radial(const RadialInput& f, int l, const ModelParams& params,
                                         std::span<const double> out_r, const ApplyOptions& opts = boundary_options());
SampledProfile apply_inversion_radial_on(const RadialInput& f, int l, const ModelParams& params,
                                         const RadialRule& out_rule, const ApplyOptions& opts = boundary_options());

/// (H_nu h)(x) = integral J_nu(xy) h(y) sqrt(xy) dy. Inputs need a decay certificate;
/// a gaussian envelope of rate c comes out with rate 1/(4c).
std::vector<cplx> hankel_transform(const RadialInput& h, int nu, std::span<const double> out_x,
                                   const ApplyOptions& opts = boundary_options());
SampledProfile hankel_transform_on(const RadialInput& h, int nu, const RadialRule& out_rule,
                                   const ApplyOptions& opts = boundary_options());

/// Boundary kernel on C x C: zero when <zeta, zeta'> < 0.
cplx cone_inversion_kernel(const ConePoint& zeta, const ConePoint& zetap, const ModelParams& params);

/// Unitary change of variables L^2(r^{m-2} dr) -> L^2(dx), r = x^2/4:
/// (Phi f)(x) = (x/2)^{(2m-3)/2} f(x^2/4).
ProfileFunction phi_map(const RadialInput& f, const ModelParams& params);
/// Inverse map, f(r) = r^{-(2m-3)/4} h(2 sqrt r).
ProfileFunction phi_inverse(const RadialInput& h, const ModelParams& params);
/// Phi applied to samples: nodes move to x = 2 sqrt(r) and the weights follow.
SampledProfile phi_map_samples(const SampledProfile& f, const ModelParams& params);

/// Evaluate any radial input at one point (sampled profiles only at their nodes).
cplx evaluate_input(const RadialInput& f, double r);

}  // namespace minrep
