#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "minrep/points.hpp"
#include "minrep/radial.hpp"

namespace minrep {

/// 2 sqrt(2(|x||x'| + <x, x'>)).
double psi(const SpatialPoint& x, const SpatialPoint& xp);
/// 4 sqrt(|x||x'|) cos(theta/2), theta the angle between x and x'.
double psi_angle_form(const SpatialPoint& x, const SpatialPoint& xp);

/// Full kernel as a function of |x|, |x'| and s = <omega, omega'>.
cplx full_kernel_polar(double r, double rp, double s, const ComplexTime& t, const ModelParams& params);
/// 2 e^{-2(|x|+|x'|) coth(t/2)} I~_{(m-3)/2}(psi / sinh(t/2)) / (pi^{(m-1)/2} sinh^{m-1}(t/2)).
cplx full_kernel(const SpatialPoint& x, const SpatialPoint& xp, const ComplexTime& t, const ModelParams& params);
/// The same kernel written on the forward cone.
cplx cone_kernel(const ConePoint& zeta, const ConePoint& zetap, const ComplexTime& t, const ModelParams& params);

/// Zonal profile h on [-1, 1].
using ZonalProfile = std::function<cplx(double)>;

/// vol(S^{n}) = 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double sphere_volume(int n);

/// Eigenvalue of the zonal operator with profile h on degree-l harmonics of S^{m-1}.
/// Needs m >= 3.
cplx clm_spectrum(const ZonalProfile& h, int l, const ModelParams& params, int n_sphere = 64);

/// Half of the sphere integral of K(r omega, r' omega'; t) against the degree-l
/// zonal harmonic, divided by its value at the pole. Needs m >= 3.
cplx angular_reduce(double r, double rp, const ComplexTime& t, int l, const ModelParams& params, int n_sphere = 64);

/// pi^{-m/2} sum_{l <= l_max} ((m-2)/2 + l) K_l(|x|, |x'|; t) C~_l^{(m-2)/2}(<omega, omega'>).
cplx expansion_partial_sum(const SpatialPoint& x, const SpatialPoint& xp, const ComplexTime& t, int l_max,
                           const ModelParams& params);

/// Gegenbauer coefficients of f in the normalized family C~_l^nu, l <= l_max, nu > 0.
std::vector<cplx> zonal_expand(const ZonalProfile& f, double nu, int l_max, int n_nodes = 0);
/// C~_l^nu(x) for l = 0..l_max, nu > 0.
std::vector<double> gegenbauer_tilde_table(int l_max, double nu, double x);
/// sum_l coeffs[l] C~_l^nu(x).
cplx zonal_sum(const std::vector<cplx>& coeffs, double nu, double x);
/// Coefficients from samples on the nodes of gauss_jacobi_rule(n, nu).
std::vector<cplx> zonal_project(const std::vector<cplx>& samples, const QuadratureRule& rule, double nu, int l_max);

/// Bessel expansion at the boundary time: both sides as (lhs, truncated rhs),
///   J~_{nu-1/2}(sqrt(z) cos(theta/2))  and
///   2^{4 nu} / sqrt(pi) sum_{l <= l_max} (nu+l) (-1)^l J_{2nu+2l}(sqrt z) / z^nu C~_l^nu(cos theta).
std::pair<cplx, cplx> bessel_expansion_sides(double nu, double z, double theta, int l_max);

}  // namespace minrep
