#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "minrep/quadrature.hpp"
#include "minrep/quasipoly.hpp"

namespace minrep {

enum class DecayKind { exponential, gaussian };

/// Asserted envelope poly(r) * exp(-rate r) or poly(r) * exp(-rate r^2).
struct DecayCertificate {
  DecayKind kind = DecayKind::exponential;
  double rate = 2.0;
};

/// Values on the nodes of a radial rule.
struct SampledProfile {
  RadialRule rule;
  std::vector<std::complex<double>> values;
  std::optional<DecayCertificate> decay;
};

/// Callable profile with a certified envelope.
struct ProfileFunction {
  std::function<std::complex<double>(double)> f;
  DecayCertificate decay;
};

using RadialInput = std::variant<QuasiPolynomial, SampledProfile, ProfileFunction>;

/// Input nodes r_j with integration weights w_j and values f_j.
struct Discretized {
  std::vector<double> r;
  std::vector<double> w;
  std::vector<std::complex<double>> f;
  std::optional<DecayCertificate> decay;
};

/// Rule that resolves a profile with the given envelope down to about e^{-45}:
/// exponential -> sqrt-Legendre on [0, 45/rate] (or linear when linear_map),
/// gaussian -> Legendre on [0, sqrt(45/rate)].
RadialRule truncation_rule(const DecayCertificate& decay, int n, bool linear_map = false);

/// True when the envelope is below e^{-40} beyond r_last.
bool covers_tail(const DecayCertificate& decay, double r_last);

/// Nodes for an input. Exponential envelopes of callables and quasi-polynomials
/// go on a Laguerre rule damped by `damping_scale * rate`; gaussian envelopes on
/// the truncation rule; sampled profiles keep their own nodes.
Discretized discretize(const RadialInput& in, double damping_scale, int n, bool linear_map = false);

/// Certificate carried by an input (quasi-polynomials: exponential rate 2).
std::optional<DecayCertificate> decay_of(const RadialInput& in);

/// Evaluate a callable on the nodes of a rule.
SampledProfile sample_on(const std::function<std::complex<double>(double)>& f, const RadialRule& rule,
                         std::optional<DecayCertificate> decay);

/// Variable the local interpolant is polynomial in. sqrt_r suits the
/// square-root clustered rules; r suits grids uniform in r.
enum class InterpolationVariable { sqrt_r, r };

/// Local Lagrange interpolation over `width` consecutive nodes.
struct InterpolationStencil {
  static constexpr std::size_t width = 8;
  std::size_t lo = 0;
  double basis[width];
};
/// Fills the stencil for r; false when r lies beyond the last node.
bool interpolation_stencil(const std::vector<double>& nodes, double r, InterpolationStencil& st,
                          InterpolationVariable var = InterpolationVariable::sqrt_r);

/// Interpolated value at r. Beyond the last node the profile is taken as zero
/// when its certificate covers the tail or its last sample is below 1e-12 of
/// its peak; otherwise ExtrapolationError.
std::complex<double> interpolate_profile(const SampledProfile& p, double r,
                                         InterpolationVariable var = InterpolationVariable::sqrt_r);

using KernelFn = std::function<std::complex<double>(double out, double in)>;
using BoundFn = std::function<double(double out, double in)>;

/// out_i = sum_j K(out_i, r_j) * measure(r_j) * w_j * f_j. When `bound` is
/// given, terms with |measure w f| * bound below prune * max are skipped.
std::vector<std::complex<double>> nystrom_apply(const KernelFn& kernel, const BoundFn& bound, const Discretized& in,
                                                const std::function<double(double)>& measure,
                                                std::span<const double> out, double prune);

/// sqrt(sum_j w_j r_j^power |v_j|^2).
double profile_norm(const SampledProfile& p, double power = 0.0);
/// Norm of (a - b) relative to the norm of b, on a shared rule.
double relative_profile_distance(const SampledProfile& a, const SampledProfile& b, double power = 0.0);
double relative_distance(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b,
                         const RadialRule& rule, double power = 0.0);

}  // namespace minrep
