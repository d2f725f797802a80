#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "minrep/errors.hpp"
#include "minrep/specfun.hpp"

namespace minrep {

namespace {

// Below this modulus the power series is used; its cancellation loss is at
// most about exp(|z| - |Re z|), i.e. three digits here.
constexpr double kSeriesRadius = 8.0;

void check_order(double nu) {
  if (!(nu >= -0.5)) throw DomainError("Bessel order must be >= -1/2, got " + std::to_string(nu));
}

// sum_k sign^k (z/2)^{2k} / (k! Gamma(nu+k+1))
cplx tilde_series(double nu, cplx z, double sign, const SpecFunConfig& cfg) {
  cfg.validate();
  const cplx w = sign * 0.25 * z * z;
  const double aw = std::abs(w);
  cplx term = rgamma(nu + 1.0);
  cplx sum = term;
  for (int k = 1; k < cfg.max_terms; ++k) {
    term *= w / (k * (nu + k));
    sum += term;
    const double at = std::abs(term);
    if (k * (nu + k) > aw && (at < cfg.series_tol * std::abs(sum) || at < 1e-300)) return sum;
  }
  throw OverflowError("Bessel series did not converge within " + std::to_string(cfg.max_terms) +
                      " terms (nu=" + std::to_string(nu) + ", |z|=" + std::to_string(std::abs(z)) +
                      ", partial sum=" + std::to_string(sum.real()) + "+" + std::to_string(sum.imag()) + "i)");
}

// Miller backward recurrence for I_{mu+k}(z), Re z >= 0, normalized by
//   sum_k (mu+k) Gamma(mu) (2mu)_k / k! I_{mu+k}(z) = e^z (z/2)^mu   (mu > 0)
//   I_0(z) + 2 sum_{k>=1} I_k(z) = e^z                              (mu = 0)
ScaledComplex miller_i_tilde(double nu, cplx z) {
  const double fl = std::floor(nu);
  const double mu = nu - fl;
  const int n = static_cast<int>(fl);
  const double az = std::abs(z);
  const int top = std::max(n, 0) +
                  static_cast<int>(std::ceil(std::max(14.0 * std::sqrt(az), az + 12.0 * std::cbrt(az)))) + 30;

  std::vector<double> d;
  if (mu > 0.0) {
    d.resize(static_cast<std::size_t>(top) + 1);
    d[0] = 1.0;
    for (int k = 1; k <= top; ++k) d[k] = d[k - 1] * (2.0 * mu + k - 1.0) / k;
  }
  auto weight = [&](int k) -> double {
    if (mu > 0.0) return (mu + k) * d[static_cast<std::size_t>(k)];
    return k == 0 ? 1.0 : 2.0;
  };

  const cplx inv_z = 1.0 / z;
  cplx p_next(0.0, 0.0);
  cplx p(1e-280, 0.0);
  cplx sum(0.0, 0.0);
  cplx p_n(0.0, 0.0);
  for (int k = top; k >= 0; --k) {
    sum += weight(k) * p;
    if (k == n) p_n = p;
    const cplx p_prev = 2.0 * (mu + k) * inv_z * p + p_next;
    if (k == 0 && n == -1) p_n = p_prev;
    p_next = p;
    p = p_prev;
    if (std::abs(p) > 1e250) {
      const double s = 1e-250;
      p *= s;
      p_next *= s;
      sum *= s;
      p_n *= s;
    }
  }
  cplx norm = sum;
  if (mu > 0.0) norm *= gamma_fn(mu);
  const cplx half = 0.5 * z;
  ScaledComplex out;
  out.log_scale = z.real() - n * std::log(std::abs(half));
  out.mantissa = std::polar(1.0, z.imag() - n * std::arg(half)) * (p_n / norm);
  return out;
}

}  // namespace

cplx bessel_i_tilde_series(double nu, cplx z, const SpecFunConfig& cfg) {
  check_order(nu);
  return tilde_series(nu, z, 1.0, cfg);
}

cplx bessel_j_tilde_series(double nu, cplx z, const SpecFunConfig& cfg) {
  check_order(nu);
  return tilde_series(nu, z, -1.0, cfg);
}

ScaledComplex bessel_i_tilde_scaled(double nu, cplx z, const SpecFunConfig& cfg) {
  check_order(nu);
  if (std::abs(z) <= kSeriesRadius) return {tilde_series(nu, z, 1.0, cfg), 0.0};
  // I~ is even in z; fold into the right half plane.
  if (z.real() < 0.0) z = -z;
  return miller_i_tilde(nu, z);
}

ScaledComplex bessel_j_tilde_scaled(double nu, cplx z, const SpecFunConfig& cfg) {
  check_order(nu);
  if (std::abs(z) <= kSeriesRadius) return {tilde_series(nu, z, -1.0, cfg), 0.0};
  return bessel_i_tilde_scaled(nu, cplx(-z.imag(), z.real()), cfg);
}

cplx bessel_i_tilde(double nu, cplx z, const SpecFunConfig& cfg) {
  return bessel_i_tilde_scaled(nu, z, cfg).value();
}

cplx bessel_j_tilde(double nu, cplx z, const SpecFunConfig& cfg) {
  return bessel_j_tilde_scaled(nu, z, cfg).value();
}

namespace {

cplx attach_power(double nu, cplx z, const ScaledComplex& t) {
  if (z == cplx(0.0, 0.0)) {
    if (nu == 0.0) return t.mantissa;
    if (nu > 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  const cplx lg = nu * std::log(0.5 * z);
  return t.mantissa * std::exp(cplx(lg.real() + t.log_scale, lg.imag()));
}

}  // namespace

cplx bessel_i(double nu, cplx z, const SpecFunConfig& cfg) {
  return attach_power(nu, z, bessel_i_tilde_scaled(nu, z, cfg));
}

cplx bessel_j(double nu, cplx z, const SpecFunConfig& cfg) {
  return attach_power(nu, z, bessel_j_tilde_scaled(nu, z, cfg));
}

}  // namespace minrep
