#include "minrep/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "minrep/errors.hpp"
#include "minrep/quadrature.hpp"
#include "minrep/specfun.hpp"

namespace minrep {

// ---- points -------------------------------------------------------------------

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ArgumentError("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double SpatialPoint::radius() const { return std::sqrt(dot(coords, coords)); }

std::vector<double> SpatialPoint::direction() const {
  const double r = radius();
  if (r == 0.0) throw DomainError("direction of the origin is undefined");
  std::vector<double> w(coords);
  for (auto& c : w) c /= r;
  return w;
}

ConePoint ConePoint::from_spatial(const SpatialPoint& x, int sheet) {
  if (sheet != 1 && sheet != -1) throw ArgumentError("cone sheet must be +1 or -1");
  ConePoint z;
  z.coords = x.coords;
  z.coords.push_back(sheet * x.radius());
  return z;
}

double ConePoint::quadratic_form() const {
  const int m = dim();
  double q = 0.0;
  for (int i = 0; i < m; ++i) q += coords[i] * coords[i];
  return q - coords[m] * coords[m];
}

double ConePoint::norm() const { return std::sqrt(dot(coords, coords)); }

int ConePoint::sheet() const { return coords.back() >= 0.0 ? 1 : -1; }

SpatialPoint ConePoint::project() const { return {std::vector<double>(coords.begin(), coords.end() - 1)}; }

void ConePoint::validate(double tol) const {
  if (coords.size() < 2) throw DomainError("cone point needs at least two coordinates");
  const double n2 = dot(coords, coords);
  if (n2 == 0.0) throw DomainError("cone point must be nonzero");
  if (std::fabs(quadratic_form()) > tol * n2) throw DomainError("point is off the light cone");
}

// ---- kernels ------------------------------------------------------------------

namespace {

void require_angular(const ModelParams& p) {
  if (p.m < 3) throw UnsupportedError("angular operations need m >= 3 (got m=" + std::to_string(p.m) + ")");
}

void require_same_dim(const SpatialPoint& x, const SpatialPoint& xp, const ModelParams& p) {
  if (x.dim() != p.m || xp.dim() != p.m) throw ArgumentError("point dimension does not match m");
}

// cos of the angle between x and x'; 1 when either point is the origin.
double cos_angle(const SpatialPoint& x, const SpatialPoint& xp) {
  const double rr = x.radius() * xp.radius();
  if (rr == 0.0) return 1.0;
  return std::clamp(dot(x.coords, xp.coords) / rr, -1.0, 1.0);
}

}  // namespace

double psi(const SpatialPoint& x, const SpatialPoint& xp) {
  const double v = x.radius() * xp.radius() + dot(x.coords, xp.coords);
  return 2.0 * std::sqrt(2.0 * std::max(v, 0.0));
}

double psi_angle_form(const SpatialPoint& x, const SpatialPoint& xp) {
  const double theta = std::acos(cos_angle(x, xp));
  return 4.0 * std::sqrt(x.radius() * xp.radius()) * std::cos(0.5 * theta);
}

cplx full_kernel_polar(double r, double rp, double s, const ComplexTime& t, const ModelParams& params) {
  const int m = params.m;
  const cplx sh = t.sinh_half();
  const double psi_val = 2.0 * std::sqrt(2.0 * r * rp * std::max(1.0 + s, 0.0));
  const ScaledComplex it = bessel_i_tilde_scaled(params.nu(), psi_val / sh);
  const cplx log_mag = std::numbers::ln2 - 2.0 * (r + rp) * t.coth_half() -
                       0.5 * (m - 1.0) * std::log(std::numbers::pi) - (m - 1.0) * std::log(sh) + it.log_scale;
  return it.mantissa * std::exp(log_mag);
}

cplx full_kernel(const SpatialPoint& x, const SpatialPoint& xp, const ComplexTime& t, const ModelParams& params) {
  require_same_dim(x, xp, params);
  return full_kernel_polar(x.radius(), xp.radius(), cos_angle(x, xp), t, params);
}

cplx cone_kernel(const ConePoint& zeta, const ConePoint& zetap, const ComplexTime& t, const ModelParams& params) {
  zeta.validate();
  zetap.validate();
  if (zeta.dim() != params.m || zetap.dim() != params.m) throw ArgumentError("cone point dimension does not match m");
  if (zeta.sheet() < 0 || zetap.sheet() < 0) throw DomainError("cone_kernel is defined on the forward cone");
  const int m = params.m;
  const cplx sh = t.sinh_half();
  const double ip = std::max(dot(zeta.coords, zetap.coords), 0.0);
  const ScaledComplex it = bessel_i_tilde_scaled(params.nu(), 2.0 * std::sqrt(2.0 * ip) / sh);
  const cplx log_mag = std::numbers::ln2 - std::numbers::sqrt2 * (zeta.norm() + zetap.norm()) * t.coth_half() -
                       0.5 * (m - 1.0) * std::log(std::numbers::pi) - (m - 1.0) * std::log(sh) + it.log_scale;
  return it.mantissa * std::exp(log_mag);
}

double sphere_volume(int n) {
  if (n < 0) throw ArgumentError("sphere_volume: dimension must be >= 0");
  const double h = 0.5 * (n + 1.0);
  return 2.0 * std::exp(h * std::log(std::numbers::pi) - log_gamma(h));
}

std::vector<double> gegenbauer_tilde_table(int l_max, double nu, double x) {
  if (!(nu > 0.0)) throw DomainError("gegenbauer_tilde_table: nu must be positive");
  std::vector<double> c(static_cast<std::size_t>(l_max + 1));
  const double g = gamma_fn(nu);
  double prev = 1.0;
  double cur = 2.0 * nu * x;
  c[0] = g;
  if (l_max >= 1) c[1] = g * cur;
  for (int k = 1; k < l_max; ++k) {
    const double next = (2.0 * (k + nu) * x * cur - (k + 2.0 * nu - 1.0) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
    c[k + 1] = g * cur;
  }
  return c;
}

cplx clm_spectrum(const ZonalProfile& h, int l, const ModelParams& params, int n_sphere) {
  require_angular(params);
  if (l < 0) throw ArgumentError("clm_spectrum: l must be >= 0");
  const int m = params.m;
  const double lam = 0.5 * (m - 2.0);
  const QuadratureRule rule = gauss_jacobi_rule(n_sphere, lam);
  cplx integral = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j)
    integral += rule.weights[j] * h(rule.nodes[j]) * gegenbauer_tilde(l, lam, rule.nodes[j]);
  const double pref = std::exp((m - 2.0) * std::numbers::ln2 + lam * std::log(std::numbers::pi) +
                               log_gamma(l + 1.0) - log_gamma(m - 2.0 + l));
  return pref * integral;
}

cplx angular_reduce(double r, double rp, const ComplexTime& t, int l, const ModelParams& params, int n_sphere) {
  require_angular(params);
  if (l < 0) throw ArgumentError("angular_reduce: l must be >= 0");
  const int m = params.m;
  const double lam = 0.5 * (m - 2.0);
  const QuadratureRule rule = gauss_jacobi_rule(n_sphere, lam);
  cplx integral = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j)
    integral += rule.weights[j] * full_kernel_polar(r, rp, rule.nodes[j], t, params) *
                gegenbauer_tilde(l, lam, rule.nodes[j]);
  return 0.5 * sphere_volume(m - 2) * integral / gegenbauer_tilde_at_one(l, lam);
}

cplx expansion_partial_sum(const SpatialPoint& x, const SpatialPoint& xp, const ComplexTime& t, int l_max,
                           const ModelParams& params) {
  require_angular(params);
  require_same_dim(x, xp, params);
  if (l_max < 0) throw ArgumentError("expansion_partial_sum: l_max must be >= 0");
  const double lam = 0.5 * (params.m - 2.0);
  const double r = x.radius();
  const double rp = xp.radius();
  const std::vector<double> c = gegenbauer_tilde_table(l_max, lam, cos_angle(x, xp));
  cplx sum = 0.0;
  for (int l = 0; l <= l_max; ++l) sum += (lam + l) * radial_kernel(r, rp, t, l, params) * c[l];
  return sum * std::pow(std::numbers::pi, -0.5 * params.m);
}

std::vector<cplx> zonal_project(const std::vector<cplx>& samples, const QuadratureRule& rule, double nu, int l_max) {
  if (samples.size() != rule.size()) throw ArgumentError("zonal_project: sample count does not match the rule");
  if (l_max < 0) throw ArgumentError("zonal_project: l_max must be >= 0");
  std::vector<cplx> coeffs(static_cast<std::size_t>(l_max + 1), 0.0);
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const std::vector<double> c = gegenbauer_tilde_table(l_max, nu, rule.nodes[j]);
    const cplx wv = rule.weights[j] * samples[j];
    for (int l = 0; l <= l_max; ++l) coeffs[l] += wv * c[l];
  }
  for (int l = 0; l <= l_max; ++l) coeffs[l] /= gegenbauer_tilde_norm2(l, nu);
  return coeffs;
}

std::vector<cplx> zonal_expand(const ZonalProfile& f, double nu, int l_max, int n_nodes) {
  if (!(nu > 0.0)) throw DomainError("zonal_expand: nu must be positive");
  if (n_nodes <= 0) n_nodes = std::max(64, l_max + 32);
  const QuadratureRule rule = gauss_jacobi_rule(n_nodes, nu);
  std::vector<cplx> samples(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) samples[j] = f(rule.nodes[j]);
  return zonal_project(samples, rule, nu, l_max);
}

cplx zonal_sum(const std::vector<cplx>& coeffs, double nu, double x) {
  if (coeffs.empty()) return 0.0;
  const std::vector<double> c = gegenbauer_tilde_table(static_cast<int>(coeffs.size()) - 1, nu, x);
  cplx s = 0.0;
  for (std::size_t l = 0; l < coeffs.size(); ++l) s += coeffs[l] * c[l];
  return s;
}

std::pair<cplx, cplx> bessel_expansion_sides(double nu, double z, double theta, int l_max) {
  if (!(z > 0.0)) throw DomainError("bessel expansion needs z > 0");
  if (!(nu > 0.0)) throw DomainError("bessel expansion needs nu > 0");
  const double root = std::sqrt(z);
  const cplx lhs = bessel_j_tilde(nu - 0.5, root * std::cos(0.5 * theta));
  const std::vector<double> c = gegenbauer_tilde_table(l_max, nu, std::cos(theta));
  cplx sum = 0.0;
  for (int l = 0; l <= l_max; ++l) {
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    sum += (nu + l) * sign * bessel_j(2.0 * nu + 2.0 * l, root) * c[l];
  }
  const cplx rhs = std::exp(4.0 * nu * std::numbers::ln2 - nu * std::log(z)) / std::sqrt(std::numbers::pi) * sum;
  return {lhs, rhs};
}

}  // namespace minrep
