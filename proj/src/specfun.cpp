#include "minrep/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "minrep/errors.hpp"

namespace minrep {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Lanczos sum for x >= 1/2, after the customary shift x -> x - 1.
double lanczos_sum(double xm1) {
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (xm1 + i);
  return a;
}

}  // namespace

void SpecFunConfig::validate() const {
  if (!(series_tol > 0.0 && series_tol < 1e-6))
    throw ArgumentError("series_tol must lie in (0, 1e-6)");
  if (max_terms < 64) throw ArgumentError("max_terms must be at least 64");
}

cplx ScaledComplex::value() const {
  if (mantissa == cplx(0.0, 0.0)) return mantissa;
  return mantissa * std::exp(log_scale);
}

double PolynomialCoeffs::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolynomialCoeffs PolynomialCoeffs::derivative() const {
  PolynomialCoeffs d;
  for (std::size_t k = 1; k < coeffs.size(); ++k) d.coeffs.push_back(coeffs[k] * static_cast<double>(k));
  if (d.coeffs.empty()) d.coeffs.push_back(0.0);
  return d;
}

double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) return std::numeric_limits<double>::infinity();
  if (x == std::floor(x) && x <= 30.0) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
    return f;
  }
  if (x < 0.5) {
    // reflection
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
  }
  if (x > 171.7) return std::numeric_limits<double>::infinity();
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  const double half_pow = std::pow(t, 0.5 * (xm1 + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_pow * (half_pow * std::exp(-t)) * lanczos_sum(xm1);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 171.7) return 0.0;
  return 1.0 / gamma_fn(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  if (x < 15.0) return std::log(gamma_fn(x));
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(xm1));
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw ArgumentError("laguerre: n must be nonnegative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

PolynomialCoeffs laguerre_coeffs(int n, double alpha) {
  if (n < 0) throw ArgumentError("laguerre_coeffs: n must be nonnegative");
  PolynomialCoeffs p;
  p.coeffs.resize(static_cast<std::size_t>(n) + 1);
  double c = 1.0;
  for (int j = 1; j <= n; ++j) c *= (alpha + j) / j;
  p.coeffs[0] = c;
  for (int k = 1; k <= n; ++k) {
    c *= -static_cast<double>(n - k + 1) / ((alpha + k) * k);
    p.coeffs[static_cast<std::size_t>(k)] = c;
  }
  return p;
}

double gegenbauer(int l, double nu, double x) {
  if (l < 0) throw ArgumentError("gegenbauer: l must be nonnegative");
  if (l == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * nu * x;
  for (int k = 1; k < l; ++k) {
    const double next = (2.0 * (k + nu) * x * cur - (k + 2.0 * nu - 1.0) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double gegenbauer_tilde(int l, double nu, double x) {
  if (l < 0) throw ArgumentError("gegenbauer_tilde: l must be nonnegative");
  if (nu < 0.0) throw DomainError("gegenbauer_tilde: nu must be nonnegative");
  if (nu == 0.0) {
    if (l == 0) throw DomainError("gegenbauer_tilde: (l, nu) = (0, 0) has no normalization");
    double prev = 1.0;
    double cur = x;
    for (int k = 1; k < l; ++k) {
      const double next = 2.0 * x * cur - prev;
      prev = cur;
      cur = next;
    }
    return 2.0 * cur / l;
  }
  const double c0 = gamma_fn(nu);
  if (l == 0) return c0;
  double prev = c0;
  double cur = 2.0 * gamma_fn(nu + 1.0) * x;
  for (int k = 1; k < l; ++k) {
    const double next = (2.0 * (k + nu) * x * cur - (k + 2.0 * nu - 1.0) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double gegenbauer_tilde_at_one(int l, double nu) {
  if (nu == 0.0) {
    if (l == 0) throw DomainError("gegenbauer_tilde: (l, nu) = (0, 0) has no normalization");
    return 2.0 / l;
  }
  const double lg = log_gamma(2.0 * nu + l) - log_gamma(l + 1.0) - log_gamma(nu + 0.5) -
                    (2.0 * nu - 1.0) * std::numbers::ln2;
  return std::sqrt(std::numbers::pi) * std::exp(lg);
}

double gegenbauer_tilde_norm2(int l, double nu) {
  if (nu <= 0.0) throw DomainError("gegenbauer_tilde_norm2: nu must be positive");
  const double lg = log_gamma(2.0 * nu + l) - log_gamma(l + 1.0) + (1.0 - 2.0 * nu) * std::numbers::ln2;
  return std::numbers::pi * std::exp(lg) / (l + nu);
}

double hermite_via_laguerre(int n, double x) {
  if (n < 0) throw ArgumentError("hermite_via_laguerre: n must be nonnegative");
  const int k = n / 2;
  double scale = (k % 2 == 0) ? 1.0 : -1.0;
  for (int j = 1; j <= k; ++j) scale *= 4.0 * j;
  if (n % 2 == 0) return scale * laguerre(k, -0.5, x * x);
  return 2.0 * scale * x * laguerre(k, 0.5, x * x);
}

}  // namespace minrep
