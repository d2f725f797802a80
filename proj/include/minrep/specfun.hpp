#pragma once

#include <complex>
#include <vector>

namespace minrep {

using cplx = std::complex<double>;

struct SpecFunConfig {
  double series_tol = 1e-17;
  int max_terms = 600;

  /// Throws ArgumentError unless 0 < series_tol < 1e-6 and max_terms >= 64.
  void validate() const;
};

/// A complex number stored as mantissa * exp(log_scale), for values whose
/// magnitude would overflow or underflow a double.
struct ScaledComplex {
  cplx mantissa{0.0, 0.0};
  double log_scale = 0.0;

  cplx value() const;
};

/// Real polynomial, lowest degree first.
struct PolynomialCoeffs {
  std::vector<double> coeffs;

  double evaluate(double x) const;
  PolynomialCoeffs derivative() const;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Gamma family (Lanczos, g = 7, with reflection below 1/2).
double gamma_fn(double x);
/// 1/Gamma(x); exactly 0 at the poles x = 0, -1, -2, ...
double rgamma(double x);
/// log Gamma(x) for x > 0.
double log_gamma(double x);

// Bessel functions with the z^nu factor removed; both are entire in z.
//   J~_nu(z) = sum (-1)^k (z/2)^{2k} / (k! Gamma(nu+k+1))
//   I~_nu(z) = sum        (z/2)^{2k} / (k! Gamma(nu+k+1))
// Small |z| uses the power series directly. Larger |z| switches to Miller's
// backward recurrence, which does not lose digits to cancellation.
cplx bessel_i_tilde(double nu, cplx z, const SpecFunConfig& cfg = {});
cplx bessel_j_tilde(double nu, cplx z, const SpecFunConfig& cfg = {});

/// I~_nu(z) as mantissa * exp(log_scale); log_scale carries |Re z|.
ScaledComplex bessel_i_tilde_scaled(double nu, cplx z, const SpecFunConfig& cfg = {});
/// J~_nu(z) = I~_nu(i z) in scaled form.
ScaledComplex bessel_j_tilde_scaled(double nu, cplx z, const SpecFunConfig& cfg = {});

/// Plain power series, no switching. Throws OverflowError if max_terms is hit.
cplx bessel_i_tilde_series(double nu, cplx z, const SpecFunConfig& cfg = {});
cplx bessel_j_tilde_series(double nu, cplx z, const SpecFunConfig& cfg = {});

/// I_nu(z) = (z/2)^nu I~_nu(z), principal branch.
cplx bessel_i(double nu, cplx z, const SpecFunConfig& cfg = {});
/// J_nu(z) = (z/2)^nu J~_nu(z), principal branch.
cplx bessel_j(double nu, cplx z, const SpecFunConfig& cfg = {});

/// Generalized Laguerre L_n^alpha(x) by the three-term recurrence.
double laguerre(int n, double alpha, double x);
/// Coefficients of L_n^alpha(x) in powers of x.
PolynomialCoeffs laguerre_coeffs(int n, double alpha);

/// Classical Gegenbauer C_l^nu(x), nu > 0.
double gegenbauer(int l, double nu, double x);
/// Normalized Gegenbauer Gamma(nu) C_l^nu(x); nu = 0 uses 2 cos(l theta)/l.
/// (l, nu) = (0, 0) is rejected with DomainError.
double gegenbauer_tilde(int l, double nu, double x);
/// Closed form of gegenbauer_tilde(l, nu, 1).
double gegenbauer_tilde_at_one(int l, double nu);
/// Squared norm of gegenbauer_tilde under (1-x^2)^{nu-1/2} dx.
double gegenbauer_tilde_norm2(int l, double nu);

/// Physicists' Hermite H_n(x) through the Laguerre reductions.
double hermite_via_laguerre(int n, double x);

}  // namespace minrep
