#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "minrep/profile.hpp"
#include "minrep/quasipoly.hpp"

namespace minrep {

using cplx = std::complex<double>;

struct ModelParams {
  int m;

  explicit ModelParams(int dim);
  /// (m-1)/2, the spectral shift of the radial generator.
  double half_shift() const { return 0.5 * (m - 1); }
  /// (m-3)/2, the Bessel order of the full kernel.
  double nu() const { return 0.5 * (m - 3); }
};

/// Complex time in {Re t >= 0} minus 2 pi i Z.
class ComplexTime {
 public:
  explicit ComplexTime(cplx t);
  ComplexTime(double re, double im) : ComplexTime(cplx(re, im)) {}
  /// t = pi i, the boundary point carrying the inversion.
  static ComplexTime pi_i();

  cplx value() const { return t_; }
  bool on_imaginary_axis() const { return t_.real() == 0.0; }
  /// sinh(x) / (cosh(x) - cos(y)) = Re coth(t/2).
  double alpha() const;
  /// cos(y/2) / cosh(x/2).
  double beta() const;
  cplx sinh_half() const;
  cplx coth_half() const;

 private:
  cplx t_;
};

struct SectorIndex {
  int l;
  int a;

  /// Throws ArgumentError unless 0 <= l <= a.
  void validate() const;
};

struct ApplyOptions {
  int quad_n = 200;
  /// Nystrom terms whose bound is below prune * (largest bound) are skipped.
  double prune = 1e-18;
};

/// f_{a,l}(r) = L_{a-l}^{m-2+2l}(4r) r^l e^{-2r}, exact coefficients.
QuasiPolynomial make_fal(int a, int l, const ModelParams& params);
/// Squared norm of f_{a,l} under r^{m-2} dr, closed form.
double fal_norm2(int a, int l, const ModelParams& params);
/// -(a + (m-1)/2) t, the log of the semigroup eigenvalue on W_{a,l}.
cplx semigroup_log_eigenvalue(int a, const ComplexTime& t, const ModelParams& params);

/// Radial kernel through the I~ form; never evaluates (rr')^{-(m-2)/2}.
cplx radial_kernel(double r, double rp, const ComplexTime& t, int l, const ModelParams& params);

/// C (rr')^l exp(-2 alpha (1-|beta|)(r+r')) / |sinh(t/2)|^{m-1+2l}.
double kernel_upper_bound(double r, double rp, const ComplexTime& t, int l, const ModelParams& params);
/// The constant C used by kernel_upper_bound.
double kernel_bound_constant(int l, const ModelParams& params);

/// Exponential rate of e^{tD} f when f decays like e^{-k r}.
/// Returns 0 when no decay can be certified.
double semigroup_output_rate(const ComplexTime& t, double k);

/// r -> integral K_l(r, r'; t) f(r') r'^{m-2} dr' on the output grid.
/// Sampled inputs on the imaginary axis must carry a decay certificate.
std::vector<cplx> apply_radial_semigroup(const RadialInput& f, const ComplexTime& t, int l, const ModelParams& params,
                                         std::span<const double> out_r, const ApplyOptions& opts = {});
/// Same, evaluated on the nodes of `out_rule` and packaged with a certificate
/// so it can be fed to the next operator.
SampledProfile apply_radial_semigroup_on(const RadialInput& f, const ComplexTime& t, int l, const ModelParams& params,
                                         const RadialRule& out_rule, const ApplyOptions& opts = {});

struct WeberResult {
  double lhs;
  double rhs;
};
/// Both sides of Weber's second exponential integral.
WeberResult weber_check(double rho, double alpha, double beta, int nu, int n_points = 200);

/// Kernel of the Bessel heat semigroup on (0, inf):
/// (xy)^{1/2} e^{-(x^2+y^2) coth(s)/2} I_nu(xy / sinh s) / sinh s.
cplx dirac_kernel(double x, double y, cplx s, int nu);
/// (T_s h)(x) = integral A(x, y; s) h(y) dy.
std::vector<cplx> dirac_operator(const RadialInput& h, cplx s, int nu, std::span<const double> out_x,
                                 const ApplyOptions& opts = {});
SampledProfile dirac_operator_on(const RadialInput& h, cplx s, int nu, const RadialRule& out_rule,
                                 const ApplyOptions& opts = {});

/// Geometric grid on [r_min, r_max].
std::vector<double> geometric_grid(double r_min, double r_max, int n);
/// r in [1e-3, 20], 256 points.
std::vector<double> default_radial_grid();

}  // namespace minrep
