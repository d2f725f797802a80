#pragma once

#include <complex>
#include <vector>

namespace minrep {

/// Radial profile sum_j c_j r^{min_degree + j} e^{-2r} with min_degree >= -1.
/// The class is closed under r*, d/dr and (when the result allows) 1/r, which
/// is all the sector differential operators need.
class QuasiPolynomial {
 public:
  QuasiPolynomial() = default;
  QuasiPolynomial(int min_degree, std::vector<std::complex<double>> coeffs);

  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of r^p e^{-2r} (zero outside the stored range).
  std::complex<double> coeff(int p) const;

  std::complex<double> operator()(double r) const;

  QuasiPolynomial mul_r() const;
  QuasiPolynomial div_r() const;
  QuasiPolynomial derivative() const;

  QuasiPolynomial operator+(const QuasiPolynomial& o) const;
  QuasiPolynomial operator-(const QuasiPolynomial& o) const;
  QuasiPolynomial operator*(std::complex<double> s) const;

  double max_abs_coeff() const;

 private:
  void normalize();

  int min_degree_ = 0;
  std::vector<std::complex<double>> coeffs_;
};

inline QuasiPolynomial operator*(std::complex<double> s, const QuasiPolynomial& q) { return q * s; }

/// max_p |a_p - b_p| / max(max|a_p|, max|b_p|); 0 when both vanish.
double coefficient_distance(const QuasiPolynomial& a, const QuasiPolynomial& b);

}  // namespace minrep
