#include "minrep/simd.hpp"

namespace minrep::simd::scalar {

std::complex<double> dot(const std::complex<double>* a, const std::complex<double>* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

std::complex<double> weighted_sum(const double* w, const std::complex<double>* v, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += w[i] * v[i].real();
    im += w[i] * v[i].imag();
  }
  return {re, im};
}

double weighted_norm2(const double* w, const std::complex<double>* v, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * std::norm(v[i]);
  return s;
}

}  // namespace minrep::simd::scalar
