#pragma once

#include <complex>
#include <cstddef>

// Reduction kernels used by every quadrature sum and Nystrom row product.
// A scalar reference and vector variants are compiled side by side; the
// active one is picked once at startup from the CPU features, or forced
// through MINREP_SIMD=scalar|avx2|neon.
namespace minrep::simd {

enum class Isa { scalar, avx2, neon };

Isa active_isa();
bool isa_supported(Isa isa);
/// Switch implementation (tests, benchmarks). Throws UnsupportedError.
void set_isa(Isa isa);
const char* isa_name(Isa isa);

/// sum_i a_i b_i (no conjugation).
std::complex<double> dot(const std::complex<double>* a, const std::complex<double>* b, std::size_t n);
/// sum_i w_i v_i.
std::complex<double> weighted_sum(const double* w, const std::complex<double>* v, std::size_t n);
/// sum_i w_i |v_i|^2.
double weighted_norm2(const double* w, const std::complex<double>* v, std::size_t n);

namespace scalar {
std::complex<double> dot(const std::complex<double>* a, const std::complex<double>* b, std::size_t n);
std::complex<double> weighted_sum(const double* w, const std::complex<double>* v, std::size_t n);
double weighted_norm2(const double* w, const std::complex<double>* v, std::size_t n);
}  // namespace scalar

namespace avx2 {
std::complex<double> dot(const std::complex<double>* a, const std::complex<double>* b, std::size_t n);
std::complex<double> weighted_sum(const double* w, const std::complex<double>* v, std::size_t n);
double weighted_norm2(const double* w, const std::complex<double>* v, std::size_t n);
}  // namespace avx2

namespace neon {
std::complex<double> dot(const std::complex<double>* a, const std::complex<double>* b, std::size_t n);
std::complex<double> weighted_sum(const double* w, const std::complex<double>* v, std::size_t n);
double weighted_norm2(const double* w, const std::complex<double>* v, std::size_t n);
}  // namespace neon

}  // namespace minrep::simd
