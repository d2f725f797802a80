#include <immintrin.h>

#include "minrep/simd.hpp"

namespace minrep::simd::avx2 {

namespace {

inline const double* raw(const std::complex<double>* p) { return reinterpret_cast<const double*>(p); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// [w0, w0, w1, w1]
inline __m256d dup_pair(const double* w) {
  return _mm256_permute4x64_pd(_mm256_castpd128_pd256(_mm_loadu_pd(w)), 0x50);
}

}  // namespace

std::complex<double> dot(const std::complex<double>* a, const std::complex<double>* b, std::size_t n) {
  const double* pa = raw(a);
  const double* pb = raw(b);
  __m256d same = _mm256_setzero_pd();   // [ar*br, ai*bi, ...]
  __m256d cross = _mm256_setzero_pd();  // [ar*bi, ai*br, ...]
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    same = _mm256_fmadd_pd(va, vb, same);
    cross = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0x5), cross);
  }
  alignas(32) double s[4], c[4];
  _mm256_store_pd(s, same);
  _mm256_store_pd(c, cross);
  double re = (s[0] + s[2]) - (s[1] + s[3]);
  double im = (c[0] + c[2]) + (c[1] + c[3]);
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

std::complex<double> weighted_sum(const double* w, const std::complex<double>* v, std::size_t n) {
  const double* pv = raw(v);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = _mm256_fmadd_pd(dup_pair(w + i), _mm256_loadu_pd(pv + 2 * i), acc);
  alignas(32) double s[4];
  _mm256_store_pd(s, acc);
  double re = s[0] + s[2];
  double im = s[1] + s[3];
  for (; i < n; ++i) {
    re += w[i] * v[i].real();
    im += w[i] * v[i].imag();
  }
  return {re, im};
}

double weighted_norm2(const double* w, const std::complex<double>* v, std::size_t n) {
  const double* pv = raw(v);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d x = _mm256_loadu_pd(pv + 2 * i);
    acc = _mm256_fmadd_pd(dup_pair(w + i), _mm256_mul_pd(x, x), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += w[i] * std::norm(v[i]);
  return s;
}

}  // namespace minrep::simd::avx2
