#include <arm_neon.h>

#include "minrep/simd.hpp"

namespace minrep::simd::neon {

namespace {
inline const double* raw(const std::complex<double>* p) { return reinterpret_cast<const double*>(p); }
}  // namespace

std::complex<double> dot(const std::complex<double>* a, const std::complex<double>* b, std::size_t n) {
  const double* pa = raw(a);
  const double* pb = raw(b);
  float64x2_t same = vdupq_n_f64(0.0);
  float64x2_t cross = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t va = vld1q_f64(pa + 2 * i);
    const float64x2_t vb = vld1q_f64(pb + 2 * i);
    same = vfmaq_f64(same, va, vb);
    cross = vfmaq_f64(cross, va, vextq_f64(vb, vb, 1));
  }
  return {vgetq_lane_f64(same, 0) - vgetq_lane_f64(same, 1), vgetq_lane_f64(cross, 0) + vgetq_lane_f64(cross, 1)};
}

std::complex<double> weighted_sum(const double* w, const std::complex<double>* v, std::size_t n) {
  const double* pv = raw(v);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) acc = vfmaq_n_f64(acc, vld1q_f64(pv + 2 * i), w[i]);
  return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

double weighted_norm2(const double* w, const std::complex<double>* v, std::size_t n) {
  const double* pv = raw(v);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t x = vld1q_f64(pv + 2 * i);
    acc = vfmaq_n_f64(acc, vmulq_f64(x, x), w[i]);
  }
  return vaddvq_f64(acc);
}

}  // namespace minrep::simd::neon
