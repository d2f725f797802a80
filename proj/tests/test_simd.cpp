#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include "minrep/errors.hpp"
#include "minrep/simd.hpp"

using namespace minrep;
using cplx = std::complex<double>;

namespace {

struct Data {
  std::vector<cplx> a, b;
  std::vector<double> w;
};

Data make_inputs(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Data d;
  for (std::size_t i = 0; i < n; ++i) {
    d.a.emplace_back(g(rng), g(rng));
    d.b.emplace_back(g(rng), g(rng));
    d.w.push_back(std::fabs(g(rng)));
  }
  return d;
}

}  // namespace

TEST_CASE("vector kernels agree with the scalar reference") {
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 64u, 1001u}) {
    const Data d = make_inputs(n, static_cast<unsigned>(n) + 5);
    const cplx dot_ref = simd::scalar::dot(d.a.data(), d.b.data(), n);
    const cplx sum_ref = simd::scalar::weighted_sum(d.w.data(), d.a.data(), n);
    const double norm_ref = simd::scalar::weighted_norm2(d.w.data(), d.a.data(), n);
    const double tol = 1e-13 * (1.0 + static_cast<double>(n));
#ifdef MINREP_HAVE_AVX2
    if (simd::isa_supported(simd::Isa::avx2)) {
      CHECK(std::abs(simd::avx2::dot(d.a.data(), d.b.data(), n) - dot_ref) <= tol);
      CHECK(std::abs(simd::avx2::weighted_sum(d.w.data(), d.a.data(), n) - sum_ref) <= tol);
      CHECK(std::fabs(simd::avx2::weighted_norm2(d.w.data(), d.a.data(), n) - norm_ref) <= tol);
    }
#endif
#ifdef MINREP_HAVE_NEON
    if (simd::isa_supported(simd::Isa::neon)) {
      CHECK(std::abs(simd::neon::dot(d.a.data(), d.b.data(), n) - dot_ref) <= tol);
      CHECK(std::abs(simd::neon::weighted_sum(d.w.data(), d.a.data(), n) - sum_ref) <= tol);
      CHECK(std::fabs(simd::neon::weighted_norm2(d.w.data(), d.a.data(), n) - norm_ref) <= tol);
    }
#endif
  }
}

TEST_CASE("dispatch follows set_isa") {
  const simd::Isa original = simd::active_isa();
  const Data d = make_inputs(33, 1);
  simd::set_isa(simd::Isa::scalar);
  CHECK(simd::active_isa() == simd::Isa::scalar);
  const cplx ref = simd::dot(d.a.data(), d.b.data(), 33);
  CHECK(ref == simd::scalar::dot(d.a.data(), d.b.data(), 33));
  for (simd::Isa isa : {simd::Isa::avx2, simd::Isa::neon}) {
    if (simd::isa_supported(isa)) {
      simd::set_isa(isa);
      CHECK(std::abs(simd::dot(d.a.data(), d.b.data(), 33) - ref) < 1e-12);
    } else {
      CHECK_THROWS_AS(simd::set_isa(isa), UnsupportedError);
    }
  }
  simd::set_isa(original);
  CHECK(std::string(simd::isa_name(simd::Isa::scalar)) == "scalar");
}
