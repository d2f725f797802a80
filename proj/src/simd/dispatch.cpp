#include <atomic>
#include <cstdlib>
#include <string>

#include "minrep/errors.hpp"
#include "minrep/simd.hpp"

namespace minrep::simd {

namespace {

struct Table {
  Isa isa;
  std::complex<double> (*dot)(const std::complex<double>*, const std::complex<double>*, std::size_t);
  std::complex<double> (*weighted_sum)(const double*, const std::complex<double>*, std::size_t);
  double (*weighted_norm2)(const double*, const std::complex<double>*, std::size_t);
};

constexpr Table kScalar{Isa::scalar, scalar::dot, scalar::weighted_sum, scalar::weighted_norm2};
#if defined(MINREP_HAVE_AVX2)
constexpr Table kAvx2{Isa::avx2, avx2::dot, avx2::weighted_sum, avx2::weighted_norm2};
#endif
#if defined(MINREP_HAVE_NEON)
constexpr Table kNeon{Isa::neon, neon::dot, neon::weighted_sum, neon::weighted_norm2};
#endif

const Table* table_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &kScalar;
    case Isa::avx2:
#if defined(MINREP_HAVE_AVX2)
      if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &kAvx2;
#endif
      return nullptr;
    case Isa::neon:
#if defined(MINREP_HAVE_NEON)
      return &kNeon;
#endif
      return nullptr;
  }
  return nullptr;
}

const Table* initial_table() {
  if (const char* env = std::getenv("MINREP_SIMD")) {
    const std::string s(env);
    if (s == "scalar") return &kScalar;
    if (s == "avx2" && table_for(Isa::avx2)) return table_for(Isa::avx2);
    if (s == "neon" && table_for(Isa::neon)) return table_for(Isa::neon);
  }
  if (const Table* t = table_for(Isa::avx2)) return t;
  if (const Table* t = table_for(Isa::neon)) return t;
  return &kScalar;
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> t{initial_table()};
  return t;
}

}  // namespace

Isa active_isa() { return current().load()->isa; }

bool isa_supported(Isa isa) { return table_for(isa) != nullptr; }

void set_isa(Isa isa) {
  const Table* t = table_for(isa);
  if (!t) throw UnsupportedError(std::string("SIMD variant not available: ") + isa_name(isa));
  current().store(t);
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "?";
}

std::complex<double> dot(const std::complex<double>* a, const std::complex<double>* b, std::size_t n) {
  return current().load()->dot(a, b, n);
}

std::complex<double> weighted_sum(const double* w, const std::complex<double>* v, std::size_t n) {
  return current().load()->weighted_sum(w, v, n);
}

double weighted_norm2(const double* w, const std::complex<double>* v, std::size_t n) {
  return current().load()->weighted_norm2(w, v, n);
}

}  // namespace minrep::simd
