#include "qrep/simd/fp_kernels.hpp"

#include <atomic>

namespace qrep::simd {

std::string to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "?";
}

void axpy_mod_scalar(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t c,
                     std::size_t n, std::uint64_t p) {
  if (c == 0) return;
  for (std::size_t k = 0; k < n; ++k) {
    const unsigned __int128 t = static_cast<unsigned __int128>(c) * src[k] + dst[k];
    dst[k] = static_cast<std::uint64_t>(t % p);
  }
}

void scale_mod_scalar(std::uint64_t* dst, std::uint64_t c, std::size_t n, std::uint64_t p) {
  for (std::size_t k = 0; k < n; ++k)
    dst[k] = static_cast<std::uint64_t>(static_cast<unsigned __int128>(c) * dst[k] % p);
}

namespace {

Isa probe() {
#if defined(__x86_64__) && defined(QREP_HAVE_AVX2_TU)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

Isa set_active_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
  return active().exchange(isa);
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void axpy_mod(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t c, std::size_t n,
              std::uint64_t p) {
#if defined(__x86_64__) && defined(QREP_HAVE_AVX2_TU)
  if (p < kAvx2ModulusLimit && active_isa() == Isa::Avx2) {
    axpy_mod_avx2(dst, src, c, n, p);
    return;
  }
#endif
  axpy_mod_scalar(dst, src, c, n, p);
}

void scale_mod(std::uint64_t* dst, std::uint64_t c, std::size_t n, std::uint64_t p) {
#if defined(__x86_64__) && defined(QREP_HAVE_AVX2_TU)
  if (p < kAvx2ModulusLimit && active_isa() == Isa::Avx2) {
    scale_mod_avx2(dst, c, n, p);
    return;
  }
#endif
  scale_mod_scalar(dst, c, n, p);
}

}  // namespace qrep::simd
