#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

// Row kernels for arithmetic modulo a prime p. Inputs are reduced residues.
// The scalar versions accept any p < 2^61; the AVX2 versions need p < 2^26
// and the dispatcher falls back to scalar code otherwise.

namespace qrep::simd {

enum class Isa { Scalar, Avx2 };

std::string to_string(Isa isa);

// dst[k] = (dst[k] + c * src[k]) mod p
void axpy_mod_scalar(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t c,
                     std::size_t n, std::uint64_t p);
// dst[k] = (c * dst[k]) mod p
void scale_mod_scalar(std::uint64_t* dst, std::uint64_t c, std::size_t n, std::uint64_t p);

#if defined(__x86_64__)
void axpy_mod_avx2(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t c, std::size_t n,
                   std::uint64_t p);
void scale_mod_avx2(std::uint64_t* dst, std::uint64_t c, std::size_t n, std::uint64_t p);
#endif

inline constexpr std::uint64_t kAvx2ModulusLimit = std::uint64_t{1} << 26;

// Best kernel set the running CPU supports (computed once).
Isa detected_isa();
// Overrides the choice, e.g. to force the scalar path in tests. Returns the
// previous setting. Requesting an unsupported ISA falls back to Scalar.
Isa set_active_isa(Isa isa);
Isa active_isa();

void axpy_mod(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t c, std::size_t n,
              std::uint64_t p);
void scale_mod(std::uint64_t* dst, std::uint64_t c, std::size_t n, std::uint64_t p);

}  // namespace qrep::simd
