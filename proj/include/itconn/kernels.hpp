#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Inner loops over F_p coefficient arrays. Every routine has a portable
// scalar reference and an AVX2 variant; the active one is chosen once at
// startup from the CPU feature bits and can be pinned with force_isa().
//
// Preconditions shared by all kernels: inputs are already reduced mod p and
// p < 2^15, so a single product fits in 30 bits.
namespace itconn::kernels {

enum class Isa { Scalar, Avx2 };

Isa active_isa();
bool isa_available(Isa isa);
// Returns false (and leaves the selection unchanged) if the ISA is missing.
bool force_isa(Isa isa);
std::string_view isa_name(Isa isa);

// out[0 .. na+nb-2] = a * b mod p. out must not alias a or b.
void conv_mod(const uint32_t* a, std::size_t na, const uint32_t* b, std::size_t nb,
              uint32_t* out, uint32_t p);

// y[i] = (y[i] + c * x[i]) mod p
void axpy_mod(uint32_t* y, const uint32_t* x, std::size_t n, uint32_t c, uint32_t p);

// Truncated product: out[k] = sum_{i+j=k} a[i] b[j] for k < n.
void mullo_mod(const uint32_t* a, const uint32_t* b, uint32_t* out, std::size_t n,
               uint32_t p);

namespace scalar {
void conv_mod(const uint32_t*, std::size_t, const uint32_t*, std::size_t, uint32_t*, uint32_t);
void axpy_mod(uint32_t*, const uint32_t*, std::size_t, uint32_t, uint32_t);
void mullo_mod(const uint32_t*, const uint32_t*, uint32_t*, std::size_t, uint32_t);
}  // namespace scalar

namespace avx2 {
void conv_mod(const uint32_t*, std::size_t, const uint32_t*, std::size_t, uint32_t*, uint32_t);
void axpy_mod(uint32_t*, const uint32_t*, std::size_t, uint32_t, uint32_t);
void mullo_mod(const uint32_t*, const uint32_t*, uint32_t*, std::size_t, uint32_t);
}  // namespace avx2

}  // namespace itconn::kernels
