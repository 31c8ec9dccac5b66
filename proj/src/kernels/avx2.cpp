#include "itconn/kernels.hpp"

#include <immintrin.h>

#include <vector>

namespace itconn::kernels::avx2 {
namespace {

// acc[0..n) += s * x[0..n) with 64-bit lanes, four at a time.
inline void mac64(uint64_t* acc, const uint32_t* x, std::size_t n, uint64_t s) {
    const __m256i vs = _mm256_set1_epi64x(static_cast<long long>(s));
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256i vx = _mm256_cvtepu32_epi64(
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + j)));
        __m256i prod = _mm256_mul_epu32(vx, vs);
        __m256i* dst = reinterpret_cast<__m256i*>(acc + j);
        _mm256_storeu_si256(dst, _mm256_add_epi64(_mm256_loadu_si256(dst), prod));
    }
    for (; j < n; ++j) acc[j] += s * x[j];
}

}  // namespace

void conv_mod(const uint32_t* a, std::size_t na, const uint32_t* b, std::size_t nb,
              uint32_t* out, uint32_t p) {
    if (na == 0 || nb == 0) return;
    const std::size_t n = na + nb - 1;
    std::vector<uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < na; ++i)
        if (a[i] != 0) mac64(acc.data() + i, b, nb, a[i]);
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<uint32_t>(acc[k] % p);
}

void axpy_mod(uint32_t* y, const uint32_t* x, std::size_t n, uint32_t c, uint32_t p) {
    // y + c*x < p + p*p < 2^31 for p < 2^15, so 32-bit lanes never wrap.
    const uint32_t cc = c % p;
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(cc));
    std::size_t i = 0;
    alignas(32) uint32_t tmp[8];
    for (; i + 8 <= n; i += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i v = _mm256_add_epi32(vy, _mm256_mullo_epi32(vx, vc));
        _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), v);
        for (int k = 0; k < 8; ++k) y[i + k] = tmp[k] % p;
    }
    for (; i < n; ++i) y[i] = static_cast<uint32_t>((y[i] + uint64_t{cc} * x[i]) % p);
}

void mullo_mod(const uint32_t* a, const uint32_t* b, uint32_t* out, std::size_t n,
               uint32_t p) {
    std::vector<uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != 0) mac64(acc.data() + i, b, n - i, a[i]);
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<uint32_t>(acc[k] % p);
}

}  // namespace itconn::kernels::avx2
