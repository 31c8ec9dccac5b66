#include "itconn/kernels.hpp"

#include <vector>

namespace itconn::kernels::scalar {

void conv_mod(const uint32_t* a, std::size_t na, const uint32_t* b, std::size_t nb,
              uint32_t* out, uint32_t p) {
    if (na == 0 || nb == 0) return;
    const std::size_t n = na + nb - 1;
    std::vector<uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < na; ++i) {
        const uint64_t ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) acc[i + j] += ai * b[j];
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<uint32_t>(acc[k] % p);
}

void axpy_mod(uint32_t* y, const uint32_t* x, std::size_t n, uint32_t c, uint32_t p) {
    const uint64_t cc = c % p;
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<uint32_t>((y[i] + cc * x[i]) % p);
}

void mullo_mod(const uint32_t* a, const uint32_t* b, uint32_t* out, std::size_t n,
               uint32_t p) {
    std::vector<uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const uint64_t ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) acc[i + j] += ai * b[j];
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<uint32_t>(acc[k] % p);
}

}  // namespace itconn::kernels::scalar
