#include "itconn/kernels.hpp"

#include <atomic>

namespace itconn::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<Isa>& selection() {
    static std::atomic<Isa> isa{cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar};
    return isa;
}

}  // namespace

Isa active_isa() { return selection().load(std::memory_order_relaxed); }

bool isa_available(Isa isa) { return isa == Isa::Scalar || cpu_has_avx2(); }

bool force_isa(Isa isa) {
    if (!isa_available(isa)) return false;
    selection().store(isa, std::memory_order_relaxed);
    return true;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void conv_mod(const uint32_t* a, std::size_t na, const uint32_t* b, std::size_t nb,
              uint32_t* out, uint32_t p) {
    if (active_isa() == Isa::Avx2) avx2::conv_mod(a, na, b, nb, out, p);
    else scalar::conv_mod(a, na, b, nb, out, p);
}

void axpy_mod(uint32_t* y, const uint32_t* x, std::size_t n, uint32_t c, uint32_t p) {
    if (active_isa() == Isa::Avx2) avx2::axpy_mod(y, x, n, c, p);
    else scalar::axpy_mod(y, x, n, c, p);
}

void mullo_mod(const uint32_t* a, const uint32_t* b, uint32_t* out, std::size_t n,
               uint32_t p) {
    if (active_isa() == Isa::Avx2) avx2::mullo_mod(a, b, out, n, p);
    else scalar::mullo_mod(a, b, out, n, p);
}

}  // namespace itconn::kernels
