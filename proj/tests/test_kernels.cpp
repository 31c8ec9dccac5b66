#include <vector>

#include "doctest.h"
#include "itconn/kernels.hpp"
#include "test_support.hpp"

using namespace itconn::kernels;

namespace {

std::vector<uint32_t> random_vec(std::mt19937_64& rng, std::size_t n, uint32_t p) {
    std::vector<uint32_t> v(n);
    for (auto& x : v) x = static_cast<uint32_t>(rng() % p);
    return v;
}

}  // namespace

TEST_CASE("scalar and avx2 convolution agree bit for bit") {
    if (!isa_available(Isa::Avx2)) return;
    auto rng = test_rng(1);
    for (uint32_t p : {2u, 3u, 5u, 97u, 32749u}) {
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t na = 1 + rng() % 70, nb = 1 + rng() % 70;
            auto a = random_vec(rng, na, p), b = random_vec(rng, nb, p);
            std::vector<uint32_t> o1(na + nb - 1), o2(na + nb - 1);
            scalar::conv_mod(a.data(), na, b.data(), nb, o1.data(), p);
            avx2::conv_mod(a.data(), na, b.data(), nb, o2.data(), p);
            REQUIRE(o1 == o2);
        }
    }
}

TEST_CASE("scalar and avx2 truncated products agree") {
    if (!isa_available(Isa::Avx2)) return;
    auto rng = test_rng(2);
    for (uint32_t p : {2u, 7u, 32749u})
        for (std::size_t n : {1u, 3u, 4u, 8u, 17u, 65u}) {
            auto a = random_vec(rng, n, p), b = random_vec(rng, n, p);
            std::vector<uint32_t> o1(n), o2(n);
            scalar::mullo_mod(a.data(), b.data(), o1.data(), n, p);
            avx2::mullo_mod(a.data(), b.data(), o2.data(), n, p);
            REQUIRE(o1 == o2);
        }
}

TEST_CASE("scalar and avx2 axpy agree, including ragged tails") {
    if (!isa_available(Isa::Avx2)) return;
    auto rng = test_rng(3);
    for (uint32_t p : {2u, 3u, 97u, 32749u})
        for (std::size_t n = 0; n < 40; ++n) {
            auto x = random_vec(rng, n, p), y = random_vec(rng, n, p);
            auto y1 = y, y2 = y;
            const uint32_t c = static_cast<uint32_t>(rng() % p);
            scalar::axpy_mod(y1.data(), x.data(), n, c, p);
            avx2::axpy_mod(y2.data(), x.data(), n, c, p);
            REQUIRE(y1 == y2);
        }
}

TEST_CASE("convolution matches a hand-computed product") {
    // (1 + 2x)(2 + x + x^2) over F_3 = 2 + 5x + 3x^2 + 2x^3 = 2 + 2x + 0x^2 + 2x^3
    const uint32_t a[] = {1, 2}, b[] = {2, 1, 1};
    uint32_t out[4];
    for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
        if (!force_isa(isa)) continue;
        conv_mod(a, 2, b, 3, out, 3);
        CHECK(std::vector<uint32_t>(out, out + 4) == std::vector<uint32_t>{2, 2, 0, 2});
    }
    force_isa(isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar);
}

TEST_CASE("dispatch reports the selected variant") {
    REQUIRE(force_isa(Isa::Scalar));
    CHECK(active_isa() == Isa::Scalar);
    CHECK(isa_name(active_isa()) == "scalar");
    if (force_isa(Isa::Avx2)) CHECK(active_isa() == Isa::Avx2);
}
