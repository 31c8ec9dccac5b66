#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

// Every randomized test draws from this seed so a failure can be replayed
// with ITCONN_SEED=<value>.
inline uint64_t test_seed() {
    if (const char* s = std::getenv("ITCONN_SEED")) return std::stoull(s);
    return 20240611;
}

inline std::mt19937_64 test_rng(uint64_t salt = 0) { return std::mt19937_64(test_seed() ^ salt); }

#include "itconn/ratfunc.hpp"

inline itconn::Poly random_poly(std::mt19937_64& rng, uint32_t p, int max_deg) {
    std::vector<uint32_t> c(static_cast<std::size_t>(max_deg) + 1);
    for (auto& v : c) v = static_cast<uint32_t>(rng() % p);
    return itconn::Poly(p, c);
}

// Random element of F_p(t) with a nonzero denominator.
inline itconn::RatFunc random_ratfunc(std::mt19937_64& rng, uint32_t p, int max_deg) {
    itconn::Poly d(p);
    while (d.is_zero()) d = random_poly(rng, p, max_deg);
    return itconn::RatFunc(random_poly(rng, p, max_deg), d);
}

#include "itconn/cga_coeffs.hpp"
#include "itconn/mpoly.hpp"

inline itconn::MPoly random_mpoly(std::mt19937_64& rng, uint32_t p, std::size_t m, int max_deg,
                                  int terms = 3) {
    itconn::MPoly r(p, m);
    for (int i = 0; i < terms; ++i) {
        itconn::Exponent e(m);
        for (auto& v : e) v = static_cast<uint16_t>(rng() % (max_deg + 1));
        r.add_term(e, static_cast<uint32_t>(rng() % p));
    }
    return r;
}

// Random power series over F_p[t_1..t_m], lowest degree `from`.
inline itconn::cga::Element<itconn::MPoly> random_series(std::mt19937_64& rng,
                                                         const itconn::cga::DescPtr& d,
                                                         uint32_t p, std::size_t m,
                                                         unsigned from = 0) {
    itconn::cga::Element<itconn::MPoly> e(d, itconn::MPoly(p, m));
    for (unsigned k = from; k <= d->N; ++k)
        e.add_term({static_cast<uint8_t>(k)}, random_mpoly(rng, p, m, 2, 2));
    return e;
}
