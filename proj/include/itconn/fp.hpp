#pragma once

#include <cstdint>
#include <vector>

namespace itconn {

bool is_prime(uint32_t n);

uint32_t pow_mod(uint32_t base, uint64_t e, uint32_t p);
uint32_t inv_mod(uint32_t a, uint32_t p);  // throws NotInvertible on 0
inline uint32_t reduce(int64_t v, uint32_t p) {
    int64_t r = v % static_cast<int64_t>(p);
    return static_cast<uint32_t>(r < 0 ? r + p : r);
}

// Base-p digits, least significant first. digits(0) is empty.
std::vector<uint32_t> base_p_digits(uint64_t n, uint32_t p);

// C(n, k) mod p via Lucas' theorem; zero when k > n.
uint32_t binomial_mod_p(uint64_t n, uint64_t k, uint32_t p);

bool is_p_power(uint64_t k, uint32_t p);
uint64_t ipow(uint64_t b, unsigned e);

}  // namespace itconn
