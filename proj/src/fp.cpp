#include "itconn/fp.hpp"

#include "itconn/errors.hpp"

namespace itconn {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint32_t pow_mod(uint32_t base, uint64_t e, uint32_t p) {
    uint64_t r = 1 % p, b = base % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
    if (a % p == 0) throw NotInvertible("zero has no inverse mod p");
    return pow_mod(a, p - 2, p);
}

std::vector<uint32_t> base_p_digits(uint64_t n, uint32_t p) {
    std::vector<uint32_t> d;
    while (n) {
        d.push_back(static_cast<uint32_t>(n % p));
        n /= p;
    }
    return d;
}

uint32_t binomial_mod_p(uint64_t n, uint64_t k, uint32_t p) {
    if (k > n) return 0;
    uint64_t r = 1;
    while (k || n) {
        const uint32_t ni = static_cast<uint32_t>(n % p), ki = static_cast<uint32_t>(k % p);
        if (ki > ni) return 0;
        // small binomial by the multiplicative formula in F_p
        uint64_t num = 1, den = 1;
        for (uint32_t j = 0; j < ki; ++j) {
            num = num * (ni - j) % p;
            den = den * (j + 1) % p;
        }
        r = r * num % p * inv_mod(static_cast<uint32_t>(den), p) % p;
        n /= p;
        k /= p;
    }
    return static_cast<uint32_t>(r);
}

bool is_p_power(uint64_t k, uint32_t p) {
    if (k == 0) return false;
    while (k % p == 0) k /= p;
    return k == 1;
}

uint64_t ipow(uint64_t b, unsigned e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace itconn
