#pragma once

#include <string>
#include <vector>

#include "itconn/poly.hpp"

namespace itconn {

// Element of F_p(t) kept in canonical form: gcd(num, den) = 1, den monic.
// Zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(2), den_(Poly::constant(2, 1)) {}
    explicit RatFunc(uint32_t p) : num_(p), den_(Poly::constant(p, 1)) {}
    RatFunc(Poly num);  // NOLINT(google-explicit-constructor): polynomials embed
    RatFunc(Poly num, Poly den);

    static RatFunc constant(uint32_t p, int64_t c) { return RatFunc(Poly::constant(p, c)); }
    static RatFunc t(uint32_t p) { return RatFunc(Poly::x(p)); }

    uint32_t prime() const { return num_.prime(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc inverse() const;  // throws NotInvertible on zero
    RatFunc pow(int64_t e) const;
    RatFunc scaled(uint32_t s) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const RatFunc& a, const RatFunc& b) {
        if (!(a.num_ == b.num_)) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    // Hasse derivatives of the Taylor shift t -> t + T: entry k is the
    // coefficient of T^k in f(t + T), for k = 0..order.
    std::vector<RatFunc> taylor(std::size_t order) const;
    RatFunc hasse(std::size_t k) const { return taylor(k).back(); }

    // f^(p^l): Frobenius applied l times.
    RatFunc frobenius(unsigned l = 1) const;
    bool is_pth_power() const;
    RatFunc pth_root() const;  // throws NotPthPower

    // Coordinates (c_0, ..., c_{q-1}), q = p^l, with f = sum c_a t^a and every
    // c_a a q-th power.
    std::vector<RatFunc> frobenius_expand(unsigned l) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void canonicalize();
    Poly num_, den_;
};

// Exact q-th root check used by kernel descent: repeated pth_root.
RatFunc pth_root_iter(const RatFunc& f, unsigned l);

}  // namespace itconn
