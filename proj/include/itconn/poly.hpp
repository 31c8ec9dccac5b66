#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace itconn {

// Dense univariate polynomial over F_p, coefficients lowest degree first,
// no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(uint32_t p) : p_(p) {}
    Poly(uint32_t p, std::vector<uint32_t> coeffs);

    static Poly constant(uint32_t p, int64_t c);
    static Poly monomial(uint32_t p, uint32_t c, std::size_t deg);
    static Poly x(uint32_t p) { return monomial(p, 1, 1); }

    uint32_t prime() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    uint32_t coef(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    std::size_t term_count() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(uint32_t s) const;
    Poly shifted(std::size_t k) const;  // multiply by x^k
    Poly pow(uint64_t e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(),
                                            b.c_.rend());
    }

    // Quotient and remainder; throws NotInvertible when dividing by zero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly monic() const;
    static Poly gcd(Poly a, Poly b);  // monic gcd, zero for gcd(0,0)

    uint32_t eval(uint32_t x) const;
    // Hasse derivative: coefficient C(m,k) on x^(m-k).
    Poly hasse(uint64_t k) const;
    // f(x^q)
    Poly inflate(uint64_t q) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    uint32_t p_ = 2;
    std::vector<uint32_t> c_;
};

}  // namespace itconn
