#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace itconn {

using Exponent = std::vector<uint16_t>;

// Sparse polynomial over F_p in a fixed number of variables t_1..t_m.
class MPoly {
public:
    MPoly() = default;
    MPoly(uint32_t p, std::size_t nvars) : p_(p), m_(nvars) {}

    static MPoly constant(uint32_t p, std::size_t nvars, int64_t c);
    static MPoly var(uint32_t p, std::size_t nvars, std::size_t j);

    uint32_t prime() const { return p_; }
    std::size_t nvars() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    uint32_t constant_term() const;
    const std::map<Exponent, uint32_t>& terms() const { return terms_; }
    void add_term(const Exponent& e, uint32_t c);
    int total_degree() const;

    MPoly operator-() const;
    friend MPoly operator+(MPoly a, const MPoly& b);
    friend MPoly operator-(MPoly a, const MPoly& b) { return a + (-b); }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly scaled(uint32_t s) const;
    MPoly pow(uint64_t e) const;
    MPoly inverse() const;  // only nonzero constants are units

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator<(const MPoly& a, const MPoly& b) { return a.terms_ < b.terms_; }

    // Partial Hasse derivative with multi-index k.
    MPoly hasse(const Exponent& k) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    uint32_t p_ = 2;
    std::size_t m_ = 1;
    std::map<Exponent, uint32_t> terms_;
};

std::vector<std::string> default_var_names(std::size_t m);

}  // namespace itconn
