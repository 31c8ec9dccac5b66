#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace itconn {

// Dense polynomial in t over Q, lowest degree first, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> c);
    static QPoly constant(const mpq_class& c) { return QPoly({c}); }
    static QPoly t() { return QPoly({0, 1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    mpq_class coef(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    QPoly scaled(const mpq_class& s) const;
    QPoly inverse() const;  // nonzero constants only
    QPoly derivative() const;

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

}  // namespace itconn
