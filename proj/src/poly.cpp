#include "itconn/poly.hpp"

#include <algorithm>

#include "itconn/errors.hpp"
#include "itconn/fp.hpp"
#include "itconn/kernels.hpp"

namespace itconn {

Poly::Poly(uint32_t p, std::vector<uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    trim();
}

Poly Poly::constant(uint32_t p, int64_t c) { return Poly(p, {reduce(c, p)}); }

Poly Poly::monomial(uint32_t p, uint32_t c, std::size_t deg) {
    std::vector<uint32_t> v(deg + 1, 0);
    v[deg] = c;
    return Poly(p, std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Poly::term_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](uint32_t v) { return v; }));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = v ? p_ - v : 0;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    kernels::axpy_mod(c_.data(), o.c_.data(), o.c_.size(), 1, p_);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    kernels::axpy_mod(c_.data(), o.c_.data(), o.c_.size(), p_ - 1, p_);
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.p_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    kernels::conv_mod(a.c_.data(), a.c_.size(), b.c_.data(), b.c_.size(), r.c_.data(), a.p_);
    r.trim();
    return r;
}

Poly Poly::scaled(uint32_t s) const {
    Poly r(p_);
    r.c_.assign(c_.size(), 0);
    kernels::axpy_mod(r.c_.data(), c_.data(), c_.size(), s % p_, p_);
    r.trim();
    return r;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    Poly r(p_);
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::pow(uint64_t e) const {
    Poly r = constant(p_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw NotInvertible("polynomial division by zero");
    Poly q(p_), r = *this;
    if (r.degree() < d.degree()) return {q, r};
    const uint32_t li = inv_mod(d.lead(), p_);
    const int dd = d.degree();
    q.c_.assign(r.degree() - dd + 1, 0);
    for (int k = r.degree(); k >= dd; --k) {
        const uint32_t c = static_cast<uint32_t>(uint64_t{r.c_[k]} * li % p_);
        if (c == 0) continue;
        q.c_[k - dd] = c;
        kernels::axpy_mod(r.c_.data() + (k - dd), d.c_.data(), d.c_.size(), p_ - c, p_);
    }
    q.trim();
    r.trim();
    return {q, r};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(inv_mod(lead(), p_));
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

uint32_t Poly::eval(uint32_t x) const {
    uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
    return static_cast<uint32_t>(acc);
}

Poly Poly::hasse(uint64_t k) const {
    Poly r(p_);
    if (k >= c_.size()) return r;
    r.c_.assign(c_.size() - k, 0);
    for (std::size_t m = k; m < c_.size(); ++m)
        if (c_[m])
            r.c_[m - k] = static_cast<uint32_t>(uint64_t{c_[m]} * binomial_mod_p(m, k, p_) % p_);
    r.trim();
    return r;
}

Poly Poly::inflate(uint64_t q) const {
    if (is_zero()) return *this;
    Poly r(p_);
    r.c_.assign((c_.size() - 1) * q + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * q] = c_[i];
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const uint32_t c = c_[k];
        if (!c) continue;
        if (!s.empty()) s += "+";
        if (k == 0) {
            s += std::to_string(c);
            continue;
        }
        if (c != 1) s += std::to_string(c) + "*";
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

}  // namespace itconn
