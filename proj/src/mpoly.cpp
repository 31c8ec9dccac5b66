#include "itconn/mpoly.hpp"

#include "itconn/errors.hpp"
#include "itconn/fp.hpp"

namespace itconn {

MPoly MPoly::constant(uint32_t p, std::size_t nvars, int64_t c) {
    MPoly r(p, nvars);
    r.add_term(Exponent(nvars, 0), reduce(c, p));
    return r;
}

MPoly MPoly::var(uint32_t p, std::size_t nvars, std::size_t j) {
    MPoly r(p, nvars);
    Exponent e(nvars, 0);
    e.at(j) = 1;
    r.add_term(e, 1);
    return r;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (auto v : terms_.begin()->first)
        if (v) return false;
    return true;
}

uint32_t MPoly::constant_term() const {
    auto it = terms_.find(Exponent(m_, 0));
    return it == terms_.end() ? 0 : it->second;
}

void MPoly::add_term(const Exponent& e, uint32_t c) {
    c %= p_;
    if (!c) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (fresh) return;
    it->second = (it->second + c) % p_;
    if (!it->second) terms_.erase(it);
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (auto v : e) s += v;
        d = std::max(d, s);
    }
    return d;
}

MPoly MPoly::operator-() const {
    MPoly r(p_, m_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, p_ - c);
    return r;
}

MPoly operator+(MPoly a, const MPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.p_, a.m_);
    Exponent e(a.m_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t j = 0; j < a.m_; ++j) e[j] = static_cast<uint16_t>(ea[j] + eb[j]);
            r.add_term(e, static_cast<uint32_t>(uint64_t{ca} * cb % a.p_));
        }
    return r;
}

MPoly MPoly::scaled(uint32_t s) const {
    MPoly r(p_, m_);
    for (const auto& [e, c] : terms_) r.add_term(e, static_cast<uint32_t>(uint64_t{c} * s % p_));
    return r;
}

MPoly MPoly::pow(uint64_t e) const {
    MPoly r = constant(p_, m_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

MPoly MPoly::inverse() const {
    if (!is_constant() || is_zero()) throw NotInvertible("polynomial is not a unit");
    return constant(p_, m_, inv_mod(constant_term(), p_));
}

MPoly MPoly::hasse(const Exponent& k) const {
    MPoly r(p_, m_);
    Exponent e(m_);
    for (const auto& [ea, c] : terms_) {
        uint64_t coef = c;
        bool ok = true;
        for (std::size_t j = 0; j < m_ && ok; ++j) {
            if (ea[j] < k[j]) ok = false;
            else {
                coef = coef * binomial_mod_p(ea[j], k[j], p_) % p_;
                e[j] = static_cast<uint16_t>(ea[j] - k[j]);
            }
        }
        if (ok) r.add_term(e, static_cast<uint32_t>(coef));
    }
    return r;
}

std::vector<std::string> default_var_names(std::size_t m) {
    if (m == 1) return {"t"};
    std::vector<std::string> v;
    for (std::size_t j = 1; j <= m; ++j) v.push_back("t" + std::to_string(j));
    return v;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t j = 0; j < m_; ++j) {
            if (!e[j]) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(j);
            if (e[j] > 1) mono += "^" + std::to_string(e[j]);
        }
        if (!s.empty()) s += "+";
        if (mono.empty()) s += std::to_string(c);
        else if (c == 1) s += mono;
        else s += std::to_string(c) + "*" + mono;
    }
    return s;
}

}  // namespace itconn
