#include "itconn/ratfunc.hpp"

#include "itconn/errors.hpp"
#include "itconn/fp.hpp"

namespace itconn {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.prime(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw NotInvertible("rational function with zero denominator");
    canonicalize();
}

void RatFunc::canonicalize() {
    const uint32_t p = num_.prime();
    if (num_.is_zero()) {
        den_ = Poly::constant(p, 1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    const uint32_t li = inv_mod(den_.lead(), p);
    if (li != 1) {
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
    // Henrici: only the shared part of the denominators can cancel.
    const Poly g = Poly::gcd(a.den_, b.den_);
    RatFunc r(a.prime());
    if (g.is_one()) {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        return r;
    }
    const Poly ad = a.den_.divmod(g).first, bd = b.den_.divmod(g).first;
    Poly num = a.num_ * bd + b.num_ * ad;
    if (num.is_zero()) return r;
    const Poly h = Poly::gcd(num, g);
    if (h.is_one()) {
        r.num_ = std::move(num);
        r.den_ = ad * b.den_;
    } else {
        r.num_ = num.divmod(h).first;
        r.den_ = ad * bd * g.divmod(h).first;
    }
    return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.prime());
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
    // Cross-cancel; the result is then already reduced.
    const Poly g1 = Poly::gcd(a.num_, b.den_), g2 = Poly::gcd(b.num_, a.den_);
    RatFunc r(a.prime());
    r.num_ = (g1.is_one() ? a.num_ : a.num_.divmod(g1).first) *
             (g2.is_one() ? b.num_ : b.num_.divmod(g2).first);
    r.den_ = (g2.is_one() ? a.den_ : a.den_.divmod(g2).first) *
             (g1.is_one() ? b.den_ : b.den_.divmod(g1).first);
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw NotInvertible("zero rational function has no inverse");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(num_.pow(static_cast<uint64_t>(e)));
    r.den_ = den_.pow(static_cast<uint64_t>(e));
    return r;
}

RatFunc RatFunc::scaled(uint32_t s) const {
    RatFunc r = *this;
    r.num_ = r.num_.scaled(s);
    if (r.num_.is_zero()) r.den_ = Poly::constant(prime(), 1);
    return r;
}

std::vector<RatFunc> RatFunc::taylor(std::size_t order) const {
    // With g_k = P_k / D^(k+1): P_k = N_k D^k - sum_{i=1..k} D_i P_{k-i} D^(i-1),
    // which follows from comparing T-coefficients of f(t+T) D(t+T) = N(t+T).
    std::vector<RatFunc> out;
    out.reserve(order + 1);
    out.push_back(*this);
    if (order == 0) return out;
    if (den_.is_one()) {
        for (std::size_t k = 1; k <= order; ++k) out.emplace_back(num_.hasse(k));
        return out;
    }
    const Poly& D = den_;
    std::vector<Poly> Dpow{Poly::constant(prime(), 1)};
    std::vector<Poly> Dh(order + 1), P(order + 1);
    for (std::size_t i = 0; i <= order; ++i) Dh[i] = D.hasse(i);
    P[0] = num_;
    for (std::size_t k = 1; k <= order; ++k) {
        while (Dpow.size() <= k) Dpow.push_back(Dpow.back() * D);
        Poly acc = num_.hasse(k) * Dpow[k];
        for (std::size_t i = 1; i <= k && i <= static_cast<std::size_t>(D.degree()); ++i)
            acc -= Dh[i] * P[k - i] * Dpow[i - 1];
        P[k] = acc;
        while (Dpow.size() <= k + 1) Dpow.push_back(Dpow.back() * D);
        out.emplace_back(P[k], Dpow[k + 1]);
    }
    return out;
}

RatFunc RatFunc::frobenius(unsigned l) const {
    const uint64_t q = ipow(prime(), l);
    RatFunc r = *this;
    r.num_ = num_.inflate(q);
    r.den_ = den_.inflate(q);
    return r;
}

namespace {

bool exponents_divisible(const Poly& f, uint32_t p) {
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] && i % p) return false;
    return true;
}

Poly deflate(const Poly& f, uint32_t p) {
    const auto& c = f.coeffs();
    std::vector<uint32_t> v;
    for (std::size_t i = 0; i < c.size(); i += p) v.push_back(c[i]);
    return Poly(f.prime(), std::move(v));
}

}  // namespace

bool RatFunc::is_pth_power() const {
    return exponents_divisible(num_, prime()) && exponents_divisible(den_, prime());
}

RatFunc RatFunc::pth_root() const {
    if (!is_pth_power()) throw NotPthPower("not a p-th power: " + to_string());
    RatFunc r = *this;
    r.num_ = deflate(num_, prime());
    r.den_ = deflate(den_, prime());
    return r;
}

RatFunc pth_root_iter(const RatFunc& f, unsigned l) {
    RatFunc r = f;
    for (unsigned i = 0; i < l; ++i) r = r.pth_root();
    return r;
}

std::vector<RatFunc> RatFunc::frobenius_expand(unsigned l) const {
    const uint32_t p = prime();
    const uint64_t q = ipow(p, l);
    // N/D = N D^(q-1) / D^q and D^q is a q-th power; split N D^(q-1) by
    // exponent residue mod q.
    const Poly top = num_ * den_.pow(q - 1);
    const Poly bottom = den_.pow(q);
    std::vector<std::vector<uint32_t>> parts(q);
    const auto& c = top.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto& v = parts[i % q];
        if (v.size() <= i - i % q) v.resize(i - i % q + 1, 0);
        v[i - i % q] = c[i];
    }
    std::vector<RatFunc> out;
    out.reserve(q);
    for (uint64_t a = 0; a < q; ++a) out.emplace_back(Poly(p, parts[a]), bottom);
    return out;
}

std::string RatFunc::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    std::string n = num_.to_string(var), d = den_.to_string(var);
    if (num_.term_count() > 1) n = "(" + n + ")";
    if (den_.term_count() > 1 || den_.coef(static_cast<std::size_t>(den_.degree())) != 1)
        d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace itconn
