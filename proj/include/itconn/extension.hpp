#pragma once

#include <memory>
#include <string>
#include <vector>

#include "itconn/cga.hpp"
#include "itconn/ratfunc.hpp"

namespace itconn {

// Finite extension F_p(t)[y]/(m(y)) with m monic of degree d >= 1.
struct ExtContext {
    uint32_t p;
    std::vector<RatFunc> minpoly;  // coefficients m_0 .. m_d, m_d = 1
    std::size_t degree() const { return minpoly.size() - 1; }
};

using ExtCtxPtr = std::shared_ptr<const ExtContext>;

ExtCtxPtr make_extension(std::vector<RatFunc> minpoly);
// Parses a monic polynomial in X with coefficients in F_p(t), e.g. "X^2+X+t".
ExtCtxPtr parse_extension(const std::string& minpoly, uint32_t p);

class ExtElem {
public:
    ExtElem() = default;
    ExtElem(ExtCtxPtr ctx, std::vector<RatFunc> coords);
    static ExtElem from_base(const ExtCtxPtr& ctx, const RatFunc& r);
    static ExtElem y(const ExtCtxPtr& ctx);

    const ExtCtxPtr& ctx() const { return ctx_; }
    uint32_t prime() const { return ctx_->p; }
    const std::vector<RatFunc>& coords() const { return c_; }
    bool is_zero() const;

    ExtElem operator-() const;
    friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b) { return a + (-b); }
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
    ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
    ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
    ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }
    ExtElem inverse() const;  // via the multiplication matrix
    friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    ExtCtxPtr ctx_;
    std::vector<RatFunc> c_;
};

inline ExtElem from_int_like(const ExtElem& x, int64_t n) {
    return ExtElem::from_base(x.ctx(), RatFunc::constant(x.prime(), n));
}
inline ExtElem binom_like(const ExtElem& x, uint64_t n, uint64_t k) {
    return from_int_like(x, binomial_mod_p(n, k, x.prime()));
}

namespace cga {

template <>
struct CoeffTraits<ExtElem> {
    static Element<ExtElem> substitute(const ExtElem& r, const std::vector<Element<ExtElem>>& g,
                                       const DescPtr& target);
    static Element<ExtElem> generator(const DescPtr& d, std::size_t j, const ExtElem& like);
    static std::string render(const ExtElem& c, const std::vector<std::string>&) {
        return c.to_string();
    }
};

}  // namespace cga
}  // namespace itconn
