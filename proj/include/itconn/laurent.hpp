#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "itconn/cga.hpp"
#include "itconn/cga_coeffs.hpp"
#include "itconn/ratfunc.hpp"
#include "itconn/ring.hpp"

namespace itconn {

using Exps = std::vector<int32_t>;

// Generators r_1..r_s of F_p(t)[r^{+-1}]. A fold (from, onto) keeps the
// exponent of `from` in [0, p) by moving whole multiples of p onto `onto`;
// this models a tensor square over the subfield of p-th powers, where
// r'^p = r^p.
struct LaurentCtx {
    uint32_t p = 2;
    std::vector<std::string> names;
    std::vector<std::pair<std::size_t, std::size_t>> folds;
    std::size_t ngens() const { return names.size(); }
    bool operator==(const LaurentCtx&) const = default;
};

using LaurentCtxPtr = std::shared_ptr<const LaurentCtx>;

LaurentCtxPtr make_laurent_ctx(uint32_t p, std::vector<std::string> names,
                               std::vector<std::pair<std::size_t, std::size_t>> folds = {});

class LaurentElem {
public:
    LaurentElem() = default;
    explicit LaurentElem(LaurentCtxPtr ctx) : ctx_(std::move(ctx)) {}
    static LaurentElem monomial(const LaurentCtxPtr& ctx, Exps e, const RatFunc& c);
    static LaurentElem scalar(const LaurentCtxPtr& ctx, const RatFunc& c);
    static LaurentElem gen(const LaurentCtxPtr& ctx, std::size_t i, int32_t power = 1);

    const LaurentCtxPtr& ctx() const { return ctx_; }
    uint32_t prime() const { return ctx_->p; }
    const std::map<Exps, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RatFunc coeff(const Exps& e) const;

    void add_term(Exps e, const RatFunc& c);

    LaurentElem operator-() const;
    friend LaurentElem operator+(const LaurentElem& a, const LaurentElem& b);
    friend LaurentElem operator-(const LaurentElem& a, const LaurentElem& b) { return a + (-b); }
    friend LaurentElem operator*(const LaurentElem& a, const LaurentElem& b);
    LaurentElem& operator+=(const LaurentElem& o) { return *this = *this + o; }
    LaurentElem& operator-=(const LaurentElem& o) { return *this = *this - o; }
    LaurentElem& operator*=(const LaurentElem& o) { return *this = *this * o; }
    LaurentElem scaled(const RatFunc& c) const;
    // Only single-term elements are units here; throws NotInvertible otherwise.
    LaurentElem inverse() const;
    LaurentElem pow(uint64_t e) const;
    friend bool operator==(const LaurentElem& a, const LaurentElem& b) {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    void normalize(Exps& e) const;
    LaurentCtxPtr ctx_;
    std::map<Exps, RatFunc> terms_;
};

inline LaurentElem from_int_like(const LaurentElem& x, int64_t n) {
    return LaurentElem::scalar(x.ctx(), RatFunc::constant(x.prime(), n));
}
inline LaurentElem binom_like(const LaurentElem& x, uint64_t n, uint64_t k) {
    return from_int_like(x, binomial_mod_p(n, k, x.prime()));
}

namespace cga {

// Generator 0 is t, generator 1 + i is r_i.
template <>
struct CoeffTraits<LaurentElem> {
    static Element<LaurentElem> substitute(const LaurentElem& r,
                                           const std::vector<Element<LaurentElem>>& g,
                                           const DescPtr& target);
    static Element<LaurentElem> generator(const DescPtr& d, std::size_t j, const LaurentElem& like);
    static std::string render(const LaurentElem& c, const std::vector<std::string>&) {
        return c.to_string();
    }
};

}  // namespace cga
}  // namespace itconn
