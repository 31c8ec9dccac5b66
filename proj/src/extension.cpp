#include "itconn/extension.hpp"

#include <functional>

#include "itconn/cga_coeffs.hpp"
#include "itconn/matrix.hpp"
#include "itconn/parse.hpp"

namespace itconn {

ExtCtxPtr make_extension(std::vector<RatFunc> minpoly) {
    if (minpoly.size() < 2 || !minpoly.back().is_one())
        throw InputError("extension polynomial must be monic of degree at least 1");
    const uint32_t p = minpoly.back().prime();
    return std::make_shared<ExtContext>(ExtContext{p, std::move(minpoly)});
}

namespace {

// Polynomial in X over F_p(t), lowest degree first.
struct XPoly {
    std::vector<RatFunc> c;

    void trim() {
        while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    }
    friend XPoly operator+(const XPoly& a, const XPoly& b) {
        XPoly r{std::vector<RatFunc>(std::max(a.c.size(), b.c.size()), RatFunc(a.c[0].prime()))};
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend XPoly operator-(const XPoly& a, const XPoly& b) {
        XPoly nb = b;
        for (auto& v : nb.c) v = -v;
        return a + nb;
    }
    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        XPoly r{std::vector<RatFunc>(a.c.size() + b.c.size() - 1, RatFunc(a.c[0].prime()))};
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
};

struct XPolyCtx {
    uint32_t p;
    XPoly constant(int64_t v) const { return {{RatFunc::constant(p, v)}}; }
    XPoly variable(std::string_view name) const {
        if (name == "X") return {{RatFunc(p), RatFunc::constant(p, 1)}};
        if (name == "t") return {{RatFunc::t(p)}};
        throw InputError("unknown variable '" + std::string(name) + "' in extension polynomial");
    }
    XPoly divide(const XPoly& a, const XPoly& b) const {
        if (b.c.size() != 1 || b.c[0].is_zero())
            throw InputError("can only divide by nonzero elements of F_p(t)");
        XPoly r = a;
        for (auto& v : r.c) v = v / b.c[0];
        return r;
    }
    XPoly power(const XPoly& a, int64_t e) const {
        if (e < 0) throw InputError("negative exponent in extension polynomial");
        XPoly r = constant(1);
        for (int64_t i = 0; i < e; ++i) r = r * a;
        return r;
    }
};

}  // namespace

ExtCtxPtr parse_extension(const std::string& minpoly, uint32_t p) {
    XPolyCtx ctx{p};
    std::vector<RatFunc> m = parse_expression<XPoly>(minpoly, ctx).c;
    if (m.size() < 2) throw InputError("extension polynomial must have positive degree in X");
    if (!m.back().is_one()) throw InputError("extension polynomial must be monic in X");
    return make_extension(std::move(m));
}

ExtElem::ExtElem(ExtCtxPtr ctx, std::vector<RatFunc> coords) : ctx_(std::move(ctx)), c_(std::move(coords)) {
    const std::size_t d = ctx_->degree();
    // reduce modulo the monic minimal polynomial
    while (c_.size() > d) {
        const RatFunc lead = c_.back();
        const std::size_t k = c_.size() - 1 - d;
        for (std::size_t i = 0; i < d; ++i) c_[k + i] -= lead * ctx_->minpoly[i];
        c_.pop_back();
    }
    c_.resize(d, RatFunc(ctx_->p));
}

ExtElem ExtElem::from_base(const ExtCtxPtr& ctx, const RatFunc& r) { return ExtElem(ctx, {r}); }

ExtElem ExtElem::y(const ExtCtxPtr& ctx) {
    return ExtElem(ctx, {RatFunc(ctx->p), RatFunc::constant(ctx->p, 1)});
}

bool ExtElem::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

ExtElem ExtElem::operator-() const {
    ExtElem r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    ExtElem r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    const std::size_t d = a.c_.size();
    std::vector<RatFunc> prod(2 * d - 1, RatFunc(a.prime()));
    for (std::size_t i = 0; i < d; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return ExtElem(a.ctx_, std::move(prod));
}

ExtElem ExtElem::inverse() const {
    const std::size_t d = c_.size();
    const RatFunc zero(prime());
    // column j = coordinates of this * y^j
    Matrix<RatFunc> mult(d, d, zero);
    ExtElem col = *this;
    const ExtElem yy = y(ctx_);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) mult(i, j) = col.c_[i];
        col = col * yy;
    }
    Vec<RatFunc> e1(d, zero);
    e1[0] = RatFunc::constant(prime(), 1);
    auto sol = solve_linear(mult, e1);
    if (!sol.particular || !sol.kernel.empty())
        throw NotInvertible("element of the extension is not a unit: " + to_string());
    return ExtElem(ctx_, *sol.particular);
}

std::string ExtElem::to_string() const {
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string cs = c_[i].to_string();
        if (i == 0) {
            s += cs;
            continue;
        }
        if (!c_[i].is_one()) s += "(" + cs + ")*";
        s += "y";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

namespace cga {

Element<ExtElem> CoeffTraits<ExtElem>::substitute(const ExtElem& r,
                                                  const std::vector<Element<ExtElem>>& g,
                                                  const DescPtr& target) {
    const auto& ctx = r.ctx();
    const uint32_t p = ctx->p;
    const std::function<ExtElem(const uint32_t&)> embed = [&](const uint32_t& c) {
        return ExtElem::from_base(ctx, RatFunc::constant(p, c));
    };
    Element<ExtElem> out(target, r);
    Element<ExtElem> ypow = Element<ExtElem>::scalar(target, from_int_like(r, 1));
    for (std::size_t i = 0; i < r.coords().size(); ++i) {
        const RatFunc& c = r.coords()[i];
        if (!c.is_zero()) {
            Element<ExtElem> ci(target, r);
            if (c.num().is_constant() && c.is_polynomial()) {
                ci = Element<ExtElem>::scalar(target, ExtElem::from_base(ctx, c));
            } else {
                ci = horner(c.num().coeffs(), g.at(0), embed);
                if (!c.is_polynomial()) ci *= horner(c.den().coeffs(), g.at(0), embed).inverse();
            }
            out += ci * ypow;
        }
        if (i + 1 < r.coords().size()) ypow *= g.at(1);
    }
    return out;
}

Element<ExtElem> CoeffTraits<ExtElem>::generator(const DescPtr& d, std::size_t j, const ExtElem& like) {
    if (j == 0) return Element<ExtElem>::scalar(d, ExtElem::from_base(like.ctx(), RatFunc::t(like.prime())));
    return Element<ExtElem>::scalar(d, ExtElem::y(like.ctx()));
}

}  // namespace cga
}  // namespace itconn
