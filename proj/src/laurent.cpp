#include "itconn/laurent.hpp"

#include "itconn/errors.hpp"

namespace itconn {

LaurentCtxPtr make_laurent_ctx(uint32_t p, std::vector<std::string> names,
                               std::vector<std::pair<std::size_t, std::size_t>> folds) {
    for (const auto& [from, onto] : folds)
        if (from >= names.size() || onto >= names.size() || from == onto)
            throw InputError("bad fold rule");
    return std::make_shared<const LaurentCtx>(LaurentCtx{p, std::move(names), std::move(folds)});
}

LaurentElem LaurentElem::monomial(const LaurentCtxPtr& ctx, Exps e, const RatFunc& c) {
    LaurentElem x(ctx);
    x.add_term(std::move(e), c);
    return x;
}

LaurentElem LaurentElem::scalar(const LaurentCtxPtr& ctx, const RatFunc& c) {
    return monomial(ctx, Exps(ctx->ngens(), 0), c);
}

LaurentElem LaurentElem::gen(const LaurentCtxPtr& ctx, std::size_t i, int32_t power) {
    Exps e(ctx->ngens(), 0);
    e.at(i) = power;
    return monomial(ctx, std::move(e), RatFunc::constant(ctx->p, 1));
}

RatFunc LaurentElem::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RatFunc(prime()) : it->second;
}

void LaurentElem::normalize(Exps& e) const {
    const int32_t p = static_cast<int32_t>(ctx_->p);
    for (const auto& [from, onto] : ctx_->folds) {
        int32_t q = e[from] / p;
        if (e[from] % p < 0) --q;
        e[from] -= q * p;
        e[onto] += q * p;
    }
}

void LaurentElem::add_term(Exps e, const RatFunc& c) {
    if (c.is_zero()) return;
    if (e.size() != ctx_->ngens()) throw InputError("exponent vector has the wrong length");
    normalize(e);
    auto [it, fresh] = terms_.emplace(std::move(e), c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentElem LaurentElem::operator-() const {
    LaurentElem r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentElem operator+(const LaurentElem& a, const LaurentElem& b) {
    if (a.is_zero()) return b.ctx_ ? b : a;
    LaurentElem r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

LaurentElem operator*(const LaurentElem& a, const LaurentElem& b) {
    LaurentElem r(a.ctx_ ? a.ctx_ : b.ctx_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

LaurentElem LaurentElem::scaled(const RatFunc& c) const {
    LaurentElem r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentElem LaurentElem::inverse() const {
    if (terms_.size() != 1) throw NotInvertible("only monomials are invertible in the Laurent model");
    const auto& [e, c] = *terms_.begin();
    Exps ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    return monomial(ctx_, std::move(ne), c.inverse());
}

LaurentElem LaurentElem::pow(uint64_t e) const {
    LaurentElem r = scalar(ctx_, RatFunc::constant(prime(), 1)), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

std::string LaurentElem::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->names[i];
            if (e[i] != 1) mono += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
        }
        std::string coef = c.to_string();
        if (!c.is_polynomial() || c.num().term_count() > 1) coef = "(" + coef + ")";
        std::string term;
        if (mono.empty()) term = coef;
        else if (c.is_one()) term = mono;
        else term = coef + "*" + mono;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

namespace cga {

Element<LaurentElem> CoeffTraits<LaurentElem>::substitute(const LaurentElem& r,
                                                          const std::vector<Element<LaurentElem>>& g,
                                                          const DescPtr& target) {
    const auto& ctx = r.ctx();
    Element<LaurentElem> out(target, r);
    const std::function<LaurentElem(const uint32_t&)> embed = [&ctx](const uint32_t& c) {
        return LaurentElem::scalar(ctx, RatFunc::constant(ctx->p, c));
    };
    std::map<std::pair<std::size_t, int32_t>, Element<LaurentElem>> powers;
    auto gen_power = [&](std::size_t i, int32_t k) -> const Element<LaurentElem>& {
        auto it = powers.find({i, k});
        if (it != powers.end()) return it->second;
        const Element<LaurentElem>& base = g.at(1 + i);
        Element<LaurentElem> v = k >= 0 ? base.pow(static_cast<uint64_t>(k))
                                        : base.inverse().pow(static_cast<uint64_t>(-k));
        return powers.emplace(std::make_pair(i, k), std::move(v)).first->second;
    };
    for (const auto& [e, c] : r.terms()) {
        Element<LaurentElem> coef(target, r);
        if (c.is_polynomial() && c.num().is_constant()) {
            coef = Element<LaurentElem>::scalar(target, LaurentElem::scalar(ctx, c));
        } else {
            coef = horner(c.num().coeffs(), g.at(0), embed);
            if (!c.is_polynomial()) coef *= horner(c.den().coeffs(), g.at(0), embed).inverse();
        }
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) coef *= gen_power(i, e[i]);
        out += coef;
    }
    return out;
}

Element<LaurentElem> CoeffTraits<LaurentElem>::generator(const DescPtr& d, std::size_t j,
                                                         const LaurentElem& like) {
    const auto& ctx = like.ctx();
    if (j == 0) return Element<LaurentElem>::scalar(d, LaurentElem::scalar(ctx, RatFunc::t(ctx->p)));
    return Element<LaurentElem>::scalar(d, LaurentElem::gen(ctx, j - 1));
}

}  // namespace cga
}  // namespace itconn
