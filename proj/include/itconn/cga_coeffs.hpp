#pragma once

// Coefficient-ring adapters: how polynomials, rational functions and
// rational-coefficient polynomials are evaluated at graded elements.

#include <functional>

#include "itconn/cga.hpp"

namespace itconn::cga {

template <class C, class Coef>
Element<C> horner(const std::vector<Coef>& coeffs, const Element<C>& x,
                  const std::function<C(const Coef&)>& embed) {
    Element<C> acc(x.desc(), x.zero());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x;
        acc += Element<C>::scalar(x.desc(), embed(*it));
    }
    return acc;
}

template <>
struct CoeffTraits<MPoly> {
    static Element<MPoly> substitute(const MPoly& r, const std::vector<Element<MPoly>>& g,
                                     const DescPtr& target) {
        Element<MPoly> out(target, r);
        std::vector<std::vector<Element<MPoly>>> pw(g.size());
        for (const auto& [e, c] : r.terms()) {
            Element<MPoly> term =
                Element<MPoly>::scalar(target, MPoly::constant(r.prime(), r.nvars(), c));
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (!e[j]) continue;
                if (pw[j].empty()) pw[j].push_back(Element<MPoly>::scalar(target, one_like(r)));
                while (pw[j].size() <= e[j]) pw[j].push_back(pw[j].back() * g.at(j));
                term *= pw[j][e[j]];
            }
            out += term;
        }
        return out;
    }
    static Element<MPoly> generator(const DescPtr& d, std::size_t j, const MPoly& like) {
        return Element<MPoly>::scalar(d, MPoly::var(like.prime(), like.nvars(), j));
    }
    static std::string render(const MPoly& c, const std::vector<std::string>& names) {
        return c.to_string(names.empty() ? default_var_names(c.nvars()) : names);
    }
};

template <>
struct CoeffTraits<RatFunc> {
    static Element<RatFunc> substitute(const RatFunc& r, const std::vector<Element<RatFunc>>& g,
                                       const DescPtr& target) {
        const uint32_t p = r.prime();
        if (r.is_polynomial() && r.num().is_constant()) return Element<RatFunc>::scalar(target, r);
        const std::function<RatFunc(const uint32_t&)> embed = [p](const uint32_t& c) {
            return RatFunc::constant(p, c);
        };
        Element<RatFunc> num = horner(r.num().coeffs(), g.at(0), embed);
        if (r.is_polynomial()) return num;
        Element<RatFunc> den = horner(r.den().coeffs(), g.at(0), embed);
        return num * den.inverse();
    }
    static Element<RatFunc> generator(const DescPtr& d, std::size_t, const RatFunc& like) {
        return Element<RatFunc>::scalar(d, RatFunc::t(like.prime()));
    }
    static std::string render(const RatFunc& c, const std::vector<std::string>& names) {
        return c.to_string(names.empty() ? "t" : names[0]);
    }
};

template <>
struct CoeffTraits<QPoly> {
    static Element<QPoly> substitute(const QPoly& r, const std::vector<Element<QPoly>>& g,
                                     const DescPtr& target) {
        if (r.degree() <= 0) return Element<QPoly>::scalar(target, r);
        const std::function<QPoly(const mpq_class&)> embed = [](const mpq_class& c) {
            return QPoly::constant(c);
        };
        return horner(r.coeffs(), g.at(0), embed);
    }
    static Element<QPoly> generator(const DescPtr& d, std::size_t, const QPoly&) {
        return Element<QPoly>::scalar(d, QPoly::t());
    }
    static std::string render(const QPoly& c, const std::vector<std::string>& names) {
        return c.to_string(names.empty() ? "t" : names[0]);
    }
};

}  // namespace itconn::cga
