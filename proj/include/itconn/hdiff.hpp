#pragma once

#include <string>
#include <string_view>

#include "itconn/cga.hpp"
#include "itconn/cga_coeffs.hpp"
#include "itconn/hderiv.hpp"
#include "itconn/parse.hpp"

// Truncated algebra of higher differentials over R = K[t_1..t_m] (or F_p(t)):
// the completed polynomial algebra in symbols d^{(i)}t_j of weight i.
namespace itconn::hdiff {

using cga::Element;

cga::DescPtr dif_descriptor(std::vector<std::string> base_vars, unsigned N);

inline std::size_t symbol_index(const cga::Descriptor& d, unsigned i, std::size_t j) {
    if (i == 0 || i > d.N || j >= d.base_vars.size()) throw InputError("no such differential symbol");
    return j * d.N + (i - 1);
}

template <class C>
Element<C> d_symbol(const cga::DescPtr& d, unsigned i, std::size_t j, const C& like) {
    return Element<C>::symbol(d, symbol_index(*d, i, j), like);
}

// t_j + sum_{i>=1} a^i d^{(i)}t_j
template <class C>
std::vector<Element<C>> shifted_generators(const cga::DescPtr& d, const C& like, int64_t a) {
    std::vector<Element<C>> out;
    const C ac = from_int_like(like, a);
    for (std::size_t j = 0; j < d->base_vars.size(); ++j) {
        Element<C> e = cga::CoeffTraits<C>::generator(d, j, like);
        C apow = one_like(like);
        for (unsigned i = 1; i <= d->N; ++i) {
            apow = apow * ac;
            e += d_symbol(d, i, j, like).scaled(apow);
        }
        out.push_back(std::move(e));
    }
    return out;
}

// The universal higher derivation d_R(r) = r(t + sum_i d^{(i)}t).
template <class C>
Element<C> d_R(const C& r, const cga::DescPtr& d) {
    return cga::substitute(r, shifted_generators(d, r, 1), d);
}
template <class C>
Element<C> d_R(const C& r, const cga::DescPtr& d, unsigned k) {
    return d_R(r, d).component(k);
}

// a.d_Dif: continuous algebra endomorphism of Dif with
//   d^{(i)}t_j -> sum_l a^l C(i+l, l) d^{(i+l)}t_j,   r -> (a.d_R)(r).
template <class C>
cga::PositiveMap<C> d_Dif_map(int64_t a, const cga::DescPtr& d, const C& like) {
    std::vector<Element<C>> syms(d->symbols.size(), Element<C>(d, like));
    const C ac = from_int_like(like, a);
    for (std::size_t j = 0; j < d->base_vars.size(); ++j)
        for (unsigned i = 1; i <= d->N; ++i) {
            Element<C> e(d, like);
            C apow = one_like(like);
            for (unsigned l = 0; i + l <= d->N; ++l) {
                e += d_symbol(d, i + l, j, like).scaled(apow * binom_like(like, i + l, l));
                apow = apow * ac;
            }
            syms[symbol_index(*d, i, j)] = std::move(e);
        }
    return cga::PositiveMap<C>(d, d, shifted_generators(d, like, a), std::move(syms));
}

template <class C>
Element<C> d_Dif_scaled(int64_t a, const Element<C>& w) {
    return d_Dif_map(a, w.desc(), w.zero()).apply(w);
}

// psi~: Dif -> R[[T]], R-linear, d^{(k)}t_j -> psi^{(k)}(t_j) T^k.
template <class C>
cga::PositiveMap<C> evaluation_map(const hderiv::HigherDerivation<C>& psi, const cga::DescPtr& dif) {
    if (dif->base_vars != psi.codomain()->base_vars)
        throw DescriptorMismatch("derivation and differential algebra have different variables");
    const auto& tgt = psi.codomain();
    const C& like = psi.like();
    std::vector<Element<C>> gens, syms(dif->symbols.size(), Element<C>(tgt, like));
    for (std::size_t j = 0; j < dif->base_vars.size(); ++j) {
        gens.push_back(cga::CoeffTraits<C>::generator(tgt, j, like));
        for (unsigned k = 1; k <= dif->N; ++k) {
            Element<C> e(tgt, like);
            if (k <= tgt->N) e.add_term({static_cast<uint8_t>(k)}, psi.images()[j].coeff_T(k));
            syms[symbol_index(*dif, k, j)] = std::move(e);
        }
    }
    return cga::PositiveMap<C>(dif, tgt, std::move(gens), std::move(syms));
}

template <class C>
Element<C> evaluate(const hderiv::HigherDerivation<C>& psi, const Element<C>& w) {
    return evaluation_map(psi, w.desc()).apply(w);
}

// Parses expressions such as "1 + t*d1_t + d1_t^2" into Dif.
template <class C>
struct DifParseCtx {
    cga::DescPtr d;
    C like;

    Element<C> constant(int64_t c) const { return Element<C>::scalar(d, from_int_like(like, c)); }
    Element<C> variable(std::string_view name) const {
        for (std::size_t j = 0; j < d->base_vars.size(); ++j)
            if (d->base_vars[j] == name) return cga::CoeffTraits<C>::generator(d, j, like);
        for (std::size_t s = 0; s < d->symbols.size(); ++s)
            if (d->symbols[s].name == name) return Element<C>::symbol(d, s, like);
        throw InputError("unknown symbol '" + std::string(name) + "'");
    }
    Element<C> divide(const Element<C>& a, const Element<C>& b) const {
        try {
            return a * b.inverse();
        } catch (const NotInvertible&) {
            throw InputError("division by a non-unit in a differential expression");
        }
    }
    Element<C> power(const Element<C>& a, int64_t e) const {
        if (e >= 0) return a.pow(static_cast<uint64_t>(e));
        return divide(constant(1), a.pow(static_cast<uint64_t>(-e)));
    }
};

template <class C>
Element<C> parse_dif(std::string_view src, const cga::DescPtr& d, const C& like) {
    DifParseCtx<C> ctx{d, like};
    return parse_expression<Element<C>>(src, ctx);
}

}  // namespace itconn::hdiff
