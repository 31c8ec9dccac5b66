#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "itconn/errors.hpp"
#include "itconn/ring.hpp"

namespace itconn::cga {

// A truncated graded algebra over a coefficient ring R, presented as the
// completion of a weighted polynomial algebra R[s_1, ..., s_n] with
// weight(s_i) >= 1. Anything of weighted degree above N is dropped.
struct Symbol {
    std::string name;
    unsigned weight = 1;
    bool operator==(const Symbol&) const = default;
};

enum class Kind { PowerSeries, Dif, Trivial, Tensor };

struct Descriptor {
    Kind kind = Kind::Trivial;
    std::vector<std::string> base_vars;  // coefficient ring generators
    std::vector<Symbol> symbols;
    unsigned N = 0;
    bool operator==(const Descriptor&) const = default;
};

using DescPtr = std::shared_ptr<const Descriptor>;

DescPtr power_series(std::vector<std::string> base_vars, unsigned N, std::string var = "T");
DescPtr trivial(std::vector<std::string> base_vars);
DescPtr tensor(const DescPtr& a, const DescPtr& b);

using Mono = std::vector<uint8_t>;

inline unsigned weight_of(const Descriptor& d, const Mono& m) {
    unsigned w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += m[i] * d.symbols[i].weight;
    return w;
}

inline void require_same(const DescPtr& a, const DescPtr& b) {
    if (a != b && !(*a == *b)) throw DescriptorMismatch("graded algebras do not match");
}

template <class C>
class Element {
public:
    Element(DescPtr d, const C& like) : d_(std::move(d)), zero_(zero_like(like)) {}

    static Element scalar(DescPtr d, const C& c) {
        Element e(d, c);
        e.add_term(Mono(e.d_->symbols.size(), 0), c);
        return e;
    }
    static Element symbol(DescPtr d, std::size_t s, const C& like, unsigned power = 1) {
        Element e(d, like);
        Mono m(e.d_->symbols.size(), 0);
        m.at(s) = static_cast<uint8_t>(power);
        e.add_term(m, one_like(like));
        return e;
    }

    const DescPtr& desc() const { return d_; }
    const C& zero() const { return zero_; }
    const std::map<Mono, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Mono& m, const C& c) {
        if (c.is_zero() || weight_of(*d_, m) > d_->N) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (fresh) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    C coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? zero_ : it->second;
    }
    // Coefficient of s_0^k, the natural accessor for power series.
    C coeff_T(unsigned k) const {
        Mono m(d_->symbols.size(), 0);
        if (!m.empty()) m[0] = static_cast<uint8_t>(k);
        else if (k) return zero_;
        return coeff(m);
    }
    C degree0() const { return coeff(Mono(d_->symbols.size(), 0)); }

    // Homogeneous component of weighted degree i.
    Element component(unsigned i) const {
        Element e(d_, zero_);
        for (const auto& [m, c] : terms_)
            if (weight_of(*d_, m) == i) e.terms_.emplace(m, c);
        return e;
    }
    unsigned max_degree() const {
        unsigned w = 0;
        for (const auto& [m, c] : terms_) w = std::max(w, weight_of(*d_, m));
        return w;
    }

    Element operator-() const {
        Element e(d_, zero_);
        for (const auto& [m, c] : terms_) e.terms_.emplace(m, -c);
        return e;
    }
    Element& operator+=(const Element& o) {
        require_same(d_, o.d_);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) { return *this += -o; }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    friend Element operator*(const Element& a, const Element& b) {
        require_same(a.d_, b.d_);
        Element r(a.d_, a.zero_);
        const auto& d = *a.d_;
        Mono m(d.symbols.size());
        for (const auto& [ma, ca] : a.terms_) {
            const unsigned wa = weight_of(d, ma);
            for (const auto& [mb, cb] : b.terms_) {
                if (wa + weight_of(d, mb) > d.N) continue;
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<uint8_t>(ma[i] + mb[i]);
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }
    Element& operator*=(const Element& o) { return *this = *this * o; }

    Element scaled(const C& c) const {
        Element e(d_, zero_);
        if (c.is_zero()) return e;
        for (const auto& [m, v] : terms_) e.add_term(m, c * v);
        return e;
    }

    Element pow(uint64_t e) const {
        Element r = scalar(d_, one_like(zero_)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    // Geometric series on the positive part; the degree-0 part must be a unit.
    Element inverse() const {
        const C c0 = degree0();
        if (c0.is_zero()) throw NotInvertible("degree-0 part of a graded element is not a unit");
        const C c0inv = c0.inverse();
        Element y = scaled(c0inv) - scalar(d_, one_like(zero_));
        Element acc = scalar(d_, one_like(zero_)), term = acc;
        const Element neg_y = -y;
        for (unsigned k = 1; k <= d_->N && !term.is_zero(); ++k) {
            term *= neg_y;
            acc += term;
        }
        return acc.scaled(c0inv);
    }

    friend bool operator==(const Element& a, const Element& b) {
        return *a.d_ == *b.d_ && a.terms_ == b.terms_;
    }

private:
    DescPtr d_;
    C zero_;
    std::map<Mono, C> terms_;
};

template <class C>
Element<C> from_int_like(const Element<C>& x, int64_t n) {
    return Element<C>::scalar(x.desc(), from_int_like(x.zero(), n));
}

// How a coefficient ring element r(t_1..t_m) is pushed through an algebra
// map that sends t_j to a given graded element.
template <class C>
struct CoeffTraits;

template <class C>
Element<C> substitute(const C& r, const std::vector<Element<C>>& gen_images, const DescPtr& target) {
    return CoeffTraits<C>::substitute(r, gen_images, target);
}

// Continuous algebra map between truncated graded algebras, fixed by the
// images of the coefficient generators and of the symbols.
template <class C>
class PositiveMap {
public:
    PositiveMap(DescPtr src, DescPtr tgt, std::vector<Element<C>> gen_images,
                std::vector<Element<C>> sym_images)
        : src_(std::move(src)), tgt_(std::move(tgt)), gens_(std::move(gen_images)),
          syms_(std::move(sym_images)) {
        if (gens_.size() != src_->base_vars.size() || syms_.size() != src_->symbols.size())
            throw DescriptorMismatch("positive map: wrong number of generator images");
        for (const auto& g : gens_) require_same(g.desc(), tgt_);
        for (std::size_t s = 0; s < syms_.size(); ++s) {
            require_same(syms_[s].desc(), tgt_);
            for (const auto& [m, c] : syms_[s].terms())
                if (weight_of(*tgt_, m) < src_->symbols[s].weight)
                    throw InputError("map is not positive on symbol " + src_->symbols[s].name);
        }
    }

    const DescPtr& source() const { return src_; }
    const DescPtr& target() const { return tgt_; }
    const std::vector<Element<C>>& gen_images() const { return gens_; }
    const std::vector<Element<C>>& sym_images() const { return syms_; }

    Element<C> apply(const Element<C>& x) const {
        require_same(x.desc(), src_);
        Element<C> out(tgt_, x.zero());
        std::vector<std::vector<Element<C>>> powers(syms_.size());
        for (const auto& [m, c] : x.terms()) {
            Element<C> term = substitute(c, gens_, tgt_);
            for (std::size_t s = 0; s < m.size() && !term.is_zero(); ++s) {
                if (!m[s]) continue;
                auto& pw = powers[s];
                if (pw.empty()) pw.push_back(Element<C>::scalar(tgt_, one_like(x.zero())));
                while (pw.size() <= m[s]) pw.push_back(pw.back() * syms_[s]);
                term *= pw[m[s]];
            }
            out += term;
        }
        return out;
    }

    Element<C> apply_coeff(const C& r) const { return substitute(r, gens_, tgt_); }

    // g^{(i)}(x): the part of g that raises degree by exactly i.
    Element<C> component_apply(unsigned i, const Element<C>& x) const {
        Element<C> out(tgt_, x.zero());
        for (unsigned j = 0; j <= x.max_degree(); ++j) {
            Element<C> xj = x.component(j);
            if (xj.is_zero()) continue;
            out += apply(xj).component(i + j);
        }
        return out;
    }

private:
    DescPtr src_, tgt_;
    std::vector<Element<C>> gens_, syms_;
};

// Sum over i of a^i times the degree-(base + i) part.
template <class C>
Element<C> weight_shift_scale(const Element<C>& x, int64_t a, unsigned base) {
    Element<C> out(x.desc(), x.zero());
    const C ac = from_int_like(x.zero(), a);
    std::vector<C> apow{one_like(x.zero())};
    for (const auto& [m, c] : x.terms()) {
        const unsigned w = weight_of(*x.desc(), m);
        if (w < base) continue;
        while (apow.size() <= w - base) apow.push_back(apow.back() * ac);
        out.add_term(m, c * apow[w - base]);
    }
    return out;
}

// a.g with (a.g)^{(i)} = a^i g^{(i)}. For an algebra map this is again the
// algebra map whose generator images are rescaled the same way.
template <class C>
PositiveMap<C> scale_action(int64_t a, const PositiveMap<C>& g) {
    std::vector<Element<C>> gens, syms;
    for (const auto& e : g.gen_images()) gens.push_back(weight_shift_scale(e, a, 0));
    for (std::size_t s = 0; s < g.sym_images().size(); ++s)
        syms.push_back(weight_shift_scale(g.sym_images()[s], a, g.source()->symbols[s].weight));
    return PositiveMap<C>(g.source(), g.target(), std::move(gens), std::move(syms));
}

template <class C>
PositiveMap<C> compose(const PositiveMap<C>& h, const PositiveMap<C>& g) {
    require_same(g.target(), h.source());
    std::vector<Element<C>> gens, syms;
    for (const auto& e : g.gen_images()) gens.push_back(h.apply(e));
    for (const auto& e : g.sym_images()) syms.push_back(h.apply(e));
    return PositiveMap<C>(g.source(), h.target(), std::move(gens), std::move(syms));
}

template <class C>
PositiveMap<C> identity_map(const DescPtr& d, const C& like) {
    std::vector<Element<C>> gens, syms;
    for (std::size_t j = 0; j < d->base_vars.size(); ++j)
        gens.push_back(CoeffTraits<C>::generator(d, j, like));
    for (std::size_t s = 0; s < d->symbols.size(); ++s) syms.push_back(Element<C>::symbol(d, s, like));
    return PositiveMap<C>(d, d, std::move(gens), std::move(syms));
}

// x ⊗ y in the graded tensor product (over the common coefficient ring).
template <class C>
Element<C> tensor_elements(const Element<C>& x, const Element<C>& y, const DescPtr& td) {
    if (td->symbols.size() != x.desc()->symbols.size() + y.desc()->symbols.size())
        throw DescriptorMismatch("tensor descriptor does not match factors");
    Element<C> out(td, x.zero());
    Mono m(td->symbols.size());
    const std::size_t nx = x.desc()->symbols.size();
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            std::copy(mx.begin(), mx.end(), m.begin());
            std::copy(my.begin(), my.end(), m.begin() + static_cast<std::ptrdiff_t>(nx));
            out.add_term(m, cx * cy);
        }
    return out;
}

template <class C>
std::string render(const Element<C>& x) {
    if (x.is_zero()) return "0";
    const auto& d = *x.desc();
    std::string s;
    for (const auto& [m, c] : x.terms()) {
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += d.symbols[i].name;
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string cs = CoeffTraits<C>::render(c, d.base_vars);
        if (!s.empty()) s += " + ";
        if (mono.empty()) s += cs;
        else if (c == one_like(c)) s += mono;
        else s += "(" + cs + ")*" + mono;
    }
    return s;
}

}  // namespace itconn::cga
