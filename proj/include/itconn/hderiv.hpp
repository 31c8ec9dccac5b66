#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itconn/cga.hpp"
#include "itconn/cga_coeffs.hpp"
#include "itconn/extension.hpp"

namespace itconn::hderiv {

using cga::Element;

enum class DomainKind { Polynomial, Rational, Extension, RationalQ, Laurent };

// A higher derivation psi: R -> R[[T]] (truncated at N) with psi^{(0)} = id,
// stored through the images of the ring generators.
template <class C>
class HigherDerivation {
public:
    HigherDerivation(DomainKind kind, cga::DescPtr codomain, std::vector<Element<C>> images)
        : kind_(kind), tgt_(std::move(codomain)), images_(std::move(images)) {
        if (tgt_->kind != cga::Kind::PowerSeries)
            throw DescriptorMismatch("higher derivations here take values in R[[T]]");
        if (images_.size() != tgt_->base_vars.size())
            throw InputError("one image per domain generator is required");
        const C& like = images_.at(0).zero();
        for (std::size_t j = 0; j < images_.size(); ++j)
            if (!(images_[j].degree0() == cga::CoeffTraits<C>::generator(tgt_, j, like).degree0()))
                throw InputError("augmentation fails: image of " + tgt_->base_vars[j] +
                                 " must reduce to the generator at T = 0");
    }

    DomainKind kind() const { return kind_; }
    const cga::DescPtr& codomain() const { return tgt_; }
    unsigned order() const { return tgt_->N; }
    const std::vector<Element<C>>& images() const { return images_; }
    const C& like() const { return images_.at(0).zero(); }

    Element<C> apply(const C& r) const { return cga::substitute(r, images_, tgt_); }
    C apply(const C& r, unsigned k) const { return apply(r).coeff_T(k); }

    // psi[[T]]: the endomorphism of R[[T]] acting on coefficients, T fixed.
    cga::PositiveMap<C> extended() const {
        return cga::PositiveMap<C>(tgt_, tgt_, images_, {Element<C>::symbol(tgt_, 0, like())});
    }

    // a.psi
    HigherDerivation scaled(int64_t a) const {
        std::vector<Element<C>> imgs;
        for (const auto& e : images_) imgs.push_back(cga::weight_shift_scale(e, a, 0));
        return HigherDerivation(kind_, tgt_, std::move(imgs));
    }

    friend bool operator==(const HigherDerivation& a, const HigherDerivation& b) {
        return a.images_ == b.images_;
    }

private:
    DomainKind kind_;
    cga::DescPtr tgt_;
    std::vector<Element<C>> images_;
};

template <class C>
HigherDerivation<C> identity_hd(DomainKind kind, const cga::DescPtr& d, const C& like) {
    std::vector<Element<C>> imgs;
    for (std::size_t j = 0; j < d->base_vars.size(); ++j)
        imgs.push_back(cga::CoeffTraits<C>::generator(d, j, like));
    return HigherDerivation<C>(kind, d, std::move(imgs));
}

// The Taylor derivation in direction t_j over F_p[t_1..t_m].
HigherDerivation<MPoly> phi_t(uint32_t p, std::size_t m, std::size_t j, unsigned N);
// The Taylor derivation on F_p(t).
HigherDerivation<RatFunc> phi_t_rational(uint32_t p, unsigned N);

struct IterativityFailure {
    unsigned inner = 0;  // i in psi^{(k)}(psi^{(i)}(t_j))
    unsigned outer = 0;  // k
    std::size_t generator = 0;
    std::string lhs, rhs;
};

struct IterativityReport {
    bool verdict = true;
    unsigned checked_order = 0;
    std::optional<IterativityFailure> first_failure;
};

// Checks psi^{(k)}(psi^{(i)}(x)) = C(i+k, i) psi^{(i+k)}(x) on every ring
// generator x for 1 <= i, k and i + k <= N. Both sides are components of
// algebra maps out of the ring of higher differentials, so agreement on
// generators is agreement everywhere; for a rational function field the
// unique extension from the polynomial ring inherits the rule.
// Scan order: total i + k ascending, then i ascending.
template <class C>
IterativityReport is_iterative(const HigherDerivation<C>& psi) {
    IterativityReport rep;
    const unsigned N = psi.order();
    rep.checked_order = N;
    const auto& imgs = psi.images();
    // psi applied to each component psi^{(i)}(x_j)
    std::vector<std::vector<Element<C>>> inner(imgs.size());
    for (std::size_t j = 0; j < imgs.size(); ++j)
        for (unsigned i = 0; i <= N; ++i) inner[j].push_back(psi.apply(imgs[j].coeff_T(i)));
    for (unsigned s = 2; s <= N; ++s)
        for (unsigned i = 1; i < s; ++i) {
            const unsigned k = s - i;
            for (std::size_t j = 0; j < imgs.size(); ++j) {
                C lhs = inner[j][i].coeff_T(k);
                C rhs = binom_like(lhs, s, i) * imgs[j].coeff_T(s);
                if (!(lhs == rhs)) {
                    rep.verdict = false;
                    rep.first_failure = IterativityFailure{
                        i, k, j, cga::CoeffTraits<C>::render(lhs, psi.codomain()->base_vars),
                        cga::CoeffTraits<C>::render(rhs, psi.codomain()->base_vars)};
                    return rep;
                }
            }
        }
    return rep;
}

// psi1 . psi2 := psi1[[T]] o psi2
template <class C>
HigherDerivation<C> multiply_hd(const HigherDerivation<C>& psi1, const HigherDerivation<C>& psi2) {
    cga::require_same(psi1.codomain(), psi2.codomain());
    const auto ext = psi1.extended();
    std::vector<Element<C>> imgs;
    for (const auto& e : psi2.images()) imgs.push_back(ext.apply(e));
    return HigherDerivation<C>(psi2.kind(), psi2.codomain(), std::move(imgs));
}

// psi' with psi'[[T]] o psi = id. Degree n of psi'(t_j) is
// -sum_{k=1..n} psi'^{(n-k)}(c_k) where psi(t_j) = sum c_k T^k; the right side
// only uses components of psi' below n.
template <class C>
HigherDerivation<C> invert_hd(const HigherDerivation<C>& psi) {
    const auto& d = psi.codomain();
    std::vector<Element<C>> cur;
    for (std::size_t j = 0; j < psi.images().size(); ++j)
        cur.push_back(cga::CoeffTraits<C>::generator(d, j, psi.like()));
    for (unsigned n = 1; n <= d->N; ++n) {
        std::vector<Element<C>> next = cur;
        for (std::size_t j = 0; j < cur.size(); ++j) {
            C acc = zero_like(psi.like());
            for (unsigned k = 1; k <= n; ++k) {
                const C ck = psi.images()[j].coeff_T(k);
                if (ck.is_zero()) continue;
                acc -= cga::substitute(ck, cur, d).coeff_T(n - k);
            }
            next[j].add_term({static_cast<uint8_t>(n)}, acc);
        }
        cur = std::move(next);
    }
    return HigherDerivation<C>(psi.kind(), d, std::move(cur));
}

// Unique extension of psi from F_p(t) to F_p(t)[y]/(m): start at y and run
// N Newton steps z <- z - m^psi(z) / (m^psi)'(z) in (R[y]/(m))[[T]].
HigherDerivation<ExtElem> newton_extend(const HigherDerivation<RatFunc>& psi, const ExtCtxPtr& ext);

// phi_D(t) = sum_k D^k(t)/k! T^k for the derivation D(f) = f' * g on Q[t].
HigherDerivation<QPoly> from_derivation(const QPoly& g, unsigned N);
// The derivation psi^{(1)}, returned as its value on t.
QPoly first_component(const HigherDerivation<QPoly>& psi);

}  // namespace itconn::hderiv
