#include "itconn/hderiv.hpp"

namespace itconn::hderiv {

HigherDerivation<MPoly> phi_t(uint32_t p, std::size_t m, std::size_t j, unsigned N) {
    auto d = cga::power_series(default_var_names(m), N);
    const MPoly like(p, m);
    auto psi = identity_hd(DomainKind::Polynomial, d, like);
    std::vector<Element<MPoly>> imgs = psi.images();
    imgs.at(j) += Element<MPoly>::symbol(d, 0, like);
    return HigherDerivation<MPoly>(DomainKind::Polynomial, d, std::move(imgs));
}

HigherDerivation<RatFunc> phi_t_rational(uint32_t p, unsigned N) {
    auto d = cga::power_series({"t"}, N);
    const RatFunc like(p);
    Element<RatFunc> img = Element<RatFunc>::scalar(d, RatFunc::t(p)) + Element<RatFunc>::symbol(d, 0, like);
    return HigherDerivation<RatFunc>(DomainKind::Rational, d, {img});
}

namespace {

Element<ExtElem> lift(const Element<RatFunc>& x, const ExtCtxPtr& ext, const cga::DescPtr& d) {
    Element<ExtElem> out(d, ExtElem::from_base(ext, RatFunc(ext->p)));
    for (const auto& [m, c] : x.terms()) out.add_term(m, ExtElem::from_base(ext, c));
    return out;
}

}  // namespace

HigherDerivation<ExtElem> newton_extend(const HigherDerivation<RatFunc>& psi, const ExtCtxPtr& ext) {
    const unsigned N = psi.order();
    auto d = cga::power_series({"t", "y"}, N);
    const ExtElem zero = ExtElem::from_base(ext, RatFunc(ext->p));
    const ExtElem y = ExtElem::y(ext);

    // m'(y) must be a unit
    ExtElem dm = zero, ypow = from_int_like(zero, 1);
    for (std::size_t i = 1; i < ext->minpoly.size(); ++i) {
        dm += ExtElem::from_base(ext, ext->minpoly[i] * RatFunc::constant(ext->p, static_cast<int64_t>(i))) * ypow;
        ypow *= y;
    }
    try {
        (void)dm.inverse();
    } catch (const NotInvertible&) {
        throw NotEtale("derivative of the defining polynomial is not a unit at y");
    }

    std::vector<Element<ExtElem>> coeffs;  // psi applied to the coefficients of m
    for (const auto& c : ext->minpoly) coeffs.push_back(lift(psi.apply(c), ext, d));

    Element<ExtElem> z = Element<ExtElem>::scalar(d, y);
    for (unsigned step = 0; step < N; ++step) {
        Element<ExtElem> val(d, zero), der(d, zero), zp = Element<ExtElem>::scalar(d, from_int_like(zero, 1));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            val += coeffs[i] * zp;
            if (i + 1 < coeffs.size())
                der += coeffs[i + 1] * zp * Element<ExtElem>::scalar(d, from_int_like(zero, static_cast<int64_t>(i + 1)));
            zp *= z;
        }
        if (val.is_zero()) break;
        z -= val * der.inverse();
    }
    return HigherDerivation<ExtElem>(DomainKind::Extension, d, {lift(psi.images()[0], ext, d), z});
}

HigherDerivation<QPoly> from_derivation(const QPoly& g, unsigned N) {
    auto d = cga::power_series({"t"}, N);
    Element<QPoly> img(d, QPoly());
    QPoly dk = QPoly::t();
    mpz_class fact = 1;
    for (unsigned k = 0; k <= N; ++k) {
        if (k > 0) {
            dk = dk.derivative() * g;
            fact *= k;
        }
        img.add_term({static_cast<uint8_t>(k)}, dk.scaled(mpq_class(1) / mpq_class(fact)));
    }
    return HigherDerivation<QPoly>(DomainKind::RationalQ, d, {img});
}

QPoly first_component(const HigherDerivation<QPoly>& psi) { return psi.images().at(0).coeff_T(1); }

}  // namespace itconn::hderiv
