#include "doctest.h"
#include "itconn/hderiv.hpp"
#include "itconn/parse.hpp"
#include "test_support.hpp"

using namespace itconn;
using namespace itconn::hderiv;
using cga::Element;

namespace {

HigherDerivation<MPoly> random_hd(std::mt19937_64& rng, uint32_t p, std::size_t m, unsigned N) {
    auto d = cga::power_series(default_var_names(m), N);
    std::vector<Element<MPoly>> imgs;
    for (std::size_t j = 0; j < m; ++j) {
        Element<MPoly> e = Element<MPoly>::scalar(d, MPoly::var(p, m, j));
        for (unsigned k = 1; k <= N; ++k) e.add_term({static_cast<uint8_t>(k)}, random_mpoly(rng, p, m, 2, 2));
        imgs.push_back(e);
    }
    return HigherDerivation<MPoly>(DomainKind::Polynomial, d, imgs);
}

HigherDerivation<MPoly> t_plus_T_power(uint32_t p, unsigned e, unsigned N) {
    auto d = cga::power_series({"t"}, N);
    Element<MPoly> img = Element<MPoly>::scalar(d, MPoly::var(p, 1, 0)) +
                         Element<MPoly>::symbol(d, 0, MPoly(p, 1), e);
    return HigherDerivation<MPoly>(DomainKind::Polynomial, d, {img});
}

}  // namespace

TEST_CASE("Taylor derivation evaluated on small examples") {
    auto phi = phi_t(2, 1, 0, 4);
    const MPoly t2 = parse_mpoly("t^2", 2, 1);
    CHECK(phi.apply(t2, 1).is_zero());
    CHECK(phi.apply(t2, 2) == MPoly::constant(2, 1, 1));
    for (unsigned k = 1; k <= 4; ++k) CHECK(phi.apply(MPoly::constant(2, 1, 1), k).is_zero());
}

TEST_CASE("Taylor derivation of 1/(1+t) has the geometric closed form") {
    for (uint32_t p : {2u, 3u, 7u}) {
        auto phi = phi_t_rational(p, 12);
        const RatFunc f = parse_ratfunc("1/(1+t)", p);
        auto img = phi.apply(f);
        for (unsigned k = 0; k <= 12; ++k)
            CHECK(img.coeff_T(k) == RatFunc::constant(p, k % 2 ? -1 : 1) * f.pow(k + 1));
    }
}

TEST_CASE("Taylor derivations are iterative") {
    for (uint32_t p : {2u, 3u, 5u}) {
        CHECK(is_iterative(phi_t(p, 1, 0, 16)).verdict);
        CHECK(is_iterative(phi_t(p, 2, 1, 10)).verdict);
        CHECK(is_iterative(phi_t_rational(p, 12)).verdict);
    }
}

TEST_CASE("t + T^(2p-1) is not iterative and fails first at inner 1, outer 2p-2") {
    for (uint32_t p : {2u, 3u, 5u}) {
        const unsigned e = 2 * p - 1;
        auto rep = is_iterative(t_plus_T_power(p, e, e));
        REQUIRE_FALSE(rep.verdict);
        REQUIRE(rep.first_failure);
        CHECK(rep.first_failure->inner == 1);
        CHECK(rep.first_failure->outer == 2 * p - 2);
        CHECK(rep.checked_order == e);
    }
    auto rep = is_iterative(t_plus_T_power(2, 3, 3));
    CHECK(rep.first_failure->lhs == "0");
    CHECK(rep.first_failure->rhs == "1");
}

TEST_CASE("the scalar-action law alone does not imply iterativity over F_2") {
    auto psi = t_plus_T_power(2, 3, 6);
    CHECK_FALSE(is_iterative(psi).verdict);
    for (int64_t a = 0; a < 2; ++a)
        for (int64_t b = 0; b < 2; ++b)
            CHECK(multiply_hd(psi.scaled(a), psi.scaled(b)) == psi.scaled(a + b));
}

TEST_CASE("group law") {
    auto phi = phi_t(2, 1, 0, 8);
    auto id = identity_hd(DomainKind::Polynomial, phi.codomain(), MPoly(2, 1));
    CHECK(multiply_hd(phi, phi) == id);
    CHECK(invert_hd(id) == id);

    auto phi3 = phi_t(3, 1, 0, 8);
    auto inv = invert_hd(phi3);
    Element<MPoly> expect = Element<MPoly>::scalar(phi3.codomain(), MPoly::var(3, 1, 0)) -
                            Element<MPoly>::symbol(phi3.codomain(), 0, MPoly(3, 1));
    CHECK(inv.images()[0] == expect);

    auto rng = test_rng(30);
    for (uint32_t p : {2u, 3u}) {
        for (int i = 0; i < 6; ++i) {
            auto a = random_hd(rng, p, 2, 5), b = random_hd(rng, p, 2, 5), c = random_hd(rng, p, 2, 5);
            auto idp = identity_hd(DomainKind::Polynomial, a.codomain(), MPoly(p, 2));
            CHECK(multiply_hd(multiply_hd(a, b), c) == multiply_hd(a, multiply_hd(b, c)));
            CHECK(multiply_hd(a, idp) == a);
            CHECK(multiply_hd(idp, a) == a);
            auto ai = invert_hd(a);
            CHECK(multiply_hd(ai, a) == idp);
            CHECK(multiply_hd(a, ai) == idp);
            CHECK(invert_hd(ai) == a);
        }
    }
}

TEST_CASE("scalar action on an iterative derivation is additive") {
    for (uint32_t p : {2u, 3u, 5u}) {
        auto phi = phi_t(p, 1, 0, 10);
        for (int64_t a = 0; a < p; ++a)
            for (int64_t b = 0; b < p; ++b)
                CHECK(multiply_hd(phi.scaled(a), phi.scaled(b)) == phi.scaled(a + b));
    }
}

TEST_CASE("product of commuting Taylor derivations stays iterative") {
    for (uint32_t p : {2u, 3u}) {
        auto prod = multiply_hd(phi_t(p, 2, 0, 10), phi_t(p, 2, 1, 10));
        CHECK(is_iterative(prod).verdict);
        CHECK(multiply_hd(phi_t(p, 2, 1, 10), phi_t(p, 2, 0, 10)) == prod);
    }
}

TEST_CASE("Newton extension over F_2 for y^2 + y + t") {
    const unsigned N = 20;
    auto ext = parse_extension("X^2+X+t", 2);
    auto psi_e = newton_extend(phi_t_rational(2, N), ext);
    const auto& img = psi_e.images()[1];
    CHECK(img.coeff_T(0) == ExtElem::y(ext));
    for (unsigned k = 1; k <= N; ++k) {
        const bool power_of_two = (k & (k - 1)) == 0;
        CHECK(img.coeff_T(k) == from_int_like(ExtElem::y(ext), power_of_two ? 1 : 0));
    }
    CHECK(is_iterative(psi_e).verdict);
}

TEST_CASE("Newton extension over F_3 for a square root of 1 + t") {
    const unsigned N = 12;
    auto ext = parse_extension("X^2-(1+t)", 3);
    auto psi_e = newton_extend(phi_t_rational(3, N), ext);
    const auto& z = psi_e.images()[1];
    const auto& d = z.desc();
    const ExtElem one = from_int_like(ExtElem::y(ext), 1);
    Element<ExtElem> target = Element<ExtElem>::scalar(d, one + ExtElem::from_base(ext, RatFunc::t(3))) +
                              Element<ExtElem>::symbol(d, 0, one);
    CHECK(z * z == target);
    CHECK(is_iterative(psi_e).verdict);
    // apply respects the relation y^2 = 1 + t on a rational combination
    const ExtElem r = ExtElem::y(ext) * ExtElem::from_base(ext, parse_ratfunc("1/(1+t)", 3));
    CHECK(psi_e.apply(r * r) == psi_e.apply(r) * psi_e.apply(r));
}

TEST_CASE("Newton extension edge cases") {
    auto phi = phi_t_rational(3, 6);
    auto trivial = parse_extension("X-(t^2+1)", 3);
    auto psi_e = newton_extend(phi, trivial);
    auto expect = phi.apply(parse_ratfunc("t^2+1", 3));
    for (unsigned k = 0; k <= 6; ++k)
        CHECK(psi_e.images()[1].coeff_T(k) == ExtElem::from_base(trivial, expect.coeff_T(k)));
    CHECK_THROWS_AS(newton_extend(phi_t_rational(2, 4), parse_extension("X^2+t", 2)), NotEtale);
}

TEST_CASE("char 0: derivations and iterative derivations correspond") {
    auto phi = from_derivation(QPoly({0, 1}).scaled(0) + QPoly::constant(1), 6);  // d/dt
    auto d = phi.codomain();
    CHECK(phi.images()[0] == Element<QPoly>::scalar(d, QPoly::t()) + Element<QPoly>::symbol(d, 0, QPoly()));
    auto euler = from_derivation(QPoly::t(), 6);  // t d/dt
    CHECK(euler.images()[0].coeff_T(2) == QPoly::t().scaled(mpq_class(1, 2)));
    auto zero = from_derivation(QPoly(), 6);
    CHECK(zero == identity_hd(DomainKind::RationalQ, d, QPoly()));

    for (const QPoly& g : {QPoly::constant(1), QPoly::t(), QPoly({1, 0, 3}), QPoly({0, mpq_class(1, 2), 0, 1})}) {
        auto psi = from_derivation(g, 7);
        CHECK(is_iterative(psi).verdict);
        CHECK(first_component(psi) == g);
        CHECK(from_derivation(first_component(psi), 7) == psi);
    }
}
