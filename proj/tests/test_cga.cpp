#include "doctest.h"
#include "itconn/cga.hpp"
#include "itconn/cga_coeffs.hpp"
#include "test_support.hpp"

using namespace itconn;
using cga::Element;
using cga::PositiveMap;

namespace {

using E = Element<MPoly>;

E T_pow(const cga::DescPtr& d, uint32_t p, unsigned k) {
    return E::symbol(d, 0, MPoly(p, 1), k);
}
E scalar(const cga::DescPtr& d, uint32_t p, int64_t c) {
    return E::scalar(d, MPoly::constant(p, 1, c));
}

// Algebra endomorphism of F_p[t][[T]]: t -> t + (positive series), T -> positive series.
PositiveMap<MPoly> random_map(std::mt19937_64& rng, const cga::DescPtr& d, uint32_t p) {
    E t = E::scalar(d, MPoly::var(p, 1, 0));
    return PositiveMap<MPoly>(d, d, {t + random_series(rng, d, p, 1, 1)},
                              {random_series(rng, d, p, 1, 1)});
}

}  // namespace

TEST_CASE("truncated products in F_2[[T]]") {
    auto d = cga::power_series({"t"}, 2);
    E x = scalar(d, 2, 1) + T_pow(d, 2, 1);
    CHECK(x * x == scalar(d, 2, 1) + T_pow(d, 2, 2));
    CHECK(x * scalar(d, 2, 1) == x);
    CHECK((T_pow(d, 2, 2) * T_pow(d, 2, 1)).is_zero());
}

TEST_CASE("graded tensor products") {
    auto d = cga::power_series({"t"}, 4);
    auto td = cga::tensor(d, d);
    const E one = scalar(d, 3, 1), T = T_pow(d, 3, 1);
    CHECK(cga::tensor_elements(one, one, td) == E::scalar(td, MPoly::constant(3, 1, 1)));
    E s = cga::tensor_elements(T, one, td) + cga::tensor_elements(one, T, td);
    CHECK(s.component(1).terms().size() == 2);
    E tt = cga::tensor_elements(T, T, td);
    CHECK(tt == tt.component(2));
}

TEST_CASE("ring axioms and the convolution formula on random samples") {
    auto rng = test_rng(20);
    for (uint32_t p : {2u, 3u, 5u}) {
        auto d = cga::power_series({"t"}, 6);
        for (int i = 0; i < 20; ++i) {
            E x = random_series(rng, d, p, 1), y = random_series(rng, d, p, 1),
              z = random_series(rng, d, p, 1);
            CHECK(x * y == y * x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            E xy = x * y;
            for (unsigned k = 0; k <= d->N; ++k) {
                MPoly conv(p, 1);
                for (unsigned j = 0; j <= k; ++j) conv += x.coeff_T(j) * y.coeff_T(k - j);
                REQUIRE(xy.coeff_T(k) == conv);
            }
        }
    }
}

TEST_CASE("inverse of a unit series") {
    auto rng = test_rng(21);
    auto d = cga::power_series({"t"}, 7);
    for (int i = 0; i < 20; ++i) {
        E x = scalar(d, 5, 1 + static_cast<int64_t>(rng() % 4)) + random_series(rng, d, 5, 1, 1);
        CHECK(x * x.inverse() == scalar(d, 5, 1));
    }
    CHECK_THROWS_AS(T_pow(d, 5, 1).inverse(), NotInvertible);
}

TEST_CASE("scale action: unit, zero, monoid law and componentwise formula") {
    auto rng = test_rng(22);
    const uint32_t p = 5;
    auto d = cga::power_series({"t"}, 5);
    for (int i = 0; i < 10; ++i) {
        auto g = random_map(rng, d, p);
        E x = random_series(rng, d, p, 1);
        CHECK(cga::scale_action(1, g).apply(x) == g.apply(x));
        CHECK(cga::scale_action(0, g).apply(x) == g.component_apply(0, x));
        for (int64_t a = 0; a < p; ++a) {
            for (int64_t b = 0; b < p; ++b) {
                auto lhs = cga::scale_action(a * b, g);
                auto rhs = cga::scale_action(a, cga::scale_action(b, g));
                REQUIRE(lhs.apply(x) == rhs.apply(x));
            }
            E oracle(d, MPoly(p, 1));
            int64_t ai = 1;
            for (unsigned k = 0; k <= d->N; ++k, ai *= a)
                oracle += g.component_apply(k, x).scaled(MPoly::constant(p, 1, ai));
            REQUIRE(cga::scale_action(a, g).apply(x) == oracle);
        }
    }
}

TEST_CASE("composition: identity, associativity and scale equivariance") {
    auto rng = test_rng(23);
    const uint32_t p = 3;
    auto d = cga::power_series({"t"}, 5);
    const auto id = cga::identity_map(d, MPoly(p, 1));
    for (int i = 0; i < 8; ++i) {
        auto f = random_map(rng, d, p), g = random_map(rng, d, p), h = random_map(rng, d, p);
        E x = random_series(rng, d, p, 1);
        CHECK(cga::compose(id, g).apply(x) == g.apply(x));
        CHECK(cga::compose(h, g).apply(x) == h.apply(g.apply(x)));
        CHECK(cga::compose(cga::compose(h, g), f).apply(x) ==
              cga::compose(h, cga::compose(g, f)).apply(x));
        for (int64_t a = 0; a < p; ++a)
            CHECK(cga::scale_action(a, cga::compose(h, g)).apply(x) ==
                  cga::compose(cga::scale_action(a, h), cga::scale_action(a, g)).apply(x));
        // (h g)^{(1)} = h^{(0)} g^{(1)} + h^{(1)} g^{(0)}
        auto hg = cga::compose(h, g);
        for (unsigned j = 0; j <= 2; ++j) {
            E xj = x.component(j);
            E lhs = hg.component_apply(1, xj);
            E rhs = h.component_apply(0, g.component_apply(1, xj)) +
                    h.component_apply(1, g.component_apply(0, xj));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("maps that lower degree are rejected") {
    auto d = cga::power_series({"t"}, 3);
    E t = E::scalar(d, MPoly::var(2, 1, 0));
    CHECK_THROWS_AS(PositiveMap<MPoly>(d, d, {t}, {scalar(d, 2, 1)}), InputError);
    auto other = cga::power_series({"t"}, 4);
    CHECK_THROWS_AS(scalar(d, 2, 1) * scalar(other, 2, 1), DescriptorMismatch);
}

TEST_CASE("rendering") {
    auto d = cga::power_series({"t"}, 3);
    E x = E::scalar(d, MPoly::var(3, 1, 0)) + T_pow(d, 3, 1) + T_pow(d, 3, 2).scaled(MPoly::constant(3, 1, 2));
    CHECK(cga::render(x) == "t + T + (2)*T^2");
}
