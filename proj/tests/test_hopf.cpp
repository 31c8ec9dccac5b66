#include "doctest.h"
#include "itconn/errors.hpp"
#include "itconn/hopf.hpp"

using namespace itconn;
using namespace itconn::hopf;

TEST_CASE("presets satisfy the Hopf axioms") {
    for (uint32_t p : {2u, 3u, 5u}) {
        CHECK(check_axioms(mu(p, p)).all());
        CHECK(check_axioms(mu(p, 4)).all());
        CHECK(check_axioms(alpha(p)).all());
        CHECK(check_axioms(product(mu(p, p), alpha(p))).all());
        CHECK(check_axioms(trivial_group(p)).all());
    }
    const HopfAlgebra mm = product(mu(2, 2, "x1"), mu(2, 2, "x2"));
    CHECK(mm.dim == 4);
    CHECK(mm.names[3] == "x1*x2");
}

TEST_CASE("broken structure constants are rejected") {
    HopfAlgebra h = mu(3, 3);
    h.comult[1] = h.comult[2];
    CHECK_FALSE(check_axioms(h).all());
    CHECK_THROWS_AS(product(h, mu(3, 1)), InputError);
    HopfAlgebra g = alpha(3);
    g.antipode[1] = g.basis(1);
    CHECK_FALSE(check_axioms(g).antipode);
    CHECK(check_axioms(g).coassociative);
}

TEST_CASE("reducedness by Frobenius") {
    // (x - 1)^p = x^p - 1 = 0 in K[mu_p]
    CHECK_FALSE(is_reduced(mu(2, 2)));
    CHECK(nilradical(mu(2, 2)).dim() == 1);
    CHECK_FALSE(is_reduced(mu(3, 3)));
    CHECK(nilradical(mu(3, 3)).dim() == 2);
    CHECK_FALSE(is_reduced(alpha(2)));
    CHECK(nilradical(alpha(5)).dim() == 4);
    // x^k - 1 separable when p does not divide k
    CHECK(is_reduced(mu(2, 3)));
    CHECK(is_reduced(mu(3, 2)));
    CHECK(is_reduced(mu(5, 4)));
    CHECK(nilradical(mu(2, 3)).dim() == 0);
    CHECK_FALSE(is_reduced(mu(2, 6)));
}

TEST_CASE("ideal lattices of small coordinate rings") {
    // K[x]/(x - 1)^p is a chain of p + 1 ideals
    for (uint32_t p : {2u, 3u}) {
        CHECK(all_ideals(mu(p, p)).size() == p + 1);
        CHECK(all_ideals(alpha(p)).size() == p + 1);
    }
    // F_2[x]/(x^3 - 1) = F_2 x F_4: four ideals
    CHECK(all_ideals(mu(2, 3)).size() == 4);
    const HopfAlgebra h = mu(3, 3);
    for (const auto& I : all_ideals(h)) CHECK(is_ideal(h, I));
}

TEST_CASE("Hopf ideals of mu_p x mu_p") {
    const uint32_t p = 3;
    const HopfAlgebra h = product(mu(p, p, "x1"), mu(p, p, "x2"));
    auto x = [&](uint32_t i, uint32_t j) { return h.basis(i * p + j); };
    auto minus_one = [&](FpVec v) {
        v[0] = (v[0] + p - 1) % p;
        return v;
    };
    for (uint32_t k = 0; k < p; ++k) {
        const Subspace I = ideal(h, {minus_one(x(k, 1))});
        CHECK(I.dim() == p * p - p);
        CHECK(is_hopf_ideal(h, I));
    }
    CHECK(is_hopf_ideal(h, ideal(h, {minus_one(x(1, 0))})));
    // x1 + x2 does not cut out a subgroup
    FpVec bad = x(1, 0);
    bad[1] = 1;
    CHECK_FALSE(is_hopf_ideal(h, ideal(h, {bad})));
    // augmentation ideal, the trivial subgroup
    CHECK(is_hopf_ideal(h, ideal(h, {minus_one(x(1, 0)), minus_one(x(0, 1))})));
}

TEST_CASE("subspace helpers") {
    const Subspace a = span(2, 3, {{1, 1, 0}, {0, 1, 1}});
    const Subspace b = span(2, 3, {{1, 0, 0}, {0, 1, 1}});
    CHECK(a.dim() == 2);
    CHECK(a.contains({1, 0, 1}));
    CHECK_FALSE(a.contains({1, 0, 0}));
    const Subspace c = intersect(a, b);
    CHECK(c.dim() == 1);
    CHECK(c.contains({0, 1, 1}));
    const FpMatrix q = annihilator(a);
    CHECK(q.rows() == 1);
}

TEST_CASE("enumeration refuses large algebras") {
    CHECK_THROWS_AS(all_ideals(product(mu(5, 5), mu(5, 5))), InputError);
    CHECK_THROWS_AS(mu(2, 0), InputError);
}
