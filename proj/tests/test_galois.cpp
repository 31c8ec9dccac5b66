#include "doctest.h"
#include "itconn/errors.hpp"
#include "itconn/fp.hpp"
#include "itconn/galois.hpp"
#include "itconn/idmod.hpp"
#include "test_support.hpp"

using namespace itconn;
using namespace itconn::galois;

namespace {

const std::vector<uint32_t> kOnes{1, 1, 1, 1};
const std::vector<uint32_t> kSecond{1, 1, 0, 1};

LaurentElem mono(const ThetaRing& R, Exps e) {
    return LaurentElem::monomial(R.ctx, std::move(e), RatFunc::constant(R.p, 1));
}

FpVec minus_one(const HopfAlgebra& h, std::size_t idx) {
    FpVec v = h.basis(idx);
    v[0] = (v[0] + h.p - 1) % h.p;
    return v;
}

// Truncated products of power series in T with F_p(t) coefficients.
using TSeries = std::vector<RatFunc>;
TSeries tmul(const TSeries& a, const TSeries& b) {
    TSeries c(a.size(), RatFunc(a[0].prime()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

TEST_CASE("Laurent model arithmetic") {
    auto ctx = make_laurent_ctx(3, {"r", "r'"}, {{1, 0}});
    const LaurentElem r = LaurentElem::gen(ctx, 0), rp = LaurentElem::gen(ctx, 1);
    // r'^3 folds onto r^3
    CHECK(rp.pow(3) == r.pow(3));
    CHECK((rp.pow(4)).terms().begin()->first == Exps{3, 1});
    CHECK((r - rp).pow(3).is_zero());
    CHECK(r.inverse() * r == LaurentElem::scalar(ctx, RatFunc::constant(3, 1)));
    CHECK_THROWS_AS((r + rp).inverse(), NotInvertible);
    CHECK(rp.inverse().terms().begin()->first == Exps{-3, 2});
    CHECK((r * rp).to_string() == "r*r'");
}

TEST_CASE("derived series for the multiplicative generator") {
    // s = t^n formally, so theta(s) = (1 + T/t)^n s and c_k = C(n, k) t^{-k}
    auto rng = test_rng(0x6a11);
    for (uint32_t p : {2u, 3u}) {
        const unsigned L = 3;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<RatFunc> data;
            uint64_t n = 0, q = 1;
            for (unsigned l = 0; l < L; ++l, q *= p) {
                const uint32_t a = static_cast<uint32_t>(rng() % p);
                n += a * q;
                data.push_back(RatFunc(Poly::constant(p, a), Poly::monomial(p, 1, q)));
            }
            const auto c = complete_series(p, L, Action::Diagonal, data);
            for (std::size_t k = 0; k < c.size(); ++k)
                CHECK(c[k] == RatFunc(Poly::constant(p, binomial_mod_p(n, k, p)), Poly::monomial(p, 1, k)));
        }
    }
}

TEST_CASE("G_m example") {
    // p = 2, a_0 = 1: theta^{(1)}(s) = s/t and theta^{(2)}(s) = 0
    std::vector<RatFunc> data{RatFunc(Poly::constant(2, 1), Poly::x(2)), RatFunc(2)};
    const auto c = complete_series(2, 2, Action::Diagonal, data);
    CHECK(c[1] == RatFunc(Poly::constant(2, 1), Poly::x(2)));
    CHECK(c[2].is_zero());
    CHECK(c[3].is_zero());

    const GmReport g = gm_symbolic_ring(2, {1, 0, 0}, 3, 4);
    CHECK(g.iterative);
    CHECK(g.monomials_checked == 9);
    CHECK(g.pass());
    CHECK(gm_symbolic_ring(3, {1, 2}, 2, 3).pass());
    CHECK(gm_symbolic_ring(5, {2, 4}, 2, 2).pass());
    CHECK(gm_symbolic_ring(2, {0, 0, 0}, 3, 2).degenerate_constant);
}

TEST_CASE("mu_p x mu_p data: iterativity and relations") {
    for (uint32_t p : {2u, 3u}) {
        const unsigned L = p == 2 ? 3 : 2;
        const std::vector<uint32_t> a(L + 1, 1), b{1, 2 % p, 1, 1};
        auto R = mupmup_ring(p, a, b, L);
        CHECK(hderiv::is_iterative(*R->theta).verdict);
        CHECK(relations_respected(*R, mupmup_relation_theta(*R, a, b)));
        // oracle: theta(r)/r = prod_{l >= 1} (1 + (t^q + T^q)^{a_l}) / (1 + t^{a_l q}), q = p^{l-1}
        const std::size_t N = R->order();
        TSeries prod(N + 1, RatFunc(p));
        prod[0] = RatFunc::constant(p, 1);
        for (unsigned l = 1; l <= L; ++l) {
            const uint64_t q = static_cast<uint64_t>(std::pow(p, l - 1));
            const uint32_t al = a[l];
            TSeries base(N + 1, RatFunc(p));  // t^q + T^q
            base[0] = RatFunc(Poly::monomial(p, 1, q));
            if (q <= N) base[q] += RatFunc::constant(p, 1);
            TSeries f(N + 1, RatFunc(p));
            f[0] = RatFunc::constant(p, 1);
            for (uint32_t i = 0; i < al; ++i) f = tmul(f, base);
            f[0] += RatFunc::constant(p, 1);
            const RatFunc d = RatFunc(Poly::monomial(p, 1, q * al) + Poly::constant(p, 1)).inverse();
            for (auto& x : f) x *= d;
            prod = tmul(prod, f);
        }
        CHECK(R->series[0] == prod);
    }
}

TEST_CASE("the literal coefficient with exponent p^{l+1} breaks the relation") {
    const uint32_t p = 2;
    const unsigned L = 3;
    std::vector<std::vector<RatFunc>> data(2);
    for (int i = 0; i < 2; ++i)
        for (unsigned l = 0; l < L; ++l)
            data[i].push_back(RatFunc(Poly::constant(p, 1),
                                      Poly::monomial(p, 1, 1u << (l + 1)) + Poly::constant(p, 1)));
    auto bad = make_theta_ring(p, L, {"r1", "r2"}, {Action::Diagonal, Action::Diagonal}, data, true);
    CHECK_FALSE(relations_respected(*bad, mupmup_relation_theta(*bad, kOnes, kOnes)));
}

TEST_CASE("alpha_p x alpha_p data") {
    for (uint32_t p : {2u, 3u}) {
        const std::vector<uint32_t> b{1, 0, 1, 2 % p};
        auto R = alpalp_ring(p, kOnes, b, 3);
        CHECK(hderiv::is_iterative(*R->theta).verdict);
        CHECK(relations_respected(*R, alpalp_relation_theta(*R, kOnes, b)));
        CHECK(R->series[0][1] == RatFunc::constant(p, 1));
    }
}

TEST_CASE("torsor isomorphisms") {
    SUBCASE("mu_p x mu_p, p = 2, all digits 1") {
        auto R = mupmup_ring(2, kOnes, kOnes, 3);
        const Coaction co = mu_coaction(R);
        CHECK(check_coaction(co).pass());
        const TorsorReport t = check_torsor(co);
        CHECK(t.source_dim == 16);
        CHECK(t.rank == 16);
        CHECK(t.pass());
        const Square sq = tensor_square(R);
        const RHElem g = gamma(co, sq, sq.right(R->r(0)));
        CHECK(g == RHElem::pure(R->ctx, co.H.get(), R->r(0), {2}));
        CHECK(co.H->names[2] == "x1");
    }
    SUBCASE("alpha_p x alpha_p") {
        for (uint32_t p : {2u, 3u}) {
            auto R = alpalp_ring(p, kOnes, kSecond, 3);
            const Coaction co = alpha_coaction(R);
            CHECK(check_coaction(co).pass());
            CHECK(check_torsor(co).pass());
        }
    }
    SUBCASE("mu_3 x mu_3") {
        auto R = mupmup_ring(3, {1, 1, 1}, {1, 2, 1}, 2);
        const TorsorReport t = check_torsor(mu_coaction(R));
        CHECK(t.rank == 81);
        CHECK(t.pass());
    }
    SUBCASE("trivial ring and group") {
        auto F = make_theta_ring(2, 2, {}, {}, {}, true);
        const Coaction co = mu_coaction(F);
        CHECK(co.H->dim == 1);
        const TorsorReport t = check_torsor(co);
        CHECK(t.source_dim == 1);
        CHECK(t.pass());
        const Square sq = tensor_square(F);
        const LaurentElem x = LaurentElem::scalar(sq.ctx2, RatFunc::t(2));
        CHECK(gamma(co, sq, x) == RHElem::pure(F->ctx, co.H.get(), F->scalar(RatFunc::t(2)), {0}));
    }
    SUBCASE("a wrong coaction is caught") {
        auto R = mupmup_ring(2, kOnes, kSecond, 3);
        Coaction co = mu_coaction(R);
        std::swap(co.rho_gens[0], co.rho_gens[1]);
        CHECK_FALSE(check_coaction(co).equivariant);
        CHECK_FALSE(check_torsor(co).pass());
    }
}

TEST_CASE("invariance by the kernel criterion") {
    auto R = mupmup_ring(2, kOnes, kSecond, 3);
    const Coaction co = mu_coaction(R);
    const HopfAlgebra& h = *co.H;
    const Subspace I = hopf::ideal(h, {minus_one(h, 3)});  // x1 x2 - 1
    const LaurentElem one = R->one();
    CHECK(invariance_test(co, I, R->r(0) * R->r(1), one));
    CHECK_FALSE(invariance_test(co, I, R->r(0), one));
    auto rng = test_rng(0x1be);
    for (int i = 0; i < 5; ++i) {
        const LaurentElem f = R->scalar(random_ratfunc(rng, 2, 3));
        CHECK(invariance_test(co, hopf::ideal(h, {}), f, one));
        CHECK(invariance_test(co, I, f, one));
    }
}

TEST_CASE("invariant subalgebras of mu_p x mu_p") {
    for (uint32_t p : {2u, 3u}) {
        const unsigned L = p == 2 ? 3 : 2;
        auto R = mupmup_ring(p, kOnes, {1, 2 % p, 1, 1}, L);
        const Coaction co = mu_coaction(R);
        const HopfAlgebra& h = *co.H;
        auto powers = [&](const LaurentElem& x) {
            std::vector<LaurentElem> v;
            for (uint32_t j = 0; j < p; ++j) v.push_back(x.pow(j));
            return v;
        };
        // H = G
        auto full = invariant_subalgebra(co, hopf::ideal(h, {}));
        CHECK(full.size() == 1);
        CHECK(same_f_span(*R, full, {R->one()}));
        // H = (x1^k x2 - 1)
        for (uint32_t k = 0; k < p; ++k) {
            const auto inv = invariant_subalgebra(co, hopf::ideal(h, {minus_one(h, k * p + 1)}));
            CHECK(inv.size() == p);
            CHECK(same_f_span(*R, inv, powers(R->r(0).pow(k) * R->r(1))));
        }
        // H = (x1 - 1)
        CHECK(same_f_span(*R, invariant_subalgebra(co, hopf::ideal(h, {minus_one(h, p)})), powers(R->r(0))));
        // trivial subgroup
        const auto all = invariant_subalgebra(co, hopf::ideal(h, {minus_one(h, p), minus_one(h, 1)}));
        CHECK(all.size() == p * p);
        // results are theta-stable
        for (uint32_t k = 0; k < p; ++k) {
            const auto inv = invariant_subalgebra(co, hopf::ideal(h, {minus_one(h, k * p + 1)}));
            auto with_theta = inv;
            for (const auto& b : inv)
                for (unsigned j = 1; j <= R->order(); ++j) with_theta.push_back(R->theta->apply(b, j));
            CHECK(same_f_span(*R, with_theta, inv));
        }
    }
}

TEST_CASE("invariant subalgebras of alpha_p x alpha_p") {
    const uint32_t p = 3;
    auto R = alpalp_ring(p, kOnes, kSecond, 2);
    const Coaction co = alpha_coaction(R);
    const HopfAlgebra& h = *co.H;
    for (uint32_t a = 0; a < p; ++a)
        for (uint32_t b = 0; b < p; ++b) {
            if (a == 0 && b == 0) continue;
            FpVec gen(h.dim, 0);
            gen[p] = a;  // y1
            gen[1] = b;  // y2
            const auto inv = invariant_subalgebra(co, hopf::ideal(h, {gen}));
            const LaurentElem x = R->r(0).scaled(RatFunc::constant(p, a)) + R->r(1).scaled(RatFunc::constant(p, b));
            std::vector<LaurentElem> pw;
            for (uint32_t j = 0; j < p; ++j) pw.push_back(x.pow(j));
            CHECK(inv.size() == p);
            CHECK(same_f_span(*R, inv, pw));
        }
}

TEST_CASE("constants of the tensor square") {
    auto M = mupmup_ring(2, kOnes, kSecond, 3);
    const auto cm = constants_of_square(M);
    CHECK(cm.dim == 4);
    auto A = alpalp_ring(2, kOnes, kSecond, 3);
    const auto ca = constants_of_square(A);
    CHECK(ca.dim == 4);
    CHECK(ca.window_dim == 4);
    auto F = make_theta_ring(2, 3, {}, {}, {}, true);
    CHECK(constants_of_square(F).dim == 1);
    // identical data for r1 and r2 make r1/r2 a new constant
    CHECK(constants_of_square(mupmup_ring(2, kOnes, kOnes, 3)).dim > 4);
    // every reported element is killed by theta
    const Square sq = tensor_square(M);
    for (const auto& c : cm.basis)
        for (unsigned k = 1; k <= M->order(); ++k) CHECK(sq.theta->apply(c, k).is_zero());
}

TEST_CASE("reducedness pairs with separability") {
    auto M = mupmup_ring(2, kOnes, kSecond, 3);
    const auto rm = reduced_and_separable(M, *mu_coaction(M).H);
    CHECK_FALSE(rm.hopf_reduced);
    CHECK_FALSE(rm.square_reduced);
    CHECK(rm.certificate_nilpotent);
    CHECK(rm.consistent());
    CHECK(rm.square_frobenius_kernel == 12);
    auto A = alpalp_ring(3, kOnes, kSecond, 2);
    const auto ra = reduced_and_separable(A, *alpha_coaction(A).H);
    CHECK(ra.consistent());
    CHECK(ra.hopf_nilradical_dim == 8);
    auto F = make_theta_ring(2, 2, {}, {}, {}, true);
    const auto rf = reduced_and_separable(F, hopf::trivial_group(2));
    CHECK(rf.hopf_reduced);
    CHECK(rf.square_reduced);
    // a single generator: E = F(r_1) with r_1^p in F
    const auto r1 = reduced_and_separable(subring(*M, {0}), hopf::mu(2, 2));
    CHECK(r1.square_frobenius_kernel == 2);
    CHECK(r1.consistent());
}

TEST_CASE("theta-simplicity") {
    const auto s2 = theta_simplicity(*mupmup_ring(2, kOnes, kSecond, 3), 0, test_seed());
    CHECK(s2.checked == 15);
    CHECK(s2.pass);
    const auto s3 = theta_simplicity(*mupmup_ring(3, {1, 1, 1}, {1, 2, 1}, 2), 40, test_seed());
    CHECK(s3.checked == 40);
    CHECK(s3.pass);
    CHECK(theta_simplicity(*alpalp_ring(2, kOnes, kSecond, 3), 0, 1).pass);
}

TEST_CASE("ideal lattice bijection") {
    for (uint32_t p : {2u, 3u, 5u}) {
        auto R = mupmup_ring(p, {1, 1, 1}, {1, 1 + (p > 2), 1}, 2);
        const auto b = ideal_bijection(*R);
        CHECK(b.ideals_of_L == p + 1);
        CHECK(b.theta_ideals == p + 1);
        CHECK(b.pass());
    }
}

TEST_CASE("quotient by a normal subgroup is again a torsor") {
    const uint32_t p = 2;
    auto R = mupmup_ring(p, kOnes, kSecond, 3);
    const Coaction co = mu_coaction(R);
    const auto inv = invariant_subalgebra(co, hopf::ideal(*co.H, {minus_one(*co.H, p)}));
    CHECK(same_f_span(*R, inv, {R->one(), R->r(0)}));
    auto R1 = subring(*R, {0});
    CHECK(R1->series[0] == R->series[0]);
    const Coaction c1 = mu_coaction(R1);
    CHECK(c1.H->dim == p);
    CHECK(check_coaction(c1).pass());
    const TorsorReport t = check_torsor(c1);
    CHECK(t.rank == 4);
    CHECK(t.pass());
}

TEST_CASE("Frobenius kernel of the Taylor derivation") {
    // over F_p(t), theta^{(1)} f = 0 exactly for p-th powers
    auto rng = test_rng(0xf0b);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int i = 0; i < 60; ++i) {
            const RatFunc f = i % 3 == 0 ? random_ratfunc(rng, p, 2).frobenius(1) : random_ratfunc(rng, p, 4);
            const bool killed = f.hasse(1).is_zero();
            CHECK(killed == f.is_pth_power());
            CHECK(killed == idmod::frobenius_compatibility(f, 1));
        }
    }
}

TEST_CASE("input errors") {
    CHECK_THROWS_AS(mupmup_ring(2, {1, 1}, {1, 1}, 3), InputError);
    CHECK_THROWS_AS(complete_series(2, 3, Action::Diagonal, {}), InputError);
    auto G = make_theta_ring(2, 2, {"s"}, {Action::Diagonal}, {{RatFunc(2), RatFunc(2)}}, false);
    CHECK_THROWS_AS(tensor_square(G), InputError);
    CHECK_THROWS_AS(G->coords(G->r(0)), InputError);
}
