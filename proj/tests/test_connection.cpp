#include "doctest.h"
#include "itconn/connection.hpp"
#include "test_support.hpp"

using namespace itconn;
using namespace itconn::connection;
using cga::Element;

namespace {

template <class C>
DifMatrix<C> random_omega(std::mt19937_64& rng, const cga::DescPtr& d, std::size_t n, const C& like,
                          const std::function<C()>& coef) {
    auto om = DifMatrix<C>::identity(n, Element<C>::scalar(d, like));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int t = 0; t < 2; ++t) {
                Element<C> mono = Element<C>::symbol(d, rng() % d->symbols.size(), like);
                if (rng() % 2) mono *= Element<C>::symbol(d, rng() % d->symbols.size(), like);
                om(i, j) += mono.scaled(coef());
            }
    return om;
}

HigherConnection<MPoly> random_connection(std::mt19937_64& rng, const cga::DescPtr& d, std::size_t n, uint32_t p) {
    const std::size_t m = d->base_vars.size();
    return HigherConnection<MPoly>(d, random_omega<MPoly>(rng, d, n, MPoly(p, m), [&] { return random_mpoly(rng, p, m, 1, 2); }));
}

// Omega = B * d_R(B^{-1}): the trivial connection in the basis B.
HigherConnection<MPoly> gauge_of_trivial(const Matrix<MPoly>& B, const Matrix<MPoly>& Binv, const cga::DescPtr& d) {
    auto dBinv = Binv.map([&d](const MPoly& c) { return hdiff::d_R(c, d); });
    return HigherConnection<MPoly>(d, embed(B, d) * dBinv);
}

std::vector<Matrix<RatFunc>> theta_of_gauge(const Matrix<RatFunc>& B, unsigned N) {
    const auto Binv = inverse(B);
    std::vector<Matrix<RatFunc>> out;
    for (unsigned k = 0; k <= N; ++k)
        out.push_back(B * Binv.map([k](const RatFunc& f) { return f.hasse(k); }));
    return out;
}

}  // namespace

TEST_CASE("trivial connection") {
    auto d = hdiff::dif_descriptor({"t"}, 4);
    auto triv = HigherConnection<MPoly>::trivial(d, 2, MPoly(3, 1));
    auto comps = apply_psi(triv, hderiv::phi_t(3, 1, 0, 4));
    CHECK(comps[0] == Matrix<MPoly>::identity(2, MPoly(3, 1)));
    for (unsigned k = 1; k <= 4; ++k) CHECK(comps[k].is_zero());
    CHECK(is_iterative_connection(triv).verdict);
    CHECK(tensor(triv, triv).omega() == HigherConnection<MPoly>::trivial(d, 4, MPoly(3, 1)).omega());
    CHECK(dual(triv).omega() == triv.omega());
}

TEST_CASE("rank one: evaluation along phi_t and the degree-2 obstruction") {
    const uint32_t p = 3;
    auto d = hdiff::dif_descriptor({"t"}, 2);
    const MPoly like(p, 1);
    auto w1 = hdiff::d_symbol(d, 1, 0, like);
    DifMatrix<MPoly> om(1, 1, Element<MPoly>::scalar(d, one_like(like)) + w1);
    HigherConnection<MPoly> nabla(d, om);
    auto comps = apply_psi(nabla, hderiv::phi_t(p, 1, 0, 2));
    CHECK(comps[1] == Matrix<MPoly>::identity(1, like));
    CHECK_FALSE(is_iterative_connection(nabla).verdict);

    // with omega_2 = (omega_1^2 + d_Dif^{(1)} omega_1) / 2 the rule holds up to degree 2
    const auto dd = hdiff::d_Dif_map(1, d, like);
    auto w2 = (w1 * w1 + dd.component_apply(1, w1)).scaled(MPoly::constant(p, 1, 2));
    DifMatrix<MPoly> om2(1, 1, Element<MPoly>::scalar(d, one_like(like)) + w1 + w2);
    CHECK(is_iterative_connection(HigherConnection<MPoly>(d, om2)).verdict);
}

TEST_CASE("dual: rank-one expansion and closed form") {
    const uint32_t p = 5;
    auto d = hdiff::dif_descriptor({"t"}, 3);
    const MPoly like(p, 1);
    auto w1 = hdiff::d_symbol(d, 1, 0, like).scaled(MPoly::var(p, 1, 0));
    DifMatrix<MPoly> om(1, 1, Element<MPoly>::scalar(d, one_like(like)) + w1);
    auto du = dual(HigherConnection<MPoly>(d, om));
    CHECK(du.omega()(0, 0).component(1) == -w1);

    auto rng = test_rng(50);
    for (int i = 0; i < 5; ++i) {
        auto nabla = random_connection(rng, d, 2, 3);
        CHECK(dual(nabla).omega() == unipotent_inverse(nabla.omega()).transpose());
        CHECK(dual(dual(nabla)).omega() == nabla.omega());
    }
}

TEST_CASE("inverse of _Dif nabla on 1 (x) M, with the shortcut for iterative connections") {
    auto d = hdiff::dif_descriptor({"t1", "t2"}, 4);
    const uint32_t p = 3;
    const MPoly like(p, 2), t1 = MPoly::var(p, 2, 0), one = MPoly::constant(p, 2, 1);
    Matrix<MPoly> B(2, 2, zero_like(like)), Binv(2, 2, zero_like(like));
    B(0, 0) = B(1, 1) = Binv(0, 0) = Binv(1, 1) = one;
    B(0, 1) = t1 * t1;
    Binv(0, 1) = -(t1 * t1);
    auto nabla = gauge_of_trivial(B, Binv, d);
    REQUIRE(is_iterative_connection(nabla).verdict);
    CHECK(dif_nabla_inverse_on_basis(nabla) == nabla.scaled_omega(-1));

    auto rng = test_rng(51);
    auto r = random_connection(rng, d, 2, p);
    auto W = dif_nabla_inverse_on_basis(r);
    for (std::size_t j = 0; j < 2; ++j) {
        Vec<Element<MPoly>> col{W(0, j), W(1, j)};
        CHECK(r.dif_nabla(col) == basis_vector(d, 2, j, like));
    }
}

TEST_CASE("tensor is compatible with evaluation along a derivation") {
    auto rng = test_rng(52);
    const uint32_t p = 3;
    auto d = hdiff::dif_descriptor({"t"}, 4);
    auto psi = hderiv::phi_t(p, 1, 0, 4).scaled(2);
    for (int i = 0; i < 4; ++i) {
        auto a = random_connection(rng, d, 2, p), b = random_connection(rng, d, 1 + rng() % 2, p);
        auto lhs = apply_psi(tensor(a, b), psi);
        auto A = apply_psi(a, psi), Bm = apply_psi(b, psi);
        for (unsigned k = 0; k <= 4; ++k) {
            Matrix<MPoly> acc(lhs[k].rows(), lhs[k].cols(), MPoly(p, 1));
            for (unsigned j = 0; j <= k; ++j) acc = acc + kron(A[j], Bm[k - j]);
            CHECK(lhs[k] == acc);
        }
    }
}

TEST_CASE("morphisms: identity, multiplication by t, evaluation, coevaluation, iota") {
    const uint32_t p = 3;
    auto d = hdiff::dif_descriptor({"t"}, 3);
    const MPoly like(p, 1);
    auto triv = HigherConnection<MPoly>::trivial(d, 1, like);
    CHECK(is_morphism(ConnectionMorphism<MPoly>{triv, triv, Matrix<MPoly>::identity(1, like)}));
    CHECK_FALSE(is_morphism(ConnectionMorphism<MPoly>{triv, triv, Matrix<MPoly>(1, 1, MPoly::var(p, 1, 0))}));

    auto rng = test_rng(53);
    for (std::size_t n : {1u, 2u, 3u}) {
        auto nabla = random_connection(rng, d, n, p);
        CHECK(is_morphism(ConnectionMorphism<MPoly>{nabla, nabla, Matrix<MPoly>::identity(n, like)}));
        auto unit = HigherConnection<MPoly>::trivial(d, 1, like);
        auto du = dual(nabla);
        CHECK(is_morphism(ConnectionMorphism<MPoly>{tensor(nabla, du), unit, evaluation_matrix(n, like)}));
        CHECK(is_morphism(ConnectionMorphism<MPoly>{unit, tensor(du, nabla), coevaluation_matrix(n, like)}));
    }
    for (int i = 0; i < 3; ++i) {
        auto n1 = random_connection(rng, d, 1 + rng() % 2, p), n2 = random_connection(rng, d, 1 + rng() % 2, p);
        CHECK(is_morphism(ConnectionMorphism<MPoly>{tensor(dual(n1), n2), hom(n1, n2),
                                                    iota_matrix(n1.rank(), n2.rank(), like)}));
    }
}

TEST_CASE("iterative connections from Taylor data") {
    const uint32_t p = 2;
    auto d = hdiff::dif_descriptor({"t"}, 4);
    auto rng = test_rng(54);
    for (int i = 0; i < 3; ++i) {
        Matrix<RatFunc> B(2, 2, RatFunc(p));
        do {
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) B(r, c) = random_ratfunc(rng, p, 2);
        } while (rank(B) < 2);
        auto nabla = from_theta_matrices(theta_of_gauge(B, 4), d);
        CHECK(is_iterative_connection(nabla).verdict);
        CHECK(psi_derivation_is_iterative(nabla, hderiv::phi_t_rational(p, 4)));
        CHECK(dif_nabla_inverse_on_basis(nabla) == nabla.scaled_omega(-1));
    }
    auto noise = HigherConnection<RatFunc>(d, random_omega<RatFunc>(rng, d, 2, RatFunc(p), [&] { return random_ratfunc(rng, p, 1); }));
    CHECK_FALSE(is_iterative_connection(noise).verdict);
}

TEST_CASE("integrability evidence over two variables") {
    const uint32_t p = 3;
    auto d = hdiff::dif_descriptor({"t1", "t2"}, 3);
    const MPoly like(p, 2), one = MPoly::constant(p, 2, 1);
    Matrix<MPoly> B(2, 2, zero_like(like)), Binv(2, 2, zero_like(like));
    B(0, 0) = B(1, 1) = Binv(0, 0) = Binv(1, 1) = one;
    B(0, 1) = MPoly::var(p, 2, 0) * MPoly::var(p, 2, 1);
    Binv(0, 1) = -B(0, 1);
    auto good = integrability_evidence(gauge_of_trivial(B, Binv, d));
    CHECK(good.verdict);
    CHECK(good.pairs_checked == 16);
    CHECK(good.label == "finite-family evidence, not a proof");
    auto rng = test_rng(55);
    CHECK_FALSE(integrability_evidence(random_connection(rng, d, 2, p)).verdict);
}

TEST_CASE("unit derivative search") {
    CHECK(unit_derivative_search(parse_mpoly("1+t1", 3, 2)) == std::vector<unsigned>{0, 0});
    CHECK(unit_derivative_search(parse_mpoly("t1^2*t2", 3, 2)) == std::vector<unsigned>{2, 1});
    for (uint32_t p : {2u, 3u, 5u}) {
        MPoly r = MPoly::var(p, 1, 0).pow(p);
        CHECK(unit_derivative_search(r) == std::vector<unsigned>{p});
    }
    CHECK(unit_derivative_search(parse_mpoly("t1*t2 + t2^3", 2, 2)) == std::vector<unsigned>{1, 1});
    CHECK_THROWS_AS(unit_derivative_search(MPoly(3, 2)), ZeroInput);
}

TEST_CASE("kernel of id (x) f is Dif (x) Ker f degreewise") {
    auto d = hdiff::dif_descriptor({"t"}, 4);
    auto rng = test_rng(56);
    for (int i = 0; i < 3; ++i) {
        Matrix<RatFunc> f(2, 3, RatFunc(3));
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 3; ++c) f(r, c) = random_ratfunc(rng, 3, 1);
        for (unsigned deg : {1u, 2u, 3u}) {
            auto res = kernel_plumbing(f, d, deg);
            CHECK(res.ok());
            CHECK(res.kernel_f >= 1);
        }
    }
}
