#include "doctest.h"
#include "itconn/errors.hpp"
#include "itconn/fp.hpp"
#include "itconn/parse.hpp"
#include "itconn/solver.hpp"
#include "test_support.hpp"

using namespace itconn;
using namespace itconn::solver;
using idmod::IterableEquation;
using idmod::RMat;

namespace {

unsigned depth_for(uint32_t p, std::size_t N) {
    unsigned L = 0;
    for (uint64_t q = 1; q <= N; q *= p) ++L;
    return L;
}

// A_q = theta^{(q)}(Y) Y^{-1} for every p-power q <= N.
IterableEquation conjugated(const RMat& Y, uint32_t p, std::size_t N) {
    const unsigned L = depth_for(p, N);
    const auto th = idmod::theta_series(Y, ipow(p, L - 1));
    const RMat Yinv = inverse(Y);
    IterableEquation E{p, Y.rows(), L, {}};
    for (unsigned l = 0; l < L; ++l) E.A.push_back(th[ipow(p, l)] * Yinv);
    return E;
}

RMat random_unit_poly_matrix(std::mt19937_64& rng, uint32_t p, std::size_t n, int deg) {
    RMat Y(n, n, RatFunc(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto c = random_poly(rng, p, deg).coeffs();
            c.resize(static_cast<std::size_t>(deg) + 1, 0);
            c[0] = i == j ? 1 : 0;
            Y(i, j) = RatFunc(Poly(p, c));
        }
    return Y;
}

}  // namespace

TEST_CASE("series expansion at the origin") {
    const auto s = expand(parse_ratfunc("1/(1+t)", 3, "t"), 10);
    for (std::size_t k = 0; k <= 10; ++k) CHECK(s[k] == (k % 2 ? 2u : 1u));
    CHECK_THROWS_AS(expand(parse_ratfunc("1/t", 3, "t"), 4), PoleAtOrigin);
}

TEST_CASE("zero equation gives the identity") {
    for (uint32_t p : {2u, 3u, 5u}) {
        IterableEquation E{p, 2, 2, {RMat(2, 2, RatFunc(p)), RMat(2, 2, RatFunc(p))}};
        CHECK(solve_fundamental(E, 30) == SeriesMatrix::identity(p, 2, 30));
    }
}

TEST_CASE("geometric rank-one equation") {
    const std::size_t N = 64;
    for (uint32_t p : {2u, 3u, 5u}) {
        const unsigned L = depth_for(p, N);
        IterableEquation E{p, 1, L, {}};
        for (unsigned l = 0; l < L; ++l) {
            const uint64_t q = ipow(p, l);
            RatFunc a = parse_ratfunc("1/(1+t)", p, "t").pow(static_cast<int64_t>(q));
            if (q % 2) a = -a;
            E.A.emplace_back(1, 1, a);
        }
        const auto Y = solve_fundamental(E, N);
        for (std::size_t m = 0; m <= N; ++m) CHECK(Y.at(0, 0)[m] == (m % 2 ? p - 1 : 1u));
    }
}

TEST_CASE("unipotent equation over F_2") {
    const uint32_t p = 2;
    const std::size_t N = 64;
    RMat Nm(2, 2, RatFunc(p));
    Nm(0, 1) = RatFunc::constant(p, 1);
    IterableEquation E{p, 2, depth_for(p, N), {Nm, Nm}};
    while (E.A.size() < E.L) E.A.emplace_back(2, 2, RatFunc(p));
    const auto Y = solve_fundamental(E, N);
    auto want = SeriesMatrix::identity(p, 2, N);
    want.at(0, 1)[1] = want.at(0, 1)[2] = 1;
    CHECK(Y == want);
    CHECK(Y.entry_string(0, 1) == "t^2+t");

    CHECK(verify_solution(Y, E, N).pass);
    auto rep = verify_solution(SeriesMatrix::identity(p, 2, N), E, N);
    CHECK_FALSE(rep.pass);
    CHECK(rep.first_failing_order() == 1u);

    auto hand = SeriesMatrix::identity(p, 2, N);
    hand.at(0, 1)[1] = 1;
    rep = verify_solution(hand, E, N);
    CHECK_FALSE(rep.pass);
    CHECK(rep.first_failing_order() == 2u);
    CHECK(rep.max_failing_order() == 2u);
}

TEST_CASE("incompatible or singular input is rejected") {
    const uint32_t p = 2;
    RMat bad(2, 2, RatFunc(p));
    bad(0, 1) = RatFunc::t(p);
    IterableEquation E{p, 2, 2, {bad, RMat(2, 2, RatFunc(p))}};
    CHECK_THROWS_AS(solve_fundamental(E, 8), Inconsistent);
    IterableEquation pole{p, 1, 1, {RMat(1, 1, parse_ratfunc("1/t", p, "t"))}};
    CHECK_THROWS_AS(solve_fundamental(pole, 8), PoleAtOrigin);
}

TEST_CASE("conjugation-built equations are solved back") {
    auto rng = test_rng(70);
    const std::size_t N = 64;
    for (int i = 0; i < 12; ++i) {
        const uint32_t p = (i % 3 == 0) ? 2 : (i % 3 == 1 ? 3 : 5);
        const std::size_t n = 1 + rng() % 3;
        const RMat Y = random_unit_poly_matrix(rng, p, n, 3);
        const auto E = conjugated(Y, p, N);
        const auto sol = solve_fundamental(E, N);
        const auto ref = expand(Y, N);
        CHECK(sol == ref);
        const auto ratio = ref.inverse() * sol;
        for (std::size_t e = 0; e < ratio.e.size(); ++e)
            for (std::size_t d = 1; d <= N; ++d) CHECK(ratio.e[e][d] == 0);
    }
}

TEST_CASE("determinant solves the rank-one determinant equation") {
    auto rng = test_rng(71);
    const std::size_t N = 32;
    for (uint32_t p : {2u, 3u}) {
        const RMat Y = random_unit_poly_matrix(rng, p, 2, 2);
        const auto E = conjugated(Y, p, N);
        const auto As = E.series(N);
        IterableEquation D{p, 1, E.L, {}};
        for (unsigned l = 0; l < E.L; ++l) {
            const uint64_t k = ipow(p, l);
            RatFunc acc(p);
            for (uint64_t a = 0; a <= k; ++a)
                acc += As[a](0, 0) * As[k - a](1, 1) - As[a](0, 1) * As[k - a](1, 0);
            D.A.emplace_back(1, 1, acc);
        }
        const RatFunc det = Y(0, 0) * Y(1, 1) - Y(0, 1) * Y(1, 0);
        CHECK(solve_fundamental(D, N).at(0, 0) == expand(det, N));
    }
}

TEST_CASE("constants of truncated series") {
    for (uint32_t p : {2u, 3u, 5u}) {
        const std::size_t N = p == 2 ? 16 : 64;
        std::vector<Series> mono;
        for (std::size_t m = 0; m <= N; ++m) {
            Series s(N + 1, 0);
            s[m] = 1;
            mono.push_back(s);
        }
        const auto c = constants(p, mono, N);
        REQUIRE(c.size() == 1);
        CHECK(c[0] == mono[0]);
    }
    const uint32_t p = 3;
    const std::size_t N = 10;
    Series one(N + 1, 0), tp(N + 1, 0);
    one[0] = 1;
    tp[p] = 1;
    CHECK(constants(p, {one, tp}, N, {1}).size() == 2);
    CHECK(constants(p, {one, tp}, N).size() == 1);
    CHECK(constants(p, {one}, N).size() == 1);
}
