#include <map>
#include <random>
#include <set>

#include "itconn/errors.hpp"
#include "itconn/galois.hpp"

namespace itconn::galois {

namespace {

uint64_t ipow(uint64_t b, unsigned e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Odometer over [lo, hi]^n.
bool next_exps(Exps& e, int32_t lo, int32_t hi) {
    for (auto& x : e) {
        if (x < hi) {
            ++x;
            return true;
        }
        x = lo;
    }
    return false;
}

// F-coordinates in the basis r^a r'^b of R (x)_F R.
std::vector<LaurentElem> square_coords(const ThetaRing& R, const LaurentElem& x) {
    const std::size_t s = R.gens(), n = R.basis_size();
    const int32_t p = static_cast<int32_t>(R.p);
    std::vector<LaurentElem> out(n * n, LaurentElem(R.uctx));
    for (const auto& [e, g] : x.terms()) {
        Exps a(s), b(s), j(s);
        for (std::size_t i = 0; i < s; ++i) {
            a[i] = ((e[i] % p) + p) % p;
            j[i] = (e[i] - a[i]) / p;
            b[i] = e[s + i];
        }
        out[R.basis_index(a) * n + R.basis_index(b)].add_term(std::move(j), g);
    }
    return out;
}

}  // namespace

ConstantsReport constants_of_square(const ThetaRingPtr& R, unsigned t_degree) {
    const uint32_t p = R->p;
    const std::size_t s = R->gens();
    const unsigned N = R->order();
    const unsigned Wt = t_degree;
    const int32_t pp = static_cast<int32_t>(p);
    ConstantsReport rep;

    std::vector<LaurentElem> unknowns;
    std::vector<Element<LaurentElem>> images;
    LaurentCtxPtr ctx2;
    std::shared_ptr<const LaurentHD> theta;
    if (s == 0) {
        ctx2 = R->ctx;
        theta = R->theta;
    } else {
        const Square sq = tensor_square(R);
        ctx2 = sq.ctx2;
        theta = sq.theta;
    }
    const auto& d = theta->codomain();
    const LaurentElem one = LaurentElem::scalar(ctx2, RatFunc::constant(p, 1));
    std::vector<Element<LaurentElem>> tpow{Element<LaurentElem>::scalar(d, one)};
    const Element<LaurentElem> tT = theta->apply(LaurentElem::scalar(ctx2, RatFunc::t(p)));
    for (unsigned i = 1; i <= Wt; ++i) tpow.push_back(tpow.back() * tT);

    Exps e(s, -pp), b(s, 0);
    do {
        do {
            Exps full(2 * s);
            for (std::size_t i = 0; i < s; ++i) full[i] = e[i], full[s + i] = b[i];
            const LaurentElem mono = LaurentElem::monomial(ctx2, full, RatFunc::constant(p, 1));
            const Element<LaurentElem> th = theta->apply(mono);
            for (unsigned i = 0; i <= Wt; ++i) {
                unknowns.push_back(mono.scaled(RatFunc(Poly::monomial(p, 1, i))));
                images.push_back(th * tpow[i]);
            }
        } while (next_exps(b, 0, pp - 1));
    } while (next_exps(e, -pp, pp - 1));
    rep.unknowns = unknowns.size();

    // (k, monomial) -> linear form over the unknowns
    std::map<std::pair<unsigned, Exps>, std::vector<std::pair<std::size_t, RatFunc>>> forms;
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        for (unsigned k = 1; k <= N; ++k) {
            const LaurentElem ck = images[u].coeff_T(k);
            for (const auto& [mono, c] : ck.terms()) forms[{k, mono}].emplace_back(u, c);
        }
    FpMatrix m(p, 0, unknowns.size());
    for (const auto& [key, form] : forms) {
        Poly lcm = Poly::constant(p, 1);
        for (const auto& [u, c] : form) lcm = lcm * c.den().divmod(Poly::gcd(lcm, c.den())).first;
        std::vector<std::pair<std::size_t, Poly>> nums;
        int deg = 0;
        for (const auto& [u, c] : form) {
            nums.emplace_back(u, c.num() * lcm.divmod(c.den()).first);
            deg = std::max(deg, nums.back().second.degree());
        }
        for (int t = 0; t <= deg; ++t) {
            std::vector<uint32_t> row(unknowns.size(), 0);
            bool any = false;
            for (const auto& [u, poly] : nums)
                if (const uint32_t v = poly.coef(static_cast<std::size_t>(t))) row[u] = (row[u] + v) % p, any = true;
            if (any) m.append_row(row);
        }
    }
    rep.equations = m.rows();
    std::vector<std::vector<uint32_t>> ker;
    if (m.rows() == 0) {
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            std::vector<uint32_t> v(unknowns.size(), 0);
            v[u] = 1;
            ker.push_back(v);
        }
    } else {
        ker = m.kernel();
    }
    rep.window_dim = ker.size();
    std::vector<std::vector<LaurentElem>> cols;
    for (const auto& v : ker) {
        LaurentElem x(ctx2);
        for (std::size_t u = 0; u < v.size(); ++u)
            if (v[u]) x += unknowns[u].scaled(RatFunc::constant(p, v[u]));
        if (s > 0) cols.push_back(square_coords(*R, x));
        rep.basis.push_back(std::move(x));
    }
    rep.dim = s == 0 ? std::min<std::size_t>(rep.window_dim, 1) : f_rank(cols);
    return rep;
}

ReducednessReport reduced_and_separable(const ThetaRingPtr& R, const HopfAlgebra& h) {
    ReducednessReport rep;
    rep.hopf_reduced = hopf::is_reduced(h);
    rep.hopf_nilradical_dim = hopf::nilradical(h).dim();
    const std::size_t n = R->basis_size();
    if (R->gens() == 0) {
        rep.square_reduced = true;
        return rep;
    }
    // Frobenius sends r^a r'^b to u^{a+b}; over the p-th powers of F the
    // images of two basis elements are dependent exactly when a + b agree mod p.
    const Square sq = tensor_square(R);
    std::set<Exps> classes;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const LaurentElem x =
                sq.left(LaurentElem::monomial(R->ctx, R->basis_exps(a), RatFunc::constant(R->p, 1))) *
                sq.right(LaurentElem::monomial(R->ctx, R->basis_exps(b), RatFunc::constant(R->p, 1)));
            const LaurentElem fx = x.pow(R->p);
            if (fx.terms().size() != 1) throw InputError("Frobenius image of a basis monomial is not a monomial");
            Exps e = fx.terms().begin()->first;
            Exps cls(R->gens());
            for (std::size_t i = 0; i < R->gens(); ++i) {
                if (e[R->gens() + i] != 0 || e[i] % static_cast<int32_t>(R->p))
                    throw InputError("Frobenius image left the base field");
                cls[i] = (e[i] / static_cast<int32_t>(R->p)) % static_cast<int32_t>(R->p);
            }
            classes.insert(cls);
        }
    rep.square_frobenius_kernel = n * n - classes.size();
    rep.square_reduced = rep.square_frobenius_kernel == 0;
    const LaurentElem cert = sq.left(R->r(0)) - sq.right(R->r(0));
    rep.certificate_nilpotent = !cert.is_zero() && cert.pow(R->p).is_zero();
    return rep;
}

SimplicityReport theta_simplicity(const ThetaRing& R, std::size_t samples, uint64_t seed) {
    SimplicityReport rep;
    const std::size_t n = R.basis_size();
    auto check = [&](const LaurentElem& x) {
        ++rep.checked;
        const LaurentElem xp = x.pow(R.p);
        bool in_base = !xp.is_zero();
        for (const auto& [e, c] : xp.terms())
            for (auto v : e) in_base = in_base && v % static_cast<int32_t>(R.p) == 0;
        if (!in_base && rep.pass) {
            rep.pass = false;
            rep.failure = "no inverse found for " + x.to_string();
        }
    };
    uint64_t total = 1;
    for (std::size_t i = 0; i < n && total <= 4096; ++i) total *= R.p;
    if (total <= 4096) {
        for (uint64_t code = 1; code < total; ++code) {
            LaurentElem x(R.ctx);
            uint64_t c = code;
            for (std::size_t a = 0; a < n; ++a, c /= R.p)
                x.add_term(R.basis_exps(a), RatFunc::constant(R.p, static_cast<int64_t>(c % R.p)));
            check(x);
        }
        return rep;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
        LaurentElem x(R.ctx);
        while (x.is_zero())
            for (std::size_t a = 0; a < n; ++a) {
                std::vector<uint32_t> co(4);
                for (auto& v : co) v = static_cast<uint32_t>(rng() % R.p);
                x.add_term(R.basis_exps(a), RatFunc(Poly(R.p, co)));
            }
        check(x);
    }
    return rep;
}

BijectionReport ideal_bijection(const ThetaRing& R) {
    BijectionReport rep;
    const uint32_t p = R.p;
    const HopfAlgebra L = hopf::mu(p, p);
    const auto ideals = hopf::all_ideals(L);
    rep.ideals_of_L = ideals.size();

    FpVec eps(p, 0);
    eps[1] = 1;
    eps[0] = p - 1;
    // ker eps^j for j = 0..p, and ranks of eps^j
    std::vector<Subspace> kers;
    rep.single_jordan_block = true;
    FpVec ej = L.unit;
    for (uint32_t j = 0; j <= p; ++j) {
        FpMatrix mj(p, p, p);
        for (std::size_t c = 0; c < p; ++c) {
            const FpVec col = L.multiply(ej, L.basis(c));
            for (std::size_t r = 0; r < p; ++r) mj(r, c) = col[r];
        }
        if (mj.rank() != p - j) rep.single_jordan_block = false;
        kers.push_back(hopf::span(p, p, mj.kernel()));
        ej = L.multiply(ej, eps);
    }
    rep.theta_ideals = kers.size();

    // I -> R (x) I -> (R (x) I) meets 1 (x) L, which is I again because I is
    // defined over F_p; in the other direction every theta-ideal is some ker eps^j.
    rep.round_trips = ideals.size() == kers.size();
    for (const auto& I : ideals) {
        bool hit = false;
        for (const auto& K : kers) hit = hit || I == K;
        rep.round_trips = rep.round_trips && hit;
    }
    for (const auto& K : kers) rep.round_trips = rep.round_trips && hopf::is_ideal(L, K);

    // theta acts on the R factor only: theta^{(k)}(g (x) v) = theta^{(k)}(g) (x) v
    std::vector<LaurentElem> images;
    for (std::size_t a = 0; a < R.basis_size(); ++a) {
        const LaurentElem ra = LaurentElem::monomial(R.ctx, R.basis_exps(a), RatFunc::t(p));
        for (unsigned k = 1; k <= R.order(); ++k) images.push_back(R.theta->apply(ra, k));
    }
    rep.theta_stable = true;
    for (const auto& I : kers) {
        const FpMatrix q = hopf::annihilator(I);
        for (const auto& v : I.basis)
            for (const auto& th : images)
                for (const auto& [e, c] : th.terms())
                    for (std::size_t row = 0; row < q.rows(); ++row) {
                        uint64_t acc = 0;
                        for (std::size_t j = 0; j < p; ++j) acc += uint64_t(q(row, j)) * v[j];
                        if (acc % p && !c.is_zero()) rep.theta_stable = false;
                    }
    }
    return rep;
}

namespace {

// R (x) K[x, x^{-1}]^{(x) m}: s-exponent and x-exponents -> coefficient.
using GmKey = std::pair<int32_t, std::vector<int32_t>>;
using GmElem = std::map<GmKey, RatFunc>;

void gm_add(GmElem& x, const GmKey& k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = x.emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
}

GmElem gm_rho(const LaurentElem& a, std::vector<int32_t> prefix = {}) {
    GmElem out;
    for (const auto& [e, c] : a.terms()) {
        auto key = prefix;
        key.insert(key.begin(), e[0]);
        gm_add(out, {e[0], key}, c);
    }
    return out;
}

// Is 1 - x^k a multiple of x^m - 1 in F_p[x, x^{-1}]?
bool divisible(uint32_t p, uint32_t k, uint32_t m) {
    const Poly f = Poly::constant(p, 1) - Poly::monomial(p, 1, k);
    const Poly g = Poly::monomial(p, 1, m) - Poly::constant(p, 1);
    return f.divmod(g).second.is_zero();
}

}  // namespace

GmReport gm_symbolic_ring(uint32_t p, const std::vector<uint32_t>& digits, unsigned L, int D) {
    if (digits.size() < L) throw InputError("need digits a_0..a_{L-1}");
    GmReport rep;
    auto make = [&](const std::vector<uint32_t>& a) {
        std::vector<RatFunc> data;
        for (unsigned l = 0; l < L; ++l)
            data.push_back(RatFunc(Poly::constant(p, a[l] % p), Poly::monomial(p, 1, ipow(p, l))));
        return make_theta_ring(p, L, {"s"}, {Action::Diagonal}, {data}, false);
    };
    const ThetaRingPtr R = make(digits);
    std::vector<LaurentElem> window;
    for (int j = -D; j <= D; ++j) window.push_back(R->r(0, j));
    rep.monomials_checked = window.size();
    rep.iterative = hderiv::is_iterative(*R->theta).verdict && iterative_on(*R->theta, window).verdict;

    rep.coaction_axioms = true;
    for (const auto& m : window) {
        const int32_t j = m.terms().begin()->first[0];
        // (rho (x) id) rho and (id (x) Delta) rho
        GmElem lhs, rhs;
        LaurentElem back(R->ctx);
        for (const auto& [k, c] : gm_rho(m)) {
            const int32_t xe = k.second[0];
            for (const auto& [k2, c2] : gm_rho(LaurentElem::monomial(R->ctx, {k.first}, c), {xe}))
                gm_add(lhs, k2, c2);
            gm_add(rhs, {k.first, {xe, xe}}, c);
            back.add_term({k.first}, c);  // counit sends x^j to 1
            if (xe != j) rep.coaction_axioms = false;
        }
        if (lhs != rhs || !(back == m)) rep.coaction_axioms = false;
        // theta-equivariance needs theta^{(k)}(s^j) to stay in degree j
        for (unsigned k = 1; k <= R->order(); ++k) {
            const LaurentElem th = R->theta->apply(m, k);
            for (const auto& [e, c] : th.terms())
                if (e[0] != j) rep.coaction_axioms = false;
        }
    }

    rep.invariants = true;
    for (uint32_t k = 1; k <= static_cast<uint32_t>(2 * D); ++k) {
        if (!divisible(p, k, k)) rep.invariants = false;
        if (divisible(p, k, k + 1)) rep.invariants = false;
    }

    const ThetaRingPtr R0 = make(std::vector<uint32_t>(L, 0));
    rep.degenerate_constant = true;
    for (unsigned k = 1; k <= R0->order(); ++k)
        if (!R0->theta->apply(R0->r(0), k).is_zero()) rep.degenerate_constant = false;
    return rep;
}

}  // namespace itconn::galois
