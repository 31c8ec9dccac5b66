#include "itconn/galois.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>

#include "itconn/errors.hpp"
#include "itconn/fp.hpp"
#include "itconn/matrix.hpp"

namespace itconn::galois {

namespace {

uint64_t ipow(uint64_t b, unsigned e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

int32_t floor_mod(int32_t e, int32_t p) { return ((e % p) + p) % p; }

Element<LaurentElem> t_plus_T(const cga::DescPtr& d, const LaurentElem& like) {
    return Element<LaurentElem>::scalar(d, LaurentElem::scalar(like.ctx(), RatFunc::t(like.prime()))) +
           Element<LaurentElem>::symbol(d, 0, like);
}

Element<LaurentElem> generator_image(const cga::DescPtr& d, const LaurentElem& r, Action a,
                                     const std::vector<RatFunc>& c) {
    Element<LaurentElem> img(d, r);
    const Mono zero(1, 0);
    if (a == Action::Diagonal) {
        for (std::size_t k = 0; k < c.size(); ++k) img.add_term(Mono{static_cast<uint8_t>(k)}, r.scaled(c[k]));
    } else {
        img.add_term(zero, r);
        for (std::size_t k = 1; k < c.size(); ++k)
            img.add_term(Mono{static_cast<uint8_t>(k)}, LaurentElem::scalar(r.ctx(), c[k]));
    }
    return img;
}

}  // namespace

std::vector<RatFunc> complete_series(uint32_t p, unsigned L, Action a, const std::vector<RatFunc>& pdata) {
    if (pdata.size() < L) throw InputError("p-power data is required for every level below L");
    const uint64_t N = ipow(p, L) - 1;
    if (N > 255) throw InputError("theta order above 255 is not supported");
    std::vector<RatFunc> c(N + 1, RatFunc(p));
    if (a == Action::Diagonal) c[0] = RatFunc::constant(p, 1);
    for (uint64_t k = 1; k <= N; ++k) {
        unsigned i = 0;
        uint64_t q = 1, rest = k;
        while (rest % p == 0) rest /= p, q *= p, ++i;
        const uint32_t d = static_cast<uint32_t>(rest % p);
        if (k == q) {
            c[k] = pdata[i];
            continue;
        }
        const uint64_t kp = k - q;
        const auto tay = c[kp].taylor(q);
        RatFunc acc(p);
        if (a == Action::Diagonal)
            for (uint64_t s = 0; s <= q; ++s) acc += tay[s] * c[q - s];
        else
            acc = tay[q];
        c[k] = acc.scaled(inv_mod(d, p));
    }
    return c;
}

std::size_t ThetaRing::basis_size() const { return inseparable ? ipow(p, gens()) : 0; }

Exps ThetaRing::basis_exps(std::size_t idx) const {
    Exps a(gens(), 0);
    for (std::size_t i = 0; i < gens(); ++i) {
        a[i] = static_cast<int32_t>(idx % p);
        idx /= p;
    }
    return a;
}

std::size_t ThetaRing::basis_index(const Exps& a) const {
    std::size_t idx = 0;
    for (std::size_t i = gens(); i-- > 0;) idx = idx * p + static_cast<std::size_t>(a[i]);
    return idx;
}

std::vector<LaurentElem> ThetaRing::coords(const LaurentElem& x) const {
    if (!inseparable) throw InputError("F-coordinates need r_i^p in the base field");
    std::vector<LaurentElem> out(basis_size(), LaurentElem(uctx));
    const int32_t pp = static_cast<int32_t>(p);
    for (const auto& [e, g] : x.terms()) {
        Exps a(e.size()), j(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            a[i] = floor_mod(e[i], pp);
            j[i] = (e[i] - a[i]) / pp;
        }
        out[basis_index(a)].add_term(std::move(j), g);
    }
    return out;
}

ThetaRingPtr make_theta_ring(uint32_t p, unsigned L, std::vector<std::string> names,
                             std::vector<Action> actions,
                             const std::vector<std::vector<RatFunc>>& pdata, bool inseparable) {
    if (names.size() != actions.size() || names.size() != pdata.size())
        throw InputError("one action and one data row per generator");
    auto R = std::make_shared<ThetaRing>();
    R->p = p;
    R->L = L;
    std::vector<std::string> unames;
    for (const auto& n : names) unames.push_back("u_" + n);
    std::vector<std::string> base{"t"};
    base.insert(base.end(), names.begin(), names.end());
    R->ctx = make_laurent_ctx(p, std::move(names));
    R->uctx = make_laurent_ctx(p, std::move(unames));
    R->actions = std::move(actions);
    R->inseparable = inseparable;
    for (std::size_t i = 0; i < R->actions.size(); ++i)
        R->series.push_back(complete_series(p, L, R->actions[i], pdata[i]));
    const auto d = cga::power_series(base, static_cast<unsigned>(ipow(p, L) - 1));
    const LaurentElem one = R->one();
    std::vector<Element<LaurentElem>> imgs{t_plus_T(d, one)};
    for (std::size_t i = 0; i < R->actions.size(); ++i)
        imgs.push_back(generator_image(d, R->r(i), R->actions[i], R->series[i]));
    R->theta = std::make_shared<const LaurentHD>(hderiv::DomainKind::Laurent, d, std::move(imgs));
    return R;
}

ThetaRingPtr subring(const ThetaRing& R, const std::vector<std::size_t>& gens) {
    std::vector<std::string> names;
    std::vector<Action> actions;
    std::vector<std::vector<RatFunc>> data;
    for (auto g : gens) {
        names.push_back(R.ctx->names.at(g));
        actions.push_back(R.actions.at(g));
        std::vector<RatFunc> row;
        for (unsigned l = 0; l < R.L; ++l) row.push_back(R.series[g][ipow(R.p, l)]);
        data.push_back(std::move(row));
    }
    return make_theta_ring(R.p, R.L, std::move(names), std::move(actions), data, R.inseparable);
}

IterativityReport iterative_on(const LaurentHD& theta, const std::vector<LaurentElem>& xs) {
    IterativityReport rep;
    const unsigned N = theta.order();
    rep.checked_order = N;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const Element<LaurentElem> full = theta.apply(xs[j]);
        std::vector<Element<LaurentElem>> inner;
        for (unsigned i = 0; i <= N; ++i) inner.push_back(theta.apply(full.coeff_T(i)));
        for (unsigned s = 2; s <= N; ++s)
            for (unsigned i = 1; i < s; ++i) {
                const LaurentElem lhs = inner[i].coeff_T(s - i);
                const LaurentElem rhs = binom_like(lhs, s, i) * full.coeff_T(s);
                if (!(lhs == rhs)) {
                    rep.verdict = false;
                    rep.first_failure = hderiv::IterativityFailure{i, s - i, j, lhs.to_string(), rhs.to_string()};
                    return rep;
                }
            }
    }
    return rep;
}

bool relations_respected(const ThetaRing& R, const std::vector<Element<LaurentElem>>& theta_of_pth_powers) {
    if (theta_of_pth_powers.size() != R.gens()) throw InputError("one relation per generator");
    for (std::size_t i = 0; i < R.gens(); ++i) {
        const Element<LaurentElem> lhs = R.theta->images()[1 + i].pow(R.p);
        if (!(lhs.terms() == theta_of_pth_powers[i].terms())) return false;
    }
    return true;
}

LaurentElem Square::left(const LaurentElem& x) const {
    LaurentElem out(ctx2);
    const std::size_t s = R->gens();
    for (const auto& [e, g] : x.terms()) {
        Exps e2(2 * s, 0);
        std::copy(e.begin(), e.end(), e2.begin());
        out.add_term(std::move(e2), g);
    }
    return out;
}

LaurentElem Square::right(const LaurentElem& x) const {
    LaurentElem out(ctx2);
    const std::size_t s = R->gens();
    for (const auto& [e, g] : x.terms()) {
        Exps e2(2 * s, 0);
        std::copy(e.begin(), e.end(), e2.begin() + static_cast<std::ptrdiff_t>(s));
        out.add_term(std::move(e2), g);
    }
    return out;
}

Square tensor_square(const ThetaRingPtr& R) {
    if (!R->inseparable) throw InputError("the tensor square model needs r_i^p in the base field");
    Square sq;
    sq.R = R;
    const std::size_t s = R->gens();
    std::vector<std::string> names = R->ctx->names;
    std::vector<std::pair<std::size_t, std::size_t>> folds;
    for (std::size_t i = 0; i < s; ++i) {
        names.push_back(R->ctx->names[i] + "'");
        folds.emplace_back(s + i, i);
    }
    std::vector<std::string> base{"t"};
    base.insert(base.end(), names.begin(), names.end());
    sq.ctx2 = make_laurent_ctx(R->p, std::move(names), std::move(folds));
    const auto d = cga::power_series(base, R->order());
    const LaurentElem one = LaurentElem::scalar(sq.ctx2, RatFunc::constant(R->p, 1));
    std::vector<Element<LaurentElem>> imgs{t_plus_T(d, one)};
    for (int side = 0; side < 2; ++side)
        for (std::size_t i = 0; i < s; ++i)
            imgs.push_back(generator_image(d, LaurentElem::gen(sq.ctx2, side * s + i), R->actions[i], R->series[i]));
    sq.theta = std::make_shared<const LaurentHD>(hderiv::DomainKind::Laurent, d, std::move(imgs));
    return sq;
}

RHElem RHElem::pure(LaurentCtxPtr ctx, const HopfAlgebra* h, const LaurentElem& a, std::vector<uint32_t> key) {
    RHElem x(std::move(ctx), h, key.size());
    x.add(key, a);
    return x;
}

void RHElem::add(const std::vector<uint32_t>& key, const LaurentElem& a) {
    if (a.is_zero()) return;
    auto [it, fresh] = parts_.emplace(key, a);
    if (fresh) return;
    it->second += a;
    if (it->second.is_zero()) parts_.erase(it);
}

RHElem RHElem::operator+(const RHElem& o) const {
    RHElem r = *this;
    for (const auto& [k, a] : o.parts_) r.add(k, a);
    return r;
}

RHElem RHElem::operator-(const RHElem& o) const {
    RHElem r = *this;
    for (const auto& [k, a] : o.parts_) r.add(k, -a);
    return r;
}

RHElem RHElem::operator*(const RHElem& o) const {
    RHElem r(ctx_, h_, m_);
    const std::size_t d = h_->dim;
    const uint32_t p = h_->p;
    for (const auto& [k1, a1] : parts_)
        for (const auto& [k2, a2] : o.parts_) {
            const LaurentElem prod = a1 * a2;
            // expand the tensor product of the factorwise products
            std::vector<std::pair<std::vector<uint32_t>, uint32_t>> acc{{{}, 1}};
            for (std::size_t f = 0; f < m_; ++f) {
                const FpVec& m = h_->mult[k1[f] * d + k2[f]];
                std::vector<std::pair<std::vector<uint32_t>, uint32_t>> next;
                for (const auto& [key, c] : acc)
                    for (std::size_t b = 0; b < d; ++b) {
                        if (!m[b]) continue;
                        auto nk = key;
                        nk.push_back(static_cast<uint32_t>(b));
                        next.emplace_back(std::move(nk), static_cast<uint32_t>(uint64_t(c) * m[b] % p));
                    }
                acc = std::move(next);
            }
            for (const auto& [key, c] : acc) r.add(key, prod.scaled(RatFunc::constant(p, c)));
        }
    return r;
}

RHElem RHElem::theta(const LaurentHD& th, unsigned k) const {
    RHElem r(ctx_, h_, m_);
    for (const auto& [key, a] : parts_) r.add(key, th.apply(a, k));
    return r;
}

std::string RHElem::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (const auto& [key, a] : parts_) {
        if (!out.empty()) out += " + ";
        out += "(" + a.to_string() + ")";
        for (auto k : key) out += " (x) " + h_->names[k];
    }
    return out;
}

RHElem Coaction::unit() const {
    RHElem u(R->ctx, H.get(), 1);
    for (std::size_t j = 0; j < H->dim; ++j)
        if (H->unit[j]) u.add({static_cast<uint32_t>(j)}, R->one().scaled(RatFunc::constant(R->p, H->unit[j])));
    return u;
}

RHElem Coaction::apply(const LaurentElem& x) const {
    const int32_t p = static_cast<int32_t>(R->p);
    RHElem out(R->ctx, H.get(), 1);
    std::map<Exps, RHElem> cache;
    for (const auto& [e, g] : x.terms()) {
        Exps a(e.size()), rest(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            a[i] = floor_mod(e[i], p);
            rest[i] = e[i] - a[i];
        }
        auto it = cache.find(a);
        if (it == cache.end()) {
            RHElem v = unit();
            for (std::size_t i = 0; i < a.size(); ++i)
                for (int32_t k = 0; k < a[i]; ++k) v = v * rho_gens[i];
            it = cache.emplace(a, std::move(v)).first;
        }
        // r^{p j} lies in F, so rho is the identity on it
        out = out + RHElem::pure(R->ctx, H.get(), LaurentElem::monomial(R->ctx, rest, g), {0}).operator*(it->second);
    }
    return out;
}

namespace {

std::shared_ptr<const HopfAlgebra> power_group(uint32_t p, const std::vector<HopfAlgebra>& factors) {
    if (factors.empty()) return std::make_shared<const HopfAlgebra>(hopf::trivial_group(p));
    HopfAlgebra h = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) h = hopf::product(h, factors[i]);
    return std::make_shared<const HopfAlgebra>(std::move(h));
}

// Basis index of the group element whose i-th factor has index j.
uint32_t factor_index(const HopfAlgebra& h, std::size_t factors, std::size_t i, uint32_t j) {
    const std::size_t per = static_cast<std::size_t>(std::llround(std::pow(double(h.dim), 1.0 / double(factors))));
    std::size_t stride = 1;
    for (std::size_t f = i + 1; f < factors; ++f) stride *= per;
    return static_cast<uint32_t>(j * stride);
}

}  // namespace

Coaction mu_coaction(const ThetaRingPtr& R) {
    Coaction co;
    co.R = R;
    std::vector<HopfAlgebra> fs;
    for (std::size_t i = 0; i < R->gens(); ++i) fs.push_back(hopf::mu(R->p, R->p, "x" + std::to_string(i + 1)));
    co.H = power_group(R->p, fs);
    for (std::size_t i = 0; i < R->gens(); ++i)
        co.rho_gens.push_back(RHElem::pure(R->ctx, co.H.get(), R->r(i), {factor_index(*co.H, R->gens(), i, 1)}));
    return co;
}

Coaction alpha_coaction(const ThetaRingPtr& R) {
    Coaction co;
    co.R = R;
    std::vector<HopfAlgebra> fs;
    for (std::size_t i = 0; i < R->gens(); ++i) fs.push_back(hopf::alpha(R->p, "y" + std::to_string(i + 1)));
    co.H = power_group(R->p, fs);
    for (std::size_t i = 0; i < R->gens(); ++i) {
        RHElem v = RHElem::pure(R->ctx, co.H.get(), R->r(i), {0});
        v.add({factor_index(*co.H, R->gens(), i, 1)}, R->one());
        co.rho_gens.push_back(std::move(v));
    }
    return co;
}

CoactionReport check_coaction(const Coaction& co) {
    CoactionReport rep{true, true, true};
    const ThetaRing& R = *co.R;
    const HopfAlgebra& h = *co.H;
    const std::size_t d = h.dim;
    for (std::size_t idx = 0; idx < R.basis_size(); ++idx) {
        const LaurentElem x = LaurentElem::monomial(R.ctx, R.basis_exps(idx), RatFunc::constant(R.p, 1));
        const RHElem rx = co.apply(x);
        RHElem lhs(R.ctx, &h, 2), rhs(R.ctx, &h, 2);
        LaurentElem counit_side(R.ctx);
        for (const auto& [key, a] : rx.parts()) {
            const RHElem ra = co.apply(a);
            for (const auto& [k2, a2] : ra.parts()) lhs.add({k2[0], key[0]}, a2);
            const FpVec& D = h.comult[key[0]];
            for (std::size_t u = 0; u < d * d; ++u)
                if (D[u])
                    rhs.add({static_cast<uint32_t>(u / d), static_cast<uint32_t>(u % d)},
                            a.scaled(RatFunc::constant(R.p, D[u])));
            counit_side += a.scaled(RatFunc::constant(R.p, h.counit[key[0]]));
        }
        if (!(lhs == rhs)) rep.coassociative = false;
        if (!(counit_side == x)) rep.counital = false;
        for (unsigned k = 1; k <= R.order() && rep.equivariant; ++k)
            if (!(co.apply(R.theta->apply(x, k)) == rx.theta(*R.theta, k))) rep.equivariant = false;
    }
    return rep;
}

RHElem gamma(const Coaction& co, const Square&, const LaurentElem& x) {
    const std::size_t s = co.R->gens();
    RHElem out(co.R->ctx, co.H.get(), 1);
    for (const auto& [e, g] : x.terms()) {
        Exps left(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(s));
        Exps right(e.begin() + static_cast<std::ptrdiff_t>(s), e.end());
        const RHElem l = RHElem::pure(co.R->ctx, co.H.get(), LaurentElem::monomial(co.R->ctx, left, g), {0});
        out = out + l * co.apply(LaurentElem::monomial(co.R->ctx, right, RatFunc::constant(co.R->p, 1)));
    }
    return out;
}

namespace {

std::vector<LaurentElem> rh_coords(const ThetaRing& R, const RHElem& v) {
    const std::size_t d = v.hopf().dim;
    std::vector<LaurentElem> col(R.basis_size() * d, LaurentElem(R.uctx));
    for (const auto& [key, a] : v.parts()) {
        const auto c = R.coords(a);
        for (std::size_t b = 0; b < c.size(); ++b) col[b * d + key[0]] += c[b];
    }
    return col;
}

}  // namespace

TorsorReport check_torsor(const Coaction& co) {
    TorsorReport rep;
    const ThetaRing& R = *co.R;
    const Square sq = tensor_square(co.R);
    const std::size_t n = R.basis_size();
    rep.source_dim = n * n;
    rep.target_dim = n * co.H->dim;
    std::vector<std::vector<LaurentElem>> cols;
    rep.equivariant = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const LaurentElem x =
                sq.left(LaurentElem::monomial(R.ctx, R.basis_exps(a), RatFunc::constant(R.p, 1))) *
                sq.right(LaurentElem::monomial(R.ctx, R.basis_exps(b), RatFunc::constant(R.p, 1)));
            const RHElem gx = gamma(co, sq, x);
            cols.push_back(rh_coords(R, gx));
            for (unsigned k = 1; k <= R.order() && rep.equivariant; ++k) {
                if (!(gamma(co, sq, sq.theta->apply(x, k)) == gx.theta(*R.theta, k))) {
                    rep.equivariant = false;
                    rep.failure = "gamma does not commute with theta^(" + std::to_string(k) + ") on " + x.to_string();
                }
            }
        }
    rep.rank = f_rank(cols);
    rep.bijective = rep.source_dim == rep.target_dim && rep.rank == rep.source_dim;
    if (!rep.bijective && !rep.failure) rep.failure = "gamma has F-rank " + std::to_string(rep.rank);
    return rep;
}

std::size_t f_rank(const std::vector<std::vector<LaurentElem>>& columns) {
    if (columns.empty()) return 0;
    const std::size_t rows = columns[0].size(), ncols = columns.size();
    if (rows == 0) return 0;
    std::size_t nu = 0;
    uint32_t p = 2;
    for (const auto& col : columns)
        for (const auto& x : col)
            if (!x.is_zero()) {
                nu = x.ctx()->ngens();
                p = x.prime();
            }
    // Polynomial entries after clearing column denominators and shifting u-exponents.
    std::vector<std::vector<std::map<Exps, Poly>>> polys(ncols, std::vector<std::map<Exps, Poly>>(rows));
    int dt = 0;
    std::vector<int64_t> du(nu, 0);
    for (std::size_t c = 0; c < ncols; ++c) {
        Poly lcm = Poly::constant(p, 1);
        Exps mins(nu, INT32_MAX);
        for (const auto& x : columns[c])
            for (const auto& [e, g] : x.terms()) {
                const Poly gg = Poly::gcd(lcm, g.den());
                lcm = lcm * g.den().divmod(gg).first;
                for (std::size_t i = 0; i < nu; ++i) mins[i] = std::min(mins[i], e[i]);
            }
        for (std::size_t r = 0; r < rows; ++r)
            for (const auto& [e, g] : columns[c][r].terms()) {
                Exps sh(nu);
                for (std::size_t i = 0; i < nu; ++i) {
                    sh[i] = e[i] - mins[i];
                    du[i] = std::max<int64_t>(du[i], sh[i]);
                }
                Poly v = g.num() * lcm.divmod(g.den()).first;
                dt = std::max(dt, v.degree());
                polys[c][r].emplace(std::move(sh), std::move(v));
            }
    }
    const int64_t n = static_cast<int64_t>(std::min(rows, ncols));
    std::vector<int64_t> w(nu);
    int64_t acc = n * dt + 1;
    for (std::size_t i = 0; i < nu; ++i) {
        w[i] = acc;
        acc *= n * du[i] + 1;
    }
    if (acc > (int64_t(1) << 24)) throw InputError("Kronecker substitution degree too large");
    Matrix<RatFunc> m(rows, ncols, RatFunc(p));
    for (std::size_t c = 0; c < ncols; ++c)
        for (std::size_t r = 0; r < rows; ++r) {
            Poly z(p);
            for (const auto& [e, v] : polys[c][r]) {
                int64_t shift = 0;
                for (std::size_t i = 0; i < nu; ++i) shift += e[i] * w[i];
                z += v.shifted(static_cast<std::size_t>(shift));
            }
            m(r, c) = RatFunc(z);
        }
    return rank(m);
}

bool same_f_span(const ThetaRing& R, const std::vector<LaurentElem>& a, const std::vector<LaurentElem>& b) {
    std::vector<std::vector<LaurentElem>> ca, cb, all;
    for (const auto& x : a) ca.push_back(R.coords(x));
    for (const auto& x : b) cb.push_back(R.coords(x));
    all = ca;
    all.insert(all.end(), cb.begin(), cb.end());
    const std::size_t ra = f_rank(ca), rb = f_rank(cb);
    return ra == rb && f_rank(all) == ra;
}

bool invariance_test(const Coaction& co, const Subspace& I, const LaurentElem& r, const LaurentElem& s) {
    const Square sq = tensor_square(co.R);
    const LaurentElem x = sq.left(r) * sq.right(s) - sq.left(s) * sq.right(r);
    const RHElem g = gamma(co, sq, x);
    const FpMatrix q = hopf::annihilator(I);
    // group the H-components by the R-monomial they multiply
    std::map<Exps, std::vector<RatFunc>> by_mono;
    for (const auto& [key, a] : g.parts())
        for (const auto& [e, c] : a.terms()) {
            auto& v = by_mono.try_emplace(e, std::vector<RatFunc>(co.H->dim, RatFunc(co.R->p))).first->second;
            v[key[0]] += c;
        }
    for (const auto& [e, v] : by_mono)
        for (std::size_t row = 0; row < q.rows(); ++row) {
            RatFunc acc(co.R->p);
            for (std::size_t j = 0; j < v.size(); ++j)
                if (q(row, j)) acc += v[j].scaled(q(row, j));
            if (!acc.is_zero()) return false;
        }
    return true;
}

std::vector<LaurentElem> invariant_subalgebra(const Coaction& co, const Subspace& I) {
    const ThetaRing& R = *co.R;
    const std::size_t n = R.basis_size(), d = co.H->dim;
    const FpMatrix q = hopf::annihilator(I);
    // (rho_H - iota)(r^a) in F-coordinates (b, row of q)
    std::vector<std::vector<LaurentElem>> cols;
    for (std::size_t a = 0; a < n; ++a) {
        const LaurentElem x = LaurentElem::monomial(R.ctx, R.basis_exps(a), RatFunc::constant(R.p, 1));
        const RHElem diff =
            co.apply(x) - RHElem::pure(R.ctx, co.H.get(), x, {0}).operator*(co.unit());
        const auto full = rh_coords(R, diff);
        std::vector<LaurentElem> col(n * q.rows(), LaurentElem(R.uctx));
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t row = 0; row < q.rows(); ++row)
                for (std::size_t j = 0; j < d; ++j)
                    if (q(row, j)) col[b * q.rows() + row] += full[b * d + j].scaled(RatFunc::constant(R.p, q(row, j)));
        cols.push_back(std::move(col));
    }
    const std::size_t nrows = n * q.rows();
    std::vector<LaurentElem> basis;
    if (nrows == 0) {
        for (std::size_t a = 0; a < n; ++a)
            basis.push_back(LaurentElem::monomial(R.ctx, R.basis_exps(a), RatFunc::constant(R.p, 1)));
        return basis;
    }
    Matrix<RatFunc> m(nrows, n, RatFunc(R.p));
    const Exps zero(R.gens(), 0);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < nrows; ++r) {
            const auto& x = cols[c][r];
            if (x.is_zero()) continue;
            if (x.terms().size() != 1 || x.terms().begin()->first != zero)
                throw InputError("invariants are computed only when rho_H - iota is defined over F_p(t)");
            m(r, c) = x.terms().begin()->second;
        }
    for (const auto& v : kernel_basis(m)) {
        LaurentElem b(R.ctx);
        for (std::size_t a = 0; a < n; ++a) b.add_term(R.basis_exps(a), v[a]);
        basis.push_back(std::move(b));
    }
    return basis;
}

ThetaRingPtr mupmup_ring(uint32_t p, const std::vector<uint32_t>& digits, const std::vector<uint32_t>& digits2,
                         unsigned L) {
    if (digits.size() < L + 1 || digits2.size() < L + 1) throw InputError("need digits a_0..a_L");
    std::vector<std::vector<RatFunc>> data(2);
    for (int i = 0; i < 2; ++i) {
        const auto& a = i == 0 ? digits : digits2;
        for (unsigned l = 0; l < L; ++l) {
            const uint32_t al = a[l + 1] % p;
            const std::size_t q = ipow(p, l);
            if (al == 0) {
                data[i].push_back(RatFunc(p));
                continue;
            }
            const Poly num = Poly::monomial(p, al, q * (al - 1));
            const Poly den = Poly::monomial(p, 1, q * al) + Poly::constant(p, 1);
            data[i].push_back(RatFunc(num, den));
        }
    }
    return make_theta_ring(p, L, {"r1", "r2"}, {Action::Diagonal, Action::Diagonal}, data, true);
}

std::vector<Element<LaurentElem>> mupmup_relation_theta(const ThetaRing& R, const std::vector<uint32_t>& digits,
                                                        const std::vector<uint32_t>& digits2) {
    // f = (1 + t^{a_0})^{-1} s with s = (1 + t^{a_0}) r^p, and theta(s) / s is
    // the product of (1 + (t^q + T^q)^{a_l}) / (1 + t^{a_l q}) over levels.
    const auto& d = R.theta->codomain();
    const uint32_t p = R.p;
    const unsigned N = R.order();
    std::vector<Element<LaurentElem>> out;
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& a = i == 0 ? digits : digits2;
        const LaurentElem rp = R.r(i, static_cast<int32_t>(p));
        Element<LaurentElem> ratio = Element<LaurentElem>::scalar(d, R.one());
        for (unsigned l = 0; ipow(p, l) <= N; ++l) {
            const uint32_t al = a.at(l) % p;
            if (al == 0) continue;
            const std::size_t q = ipow(p, l);
            Element<LaurentElem> tq = Element<LaurentElem>::scalar(d, R.scalar(RatFunc(Poly::monomial(p, 1, q))));
            if (q <= N) tq += Element<LaurentElem>::symbol(d, 0, R.one(), static_cast<unsigned>(q));
            const Element<LaurentElem> num = Element<LaurentElem>::scalar(d, R.one()) + tq.pow(al);
            const RatFunc den(Poly::monomial(p, 1, q * al) + Poly::constant(p, 1));
            ratio = ratio * num.scaled(R.scalar(den.inverse()));
        }
        const uint32_t a0 = a.at(0) % p;
        Element<LaurentElem> inv_unit = Element<LaurentElem>::scalar(d, R.one());
        if (a0 != 0) {
            const Element<LaurentElem> tT = t_plus_T(d, R.one());
            const Element<LaurentElem> u = Element<LaurentElem>::scalar(d, R.one()) + tT.pow(a0);
            const RatFunc s0(Poly::monomial(p, 1, a0) + Poly::constant(p, 1));
            inv_unit = u.inverse().scaled(R.scalar(s0));
        }
        out.push_back((ratio * inv_unit).scaled(rp));
    }
    return out;
}

ThetaRingPtr alpalp_ring(uint32_t p, const std::vector<uint32_t>& digits, const std::vector<uint32_t>& digits2,
                         unsigned L) {
    if (digits.size() < L + 1 || digits2.size() < L + 1) throw InputError("need digits a_0..a_L");
    std::vector<std::vector<RatFunc>> data(2);
    for (int i = 0; i < 2; ++i) {
        const auto& a = i == 0 ? digits : digits2;
        for (unsigned l = 0; l < L; ++l) data[i].push_back(RatFunc::constant(p, a[l + 1] % p));
    }
    return make_theta_ring(p, L, {"r1", "r2"}, {Action::Additive, Action::Additive}, data, true);
}

std::vector<Element<LaurentElem>> alpalp_relation_theta(const ThetaRing& R, const std::vector<uint32_t>& digits,
                                                        const std::vector<uint32_t>& digits2) {
    // f = s - a_0 t with s = r^p + a_0 t and theta(s) = s + sum a_l T^{p^l}.
    const auto& d = R.theta->codomain();
    const uint32_t p = R.p;
    std::vector<Element<LaurentElem>> out;
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& a = i == 0 ? digits : digits2;
        const RatFunc a0 = RatFunc::constant(p, a.at(0) % p);
        const LaurentElem s = R.r(i, static_cast<int32_t>(p)) + R.scalar(a0 * RatFunc::t(p));
        Element<LaurentElem> th = Element<LaurentElem>::scalar(d, s);
        for (unsigned l = 0; ipow(p, l) <= R.order(); ++l)
            th += Element<LaurentElem>::symbol(d, 0, R.one(), static_cast<unsigned>(ipow(p, l)))
                      .scaled(R.scalar(RatFunc::constant(p, a.at(l) % p)));
        th -= t_plus_T(d, R.one()).scaled(R.scalar(a0));
        out.push_back(th);
    }
    return out;
}

}  // namespace itconn::galois
