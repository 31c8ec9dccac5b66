#include "itconn/idmod.hpp"

#include "itconn/errors.hpp"
#include "itconn/fp.hpp"
#include "itconn/ring.hpp"

namespace itconn::idmod {

namespace {

RMat zero_mat(uint32_t p, std::size_t n) { return RMat(n, n, RatFunc(p)); }
RMat ident(uint32_t p, std::size_t n) { return RMat::identity(n, RatFunc(p)); }

// q = p^i for the lowest nonzero base-p digit of k, and that digit.
std::pair<uint64_t, uint32_t> lowest_digit(uint64_t k, uint32_t p) {
    uint64_t q = 1;
    while (k % p == 0) {
        k /= p;
        q *= p;
    }
    return {q, static_cast<uint32_t>(k % p)};
}

// Fills in the non-p-power terms of a matrix series from the stored
// p-power ones. With `left` the rule is  d C_k = sum_{a+b=q} C_a theta^{(b)}(C_{k-q}),
// otherwise  d A_k = sum_{a+b=q} theta^{(a)}(A_{k-q}) A_b,  where q = p^i is
// the lowest nonzero base-p digit position of k and d the digit there.
// Levels past the stored depth count as zero.
std::vector<RMat> derive_series(const std::vector<RMat>& stored, uint32_t p, std::size_t n,
                                uint64_t K, bool left) {
    std::vector<RMat> out;
    out.reserve(K + 1);
    out.push_back(ident(p, n));
    for (uint64_t k = 1; k <= K; ++k) {
        const auto [q, d] = lowest_digit(k, p);
        if (q == k) {
            unsigned l = 0;
            for (uint64_t x = k; x > 1; x /= p) ++l;
            out.push_back(l < stored.size() ? stored[l] : zero_mat(p, n));
            continue;
        }
        const auto th = theta_series(out[k - q], q);
        RMat acc = zero_mat(p, n);
        for (uint64_t a = 0; a <= q; ++a) acc = acc + (left ? out[a] * th[q - a] : th[a] * out[q - a]);
        out.push_back(acc.scaled(RatFunc::constant(p, inv_mod(d, p))));
    }
    return out;
}

// Matrix over F_p[t] with one shared denominator; products and sums need
// only scalar gcds.
struct FracMat {
    std::size_t r = 0, c = 0;
    std::vector<Poly> num;
    Poly den;
};

Poly exact_div(const Poly& a, const Poly& b) { return b.is_one() ? a : a.divmod(b).first; }

FracMat to_frac(const RMat& m) {
    const uint32_t p = m(0, 0).prime();
    FracMat f{m.rows(), m.cols(), {}, Poly::constant(p, 1)};
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Poly& d = m(i, j).den();
            if (!d.is_one()) f.den = f.den * exact_div(d, Poly::gcd(f.den, d));
        }
    f.num.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            f.num.push_back(m(i, j).num() * exact_div(f.den, m(i, j).den()));
    return f;
}

// acc += x * y
void add_product(FracMat& acc, const FracMat& x, const FracMat& y) {
    const uint32_t p = acc.den.prime();
    std::vector<Poly> prod(x.r * y.c, Poly(p));
    for (std::size_t i = 0; i < x.r; ++i)
        for (std::size_t k = 0; k < x.c; ++k) {
            const Poly& a = x.num[i * x.c + k];
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < y.c; ++j) {
                const Poly& b = y.num[k * y.c + j];
                if (!b.is_zero()) prod[i * y.c + j] += a * b;
            }
        }
    const Poly d = x.den * y.den;
    const Poly g = Poly::gcd(acc.den, d);
    const Poly up_acc = exact_div(d, g), up_prod = exact_div(acc.den, g);
    for (std::size_t e = 0; e < prod.size(); ++e) {
        Poly v = prod[e].is_zero() ? prod[e] : prod[e] * up_prod;
        if (!acc.num[e].is_zero()) v += acc.num[e] * up_acc;
        acc.num[e] = std::move(v);
    }
    acc.den = acc.den * up_acc;
}

bool frac_equal_scaled(const FracMat& x, const FracMat& y, uint32_t s) {
    for (std::size_t e = 0; e < x.num.size(); ++e) {
        const Poly lhs = x.num[e].is_zero() ? x.num[e] : x.num[e] * y.den;
        const Poly rhs = y.num[e].is_zero() || s == 0 ? Poly(x.den.prime()) : (y.num[e] * x.den).scaled(s);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

CompatibilityReport check_series(const std::vector<RMat>& s, uint32_t p, bool left) {
    CompatibilityReport rep;
    const uint64_t K = s.size() - 1;
    const std::size_t n = s[0].rows();
    std::vector<FracMat> fs;
    for (const auto& m : s) fs.push_back(to_frac(m));
    std::vector<std::vector<FracMat>> th(K + 1);
    for (uint64_t k = 1; k <= K; ++k)
        for (const auto& m : theta_series(s[k], K - k)) th[k].push_back(to_frac(m));
    for (uint64_t tot = 2; tot <= K; ++tot)
        for (uint64_t k = 1; k < tot; ++k) {
            const uint64_t l = tot - k;
            FracMat acc{n, n, std::vector<Poly>(n * n, Poly(p)), Poly::constant(p, 1)};
            for (uint64_t i = 0; i <= l; ++i) {
                if (left) add_product(acc, fs[l - i], th[k][i]);
                else add_product(acc, th[k][i], fs[l - i]);
            }
            ++rep.pairs_checked;
            if (!frac_equal_scaled(acc, fs[tot], binomial_mod_p(tot, l, p)) && rep.pass) {
                rep.pass = false;
                rep.first_failure = std::make_pair(k, l);
            }
        }
    return rep;
}

}  // namespace

IDStructure IDStructure::trivial(uint32_t p, std::size_t n, unsigned L) {
    return IDStructure{p, n, L, std::vector<RMat>(L, zero_mat(p, n))};
}

std::vector<RMat> IDStructure::series(uint64_t K) const { return derive_series(C, p, n, K, true); }

std::vector<RMat> IterableEquation::series(uint64_t K) const {
    return derive_series(A, p, n, K, false);
}

FcProjSystem FcProjSystem::identity(uint32_t p, std::size_t n, unsigned L) {
    return FcProjSystem{p, n, L, std::vector<RMat>(L + 1, ident(p, n))};
}

std::vector<RMat> theta_series(const RMat& M, uint64_t K) {
    std::vector<RMat> out(K + 1, M);
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
            const auto tay = M(i, j).taylor(K);
            for (uint64_t k = 0; k <= K; ++k) out[k](i, j) = tay[k];
        }
    return out;
}

RMat frobenius(const RMat& M, unsigned l) {
    return M.map([l](const RatFunc& f) { return f.frobenius(l); });
}

bool frobenius_compatibility(const RatFunc& f, unsigned l) {
    if (l > 4) throw InputError("frobenius_compatibility: level above 4");
    const uint64_t q = ipow(f.prime(), l);
    if (q == 1) return true;
    const auto tay = f.taylor(q - 1);
    for (uint64_t j = 1; j < q; ++j)
        if (!tay[j].is_zero()) return false;
    return true;
}

CompatibilityReport check_compatibility(const IDStructure& s) {
    return check_series(s.series(ipow(s.p, s.L) - 1), s.p, true);
}

CompatibilityReport check_compatibility(const IterableEquation& e) {
    return check_series(e.series(ipow(e.p, e.L) - 1), e.p, false);
}

std::vector<RMat> kernel_descent(const IDStructure& s, unsigned l) {
    const uint32_t p = s.p;
    const std::size_t n = s.n;
    std::vector<RMat> lattices{ident(p, n)};
    if (l == 0) return lattices;
    if (s.L == 0) throw InputError("kernel_descent: target level exceeds the structure depth");

    // Theta^{(1)} on F^n = sum_a t^a (F^p)^n, as a matrix over F after
    // taking p-th roots of the F^p-coordinates.
    const RMat& C1 = s.C.at(0);
    RMat op(n * p, n * p, RatFunc(p));
    const RatFunc t = RatFunc::t(p);
    for (std::size_t j = 0; j < n; ++j)
        for (uint32_t a = 0; a < p; ++a) {
            const RatFunc ta = t.pow(a);
            for (std::size_t i = 0; i < n; ++i) {
                RatFunc v = ta * C1(i, j);
                if (i == j && a > 0) v += t.pow(a - 1).scaled(a);
                const auto coords = v.frobenius_expand(1);
                for (uint32_t b = 0; b < p; ++b) op(i * p + b, j * p + a) = coords[b].pth_root();
            }
        }
    const auto ker = kernel_basis(op);
    if (ker.size() != n)
        throw RankDefect("kernel of Theta^(1) has rank " + std::to_string(ker.size()) +
                         " instead of " + std::to_string(n));
    RMat B(n, n, RatFunc(p));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i) {
            RatFunc v(p);
            for (uint32_t a = 0; a < p; ++a) v += ker[c][i * p + a].frobenius(1) * t.pow(a);
            B(i, c) = v;
        }
    lattices.push_back(B);
    if (l == 1) return lattices;

    // Induced structure on M_1: D(T) = B^{-1} C(T) theta(B) must live in
    // Mat_n(F^p)[[T^p]].
    const uint64_t K = ipow(p, s.L) - 1;
    const auto Cs = s.series(K);
    const auto thB = theta_series(B, K);
    const RMat Binv = inverse(B);
    IDStructure next{p, n, s.L - 1, {}};
    for (uint64_t k = 1; k <= K; ++k) {
        RMat acc = zero_mat(p, n);
        for (uint64_t a = 0; a <= k; ++a) acc = acc + Cs[a] * thB[k - a];
        const RMat D = Binv * acc;
        if (k % p != 0) {
            if (!D.is_zero())
                throw NotDescendable("induced structure has a nonzero term at T^" + std::to_string(k));
            continue;
        }
        RMat root(n, n, RatFunc(p));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!D(i, j).is_pth_power())
                    throw NotDescendable("induced term at T^" + std::to_string(k) +
                                         " is not a p-th power");
                root(i, j) = D(i, j).pth_root();
            }
        if (is_p_power(k / p, p) && next.C.size() < next.L) next.C.push_back(root);
    }
    const auto sub = kernel_descent(next, l - 1);
    for (std::size_t k = 1; k < sub.size(); ++k) lattices.push_back(B * frobenius(sub[k], 1));
    return lattices;
}

bool same_lattice(const RMat& B, const RMat& B2, unsigned l) {
    RMat G;
    try {
        G = inverse(B) * B2;
        (void)inverse(G);
        for (std::size_t i = 0; i < G.rows(); ++i)
            for (std::size_t j = 0; j < G.cols(); ++j) (void)pth_root_iter(G(i, j), l);
    } catch (const MathError&) {
        return false;
    }
    return true;
}

void check_chain(const FcProjSystem& s) {
    if (s.B.size() != s.L + 1) throw InputError("lattice chain must have L + 1 matrices");
    if (!(s.B[0] == ident(s.p, s.n))) throw InvariantViolation("B_0 is not the identity");
    for (unsigned l = 0; l < s.L; ++l)
        if (!same_lattice(s.B[l], s.B[l + 1], l))
            throw InvariantViolation("B_" + std::to_string(l) + "^{-1} B_" + std::to_string(l + 1) +
                                     " is not in GL_n(F^{p^" + std::to_string(l) + "})");
}

IDStructure to_connection(const FcProjSystem& s) {
    check_chain(s);
    const uint32_t p = s.p;
    const uint64_t K = ipow(p, s.L) - 1;
    std::vector<std::vector<RMat>> th(s.L + 1);
    for (unsigned l = 1; l <= s.L; ++l) th[l] = theta_series(inverse(s.B[l]), ipow(p, l) - 1);
    IDStructure out{p, s.n, s.L, {}};
    for (uint64_t k = 1; k <= K; ++k) {
        std::optional<RMat> first;
        for (unsigned l = 1; l <= s.L; ++l) {
            if (ipow(p, l) <= k) continue;
            RMat Ck = s.B[l] * th[l][k];
            if (!first) {
                first = Ck;
            } else if (!(*first == Ck)) {
                throw MathError("Theta^(" + std::to_string(k) + ") depends on the level used");
            }
        }
        if (is_p_power(k, p)) out.C.push_back(*first);
    }
    return out;
}

bool roundtrip(const FcProjSystem& s) {
    const IDStructure c = to_connection(s);
    if (!check_compatibility(c).pass) return false;
    const auto back = kernel_descent(c, s.L);
    for (unsigned l = 0; l <= s.L; ++l)
        if (!same_lattice(s.B[l], back[l], l)) return false;
    return true;
}

}  // namespace itconn::idmod
