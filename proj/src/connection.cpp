#include "itconn/connection.hpp"

#include <functional>
#include <map>

namespace itconn::connection {

namespace {

template <class C>
Matrix<Element<C>> psi_series(const HigherConnection<C>& nabla, const hderiv::HigherDerivation<C>& psi) {
    const auto ev = hdiff::evaluation_map(psi, nabla.dif());
    return nabla.omega().map([&ev](const Element<C>& e) { return ev.apply(e); });
}

}  // namespace

IntegrabilityEvidence integrability_evidence(const HigherConnection<MPoly>& nabla) {
    IntegrabilityEvidence ev;
    const auto& d = nabla.dif();
    const MPoly& like = nabla.like();
    const uint32_t p = like.prime();
    const std::size_t m = d->base_vars.size(), n = nabla.rank();
    std::vector<hderiv::HigherDerivation<MPoly>> family;
    for (std::size_t j = 0; j < m; ++j)
        for (int64_t a = 1; a < p; ++a) family.push_back(hderiv::phi_t(p, m, j, d->N).scaled(a));
    const auto& T = family.at(0).codomain();

    for (const auto& psi1 : family)
        for (const auto& psi2 : family) {
            const auto om1 = psi_series(nabla, psi1), om2 = psi_series(nabla, psi2);
            const auto om12 = psi_series(nabla, hderiv::multiply_hd(psi1, psi2));
            for (std::size_t l = 0; l < n; ++l) {
                // nabla_{psi1}[[T]] applied to nabla_{psi2}(b_l)
                Vec<Element<MPoly>> total(n, Element<MPoly>(T, like));
                for (unsigned k = 0; k <= d->N; ++k) {
                    Vec<Element<MPoly>> u;
                    bool nonzero = false;
                    for (std::size_t i = 0; i < n; ++i) {
                        const MPoly c = om2(i, l).coeff_T(k);
                        nonzero = nonzero || !c.is_zero();
                        u.push_back(psi1.apply(c));
                    }
                    if (!nonzero) continue;
                    auto img = mat_vec(om1, u);
                    const auto Tk = Element<MPoly>::symbol(T, 0, like, k);
                    for (std::size_t i = 0; i < n; ++i) total[i] += img[i] * Tk;
                }
                for (std::size_t i = 0; i < n; ++i)
                    if (!(total[i] == om12(i, l))) ev.verdict = false;
            }
            ++ev.pairs_checked;
        }
    return ev;
}

std::vector<unsigned> unit_derivative_search(const MPoly& r) {
    if (r.is_zero()) throw ZeroInput("the zero polynomial has no unit derivative");
    const std::size_t m = r.nvars();
    const int bound = r.total_degree();
    auto is_unit = [&r](const std::vector<unsigned>& k) {
        Exponent e(k.begin(), k.end());
        return r.hasse(e).constant_term() != 0;
    };
    for (int s = 0; s <= bound; ++s) {
        // all k with |k| = s in ascending lexicographic order
        std::vector<unsigned> k(m, 0);
        std::vector<std::vector<unsigned>> cands;
        std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
            if (pos + 1 == m) {
                k[pos] = left;
                cands.push_back(k);
                return;
            }
            for (unsigned v = 0; v <= left; ++v) {
                k[pos] = v;
                rec(pos + 1, left - v);
            }
        };
        rec(0, static_cast<unsigned>(s));
        for (const auto& cand : cands) {
            if (!is_unit(cand)) continue;
            // every smaller index must give a non-unit
            std::vector<unsigned> l(m, 0);
            bool minimal = true;
            std::function<void(std::size_t)> below = [&](std::size_t pos) {
                if (!minimal) return;
                if (pos == m) {
                    if (l != cand && is_unit(l)) minimal = false;
                    return;
                }
                for (unsigned v = 0; v <= cand[pos]; ++v) {
                    l[pos] = v;
                    below(pos + 1);
                }
            };
            below(0);
            if (minimal) return cand;
        }
    }
    throw MathError("no unit derivative found");  // unreachable for r != 0
}

HigherConnection<RatFunc> from_theta_matrices(const std::vector<Matrix<RatFunc>>& C, const cga::DescPtr& dif) {
    const std::size_t n = C.at(0).rows();
    const RatFunc like(C.at(0)(0, 0).prime());
    Element<RatFunc> D(dif, like);
    for (unsigned i = 1; i <= dif->N; ++i) D += hdiff::d_symbol(dif, i, 0, like);
    DifMatrix<RatFunc> omega(n, n, Element<RatFunc>(dif, like));
    Element<RatFunc> Dk = Element<RatFunc>::scalar(dif, one_like(like));
    for (unsigned k = 0; k <= dif->N && k < C.size(); ++k) {
        omega = omega + embed(C[k], dif).scaled(Dk);
        Dk *= D;
    }
    return HigherConnection<RatFunc>(dif, omega);
}

KernelPlumbingResult kernel_plumbing(const Matrix<RatFunc>& f, const cga::DescPtr& dif, unsigned degree) {
    const RatFunc like(f(0, 0).prime());
    std::vector<Element<RatFunc>> monos{Element<RatFunc>::scalar(dif, one_like(like))}, top;
    for (std::size_t pos = 0; pos < monos.size(); ++pos) {
        if (monos[pos].max_degree() == degree) top.push_back(monos[pos]);
        for (std::size_t s = 0; s < dif->symbols.size(); ++s) {
            Element<RatFunc> next = monos[pos] * Element<RatFunc>::symbol(dif, s, like);
            if (next.is_zero() || next.max_degree() > degree) continue;
            if (std::find(monos.begin(), monos.end(), next) == monos.end()) monos.push_back(next);
        }
    }
    KernelPlumbingResult res;
    res.monomials = top.size();
    res.kernel_f = kernel_basis(f).size();
    const std::size_t r1 = f.cols(), r2 = f.rows();
    Matrix<RatFunc> big(top.size() * r2, top.size() * r1, zero_like(like));
    const auto F = embed(f, dif);
    for (std::size_t mu = 0; mu < top.size(); ++mu)
        for (std::size_t j = 0; j < r1; ++j) {
            Vec<Element<RatFunc>> w = basis_vector(dif, r1, j, like);
            for (auto& e : w) e = e * top[mu];
            auto img = mat_vec(F, w);
            for (std::size_t nu = 0; nu < top.size(); ++nu) {
                const auto& key = top[nu].terms().begin()->first;
                for (std::size_t i = 0; i < r2; ++i) big(nu * r2 + i, mu * r1 + j) = img[i].coeff(key);
            }
        }
    res.kernel_tensor = kernel_basis(big).size();
    return res;
}

}  // namespace itconn::connection
