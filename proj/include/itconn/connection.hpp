#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itconn/hdiff.hpp"
#include "itconn/matrix.hpp"

// Higher connections on free modules M = R^n, R = K[t_1..t_m] or F_p(t).
// A connection is stored through Omega with nabla(b_j) = sum_i Omega_ij b_i,
// so on coordinates nabla(x) = Omega * d_R(x).
namespace itconn::connection {

using cga::Element;

template <class C>
using DifMatrix = Matrix<Element<C>>;

template <class C>
class HigherConnection {
public:
    HigherConnection(cga::DescPtr dif, DifMatrix<C> omega) : dif_(std::move(dif)), omega_(std::move(omega)) {
        if (omega_.rows() != omega_.cols()) throw InputError("connection matrix must be square");
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) {
                cga::require_same(omega_(i, j).desc(), dif_);
                const C c0 = omega_(i, j).component(0).degree0();
                const C want = from_int_like(c0, i == j ? 1 : 0);
                if (!(c0 == want) || omega_(i, j).component(0).terms().size() > 1)
                    throw InputError("degree-0 part of the connection matrix must be the identity");
            }
    }

    static HigherConnection trivial(const cga::DescPtr& dif, std::size_t n, const C& like) {
        return HigherConnection(dif, DifMatrix<C>::identity(n, Element<C>::scalar(dif, like)));
    }

    std::size_t rank() const { return omega_.rows(); }
    const cga::DescPtr& dif() const { return dif_; }
    const DifMatrix<C>& omega() const { return omega_; }
    const C& like() const { return omega_(0, 0).zero(); }

    // nabla(x) for a coordinate vector x over R.
    Vec<Element<C>> apply(const Vec<C>& x) const {
        Vec<Element<C>> dx;
        for (const auto& c : x) dx.push_back(hdiff::d_R(c, dif_));
        return mat_vec(omega_, dx);
    }

    // a._Dif nabla(w) = (a.Omega) * (a.d_Dif)(w) on Dif (x) M.
    Vec<Element<C>> dif_nabla(const Vec<Element<C>>& w, int64_t a = 1) const {
        const auto dd = hdiff::d_Dif_map(a, dif_, like());
        Vec<Element<C>> dw;
        for (const auto& e : w) dw.push_back(dd.apply(e));
        return mat_vec(a == 1 ? omega_ : scaled_omega(a), dw);
    }

    DifMatrix<C> scaled_omega(int64_t a) const {
        return omega_.map([a](const Element<C>& e) { return cga::weight_shift_scale(e, a, 0); });
    }

private:
    cga::DescPtr dif_;
    DifMatrix<C> omega_;
};

template <class C>
Vec<Element<C>> basis_vector(const cga::DescPtr& d, std::size_t n, std::size_t k, const C& like) {
    Vec<Element<C>> v(n, Element<C>(d, like));
    v[k] = Element<C>::scalar(d, one_like(like));
    return v;
}

template <class C>
Vec<Element<C>> vec_component(const Vec<Element<C>>& v, unsigned k) {
    Vec<Element<C>> out;
    for (const auto& e : v) out.push_back(e.component(k));
    return out;
}

template <class C>
unsigned vec_max_degree(const Vec<Element<C>>& v) {
    unsigned d = 0;
    for (const auto& e : v) d = std::max(d, e.max_degree());
    return d;
}

// _Dif nabla^{(i)}(w): the part of _Dif nabla raising degree by i.
template <class C>
Vec<Element<C>> dif_nabla_component(const HigherConnection<C>& nabla, unsigned i, const Vec<Element<C>>& w) {
    Vec<Element<C>> out(w.size(), Element<C>(nabla.dif(), nabla.like()));
    for (unsigned j = 0; j <= vec_max_degree(w); ++j) {
        auto wj = vec_component(w, j);
        auto img = vec_component(nabla.dif_nabla(wj), i + j);
        for (std::size_t r = 0; r < out.size(); ++r) out[r] += img[r];
    }
    return out;
}

template <class C>
std::string render_vec(const Vec<Element<C>>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + cga::render(v[i]);
    return s + "]";
}

// Component rule _Dif nabla^{(i)} o _Dif nabla^{(j)} = C(i+j, i) _Dif nabla^{(i+j)}
// on the spanning set {monomial (x) b_k} with monomials of weight <= span_degree.
// Both sides are d_Dif-semilinear, so the monomials stand in for all of Dif.
template <class C>
hderiv::IterativityReport is_iterative_connection(const HigherConnection<C>& nabla, unsigned span_degree = 2) {
    hderiv::IterativityReport rep;
    const auto& d = nabla.dif();
    const unsigned N = d->N;
    rep.checked_order = N;
    const C& like = nabla.like();

    std::vector<Element<C>> monos{Element<C>::scalar(d, one_like(like))};
    for (std::size_t pos = 0; pos < monos.size(); ++pos)
        for (std::size_t s = 0; s < d->symbols.size(); ++s) {
            Element<C> next = monos[pos] * Element<C>::symbol(d, s, like);
            if (next.is_zero() || next.max_degree() > span_degree) continue;
            if (std::find(monos.begin(), monos.end(), next) == monos.end()) monos.push_back(next);
        }

    for (const auto& mono : monos)
        for (std::size_t k = 0; k < nabla.rank(); ++k) {
            Vec<Element<C>> w = basis_vector(d, nabla.rank(), k, like);
            for (auto& e : w) e = e * mono;
            const unsigned base = mono.max_degree();
            std::vector<Vec<Element<C>>> comp;
            for (unsigned i = 0; base + i <= N; ++i) comp.push_back(dif_nabla_component(nabla, i, w));
            for (unsigned s = 2; base + s <= N; ++s)
                for (unsigned i = 1; i < s; ++i) {
                    auto lhs = dif_nabla_component(nabla, i, comp[s - i]);
                    auto rhs = comp[s];
                    const C b = binom_like(like, s, i);
                    for (auto& e : rhs) e = e.scaled(b);
                    if (lhs != rhs) {
                        rep.verdict = false;
                        rep.first_failure =
                            hderiv::IterativityFailure{i, s - i, k, render_vec(lhs), render_vec(rhs)};
                        return rep;
                    }
                }
        }
    return rep;
}

// (a._Dif nabla) o (b.nabla) = (a+b).nabla on basis vectors, for all a, b in F_p.
template <class C>
bool scalar_law_holds(const HigherConnection<C>& nabla, uint32_t p) {
    const auto& d = nabla.dif();
    for (int64_t a = 0; a < p; ++a)
        for (int64_t b = 0; b < p; ++b) {
            const auto ob = nabla.scaled_omega(b), oab = nabla.scaled_omega((a + b) % p);
            for (std::size_t k = 0; k < nabla.rank(); ++k) {
                Vec<Element<C>> col, want;
                for (std::size_t i = 0; i < nabla.rank(); ++i) {
                    col.push_back(ob(i, k));
                    want.push_back(oab(i, k));
                }
                if (nabla.dif_nabla(col, a) != want) return false;
            }
        }
    (void)d;
    return true;
}

// Columns W_j = (_Dif nabla)^{-1}(1 (x) b_j), solved degree by degree:
// the degree-n part of Omega * d_Dif(w) only involves w below degree n
// besides the identity term.
template <class C>
DifMatrix<C> dif_nabla_inverse_on_basis(const HigherConnection<C>& nabla) {
    const auto& d = nabla.dif();
    const std::size_t n = nabla.rank();
    DifMatrix<C> W(n, n, Element<C>(d, nabla.like()));
    for (std::size_t j = 0; j < n; ++j) {
        Vec<Element<C>> w = basis_vector(d, n, j, nabla.like());
        for (unsigned deg = 1; deg <= d->N; ++deg) {
            auto img = vec_component(nabla.dif_nabla(w), deg);
            for (std::size_t i = 0; i < n; ++i) w[i] -= img[i];
        }
        for (std::size_t i = 0; i < n; ++i) W(i, j) = w[i];
    }
    return W;
}

template <class C>
DifMatrix<C> dif_matrix_d(const DifMatrix<C>& m, int64_t a = 1) {
    if (m.rows() == 0) return m;
    const auto dd = hdiff::d_Dif_map(a, m(0, 0).desc(), m(0, 0).zero());
    return m.map([&dd](const Element<C>& e) { return dd.apply(e); });
}

template <class C>
DifMatrix<C> embed(const Matrix<C>& f, const cga::DescPtr& d) {
    return f.map([&d](const C& c) { return Element<C>::scalar(d, c); });
}

template <class C>
DifMatrix<C> unipotent_inverse(const DifMatrix<C>& omega) {
    const std::size_t n = omega.rows();
    const auto& d = omega(0, 0).desc();
    const auto I = DifMatrix<C>::identity(n, Element<C>::scalar(d, omega(0, 0).zero()));
    const DifMatrix<C> negP = I - omega;
    DifMatrix<C> acc = I, term = I;
    for (unsigned k = 1; k <= d->N; ++k) {
        term = term * negP;
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return acc;
}

// nabla on M1 (x) M2 from (mu (x) id) o (nabla1 (x) nabla2); basis b_i (x) c_k
// has index i * rank2 + k.
template <class C>
HigherConnection<C> tensor(const HigherConnection<C>& a, const HigherConnection<C>& b) {
    cga::require_same(a.dif(), b.dif());
    return HigherConnection<C>(a.dif(), kron(a.omega(), b.omega()));
}

// nabla*(f) = d_Dif o (id (x) f) o (_Dif nabla)^{-1} restricted to 1 (x) M.
// For f = b_k^*, the coefficient on b_j^* is d_Dif(W_kj).
template <class C>
HigherConnection<C> dual(const HigherConnection<C>& nabla) {
    const auto W = dif_nabla_inverse_on_basis(nabla);
    return HigherConnection<C>(nabla.dif(), dif_matrix_d(W).transpose());
}

// nabla_H(f) = _Dif nabla2 o (id (x) f) o (_Dif nabla1)^{-1} on 1 (x) M1.
// Hom basis E_ab (b_b -> c_a) has index a * rank1 + b.
template <class C>
HigherConnection<C> hom(const HigherConnection<C>& n1, const HigherConnection<C>& n2) {
    cga::require_same(n1.dif(), n2.dif());
    const auto& d = n1.dif();
    const C& like = n1.like();
    const std::size_t r1 = n1.rank(), r2 = n2.rank();
    const auto W1 = dif_nabla_inverse_on_basis(n1);
    DifMatrix<C> omega(r1 * r2, r1 * r2, Element<C>(d, like));
    for (std::size_t a = 0; a < r2; ++a)
        for (std::size_t b = 0; b < r1; ++b) {
            // (id (x) E_ab)(W1) keeps row b of W1 and moves it to row a
            for (std::size_t j = 0; j < r1; ++j) {
                Vec<Element<C>> v(r2, Element<C>(d, like));
                v[a] = W1(b, j);
                auto img = n2.dif_nabla(v);
                for (std::size_t c = 0; c < r2; ++c) omega(c * r1 + j, a * r1 + b) = img[c];
            }
        }
    return HigherConnection<C>(d, omega);
}

template <class C>
struct ConnectionMorphism {
    HigherConnection<C> source, target;
    Matrix<C> f;  // target.rank() x source.rank()
};

// nabla2 o f = (id (x) f) o nabla1, i.e. Omega2 * d_R(F) = F * Omega1.
template <class C>
bool is_morphism(const ConnectionMorphism<C>& m) {
    const auto& d = m.source.dif();
    cga::require_same(d, m.target.dif());
    if (m.f.rows() != m.target.rank() || m.f.cols() != m.source.rank())
        throw InputError("morphism matrix has the wrong shape");
    const DifMatrix<C> dF = m.f.map([&d](const C& c) { return hdiff::d_R(c, d); });
    return m.target.omega() * dF == embed(m.f, d) * m.source.omega();
}

template <class C>
Matrix<C> evaluation_matrix(std::size_t n, const C& like) {
    Matrix<C> f(1, n * n, zero_like(like));
    for (std::size_t i = 0; i < n; ++i) f(0, i * n + i) = one_like(like);
    return f;
}

template <class C>
Matrix<C> coevaluation_matrix(std::size_t n, const C& like) {
    Matrix<C> f(n * n, 1, zero_like(like));
    for (std::size_t i = 0; i < n; ++i) f(i * n + i, 0) = one_like(like);
    return f;
}

// iota: M1* (x) M2 -> Hom(M1, M2), b_j^* (x) c_a -> E_aj.
template <class C>
Matrix<C> iota_matrix(std::size_t r1, std::size_t r2, const C& like) {
    Matrix<C> f(r1 * r2, r1 * r2, zero_like(like));
    for (std::size_t j = 0; j < r1; ++j)
        for (std::size_t a = 0; a < r2; ++a) f(a * r1 + j, j * r2 + a) = one_like(like);
    return f;
}

// Components nabla_psi^{(k)} = evaluate(psi, Omega) at T^k, k = 0..N.
template <class C>
std::vector<Matrix<C>> apply_psi(const HigherConnection<C>& nabla, const hderiv::HigherDerivation<C>& psi) {
    const auto ev = hdiff::evaluation_map(psi, nabla.dif());
    const auto img = nabla.omega().map([&ev](const Element<C>& e) { return ev.apply(e); });
    std::vector<Matrix<C>> out;
    for (unsigned k = 0; k <= psi.order(); ++k)
        out.push_back(img.map([k](const Element<C>& e) { return e.coeff_T(k); }));
    return out;
}

// Psi^{(k)}(x) = sum_{a+b=k} (Omega_psi)_a psi^{(b)}(x).
template <class C>
Vec<C> psi_derivation_component(const std::vector<Matrix<C>>& omega_psi, const hderiv::HigherDerivation<C>& psi,
                                unsigned k, const Vec<C>& x) {
    Vec<C> out(x.size(), zero_like(psi.like()));
    std::vector<Element<C>> px;
    for (const auto& c : x) px.push_back(psi.apply(c));
    for (unsigned a = 0; a <= k; ++a) {
        Vec<C> v;
        for (const auto& e : px) v.push_back(e.coeff_T(k - a));
        auto w = mat_vec(omega_psi[a], v);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += w[i];
    }
    return out;
}

template <class C>
bool psi_derivation_is_iterative(const HigherConnection<C>& nabla, const hderiv::HigherDerivation<C>& psi) {
    const auto om = apply_psi(nabla, psi);
    const unsigned N = psi.order();
    const C& like = psi.like();
    for (std::size_t l = 0; l < nabla.rank(); ++l) {
        Vec<C> e(nabla.rank(), zero_like(like));
        e[l] = one_like(like);
        for (unsigned s = 2; s <= N; ++s)
            for (unsigned i = 1; i < s; ++i) {
                auto lhs = psi_derivation_component(om, psi, i, psi_derivation_component(om, psi, s - i, e));
                auto rhs = psi_derivation_component(om, psi, s, e);
                for (auto& c : rhs) c = binom_like(like, s, i) * c;
                if (lhs != rhs) return false;
            }
    }
    return true;
}

struct IntegrabilityEvidence {
    bool verdict = true;
    std::size_t pairs_checked = 0;
    std::string label = "finite-family evidence, not a proof";
};

// nabla_{psi1 psi2} = nabla_{psi1} nabla_{psi2} for psi in {a.phi_{t_j}} and
// their pairwise products, compared on basis vectors.
IntegrabilityEvidence integrability_evidence(const HigherConnection<MPoly>& nabla);

// Smallest multi-index k (by |k|, then lexicographically) with
// phi^{(k)}(r) a unit in the localization at (t_1..t_m).
std::vector<unsigned> unit_derivative_search(const MPoly& r);

// Omega = sum_k C_k D^k with D = sum_{i>=1} d^{(i)}t: the integrable iterative
// connection on F_p(t)^n whose Taylor components are the given C_k.
HigherConnection<RatFunc> from_theta_matrices(const std::vector<Matrix<RatFunc>>& C, const cga::DescPtr& dif);

// Dimension check behind kernel exactness: dim Ker(id (x) f) in weighted
// degree k equals (number of weight-k monomials) * dim Ker(f).
struct KernelPlumbingResult {
    std::size_t monomials = 0, kernel_f = 0, kernel_tensor = 0;
    bool ok() const { return kernel_tensor == monomials * kernel_f; }
};
KernelPlumbingResult kernel_plumbing(const Matrix<RatFunc>& f, const cga::DescPtr& dif, unsigned degree);

}  // namespace itconn::connection
