#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "itconn/hderiv.hpp"
#include "itconn/hopf.hpp"
#include "itconn/laurent.hpp"

namespace itconn::galois {

using hopf::FpVec;
using hopf::HopfAlgebra;
using hopf::Subspace;
using cga::Element;
using cga::Mono;
using hderiv::HigherDerivation;
using hderiv::IterativityReport;
using LaurentHD = HigherDerivation<LaurentElem>;

// How theta moves a generator: theta(r) = c(T) r, or theta(r) = r + c(T) with c(0) = 0.
enum class Action { Diagonal, Additive };

// Completes p-power data c_{p^l} (l < L) to the full series c_0..c_{p^L - 1}.
std::vector<RatFunc> complete_series(uint32_t p, unsigned L, Action a, const std::vector<RatFunc>& pdata);

// F_p(t)[r_1^{+-1}, ..., r_s^{+-1}] with an iterative theta determined by
// p-power data. When `inseparable` is set, each r_i^p is a new transcendental
// u_i of the base field F, so r^a (a in [0, p)^s) is an F-basis.
struct ThetaRing {
    uint32_t p = 2;
    unsigned L = 1;
    LaurentCtxPtr ctx;
    LaurentCtxPtr uctx;  // the u_i = r_i^p, used for coordinates over F
    std::vector<Action> actions;
    std::vector<std::vector<RatFunc>> series;
    bool inseparable = true;
    std::shared_ptr<const LaurentHD> theta;

    unsigned order() const { return theta->order(); }
    std::size_t gens() const { return ctx->ngens(); }
    LaurentElem one() const { return scalar(RatFunc::constant(p, 1)); }
    LaurentElem scalar(const RatFunc& c) const { return LaurentElem::scalar(ctx, c); }
    LaurentElem r(std::size_t i, int32_t power = 1) const { return LaurentElem::gen(ctx, i, power); }
    std::size_t basis_size() const;
    Exps basis_exps(std::size_t idx) const;
    std::size_t basis_index(const Exps& a) const;
    // Coordinates over F in the basis r^a, as polynomials in u.
    std::vector<LaurentElem> coords(const LaurentElem& x) const;
};

using ThetaRingPtr = std::shared_ptr<const ThetaRing>;

ThetaRingPtr make_theta_ring(uint32_t p, unsigned L, std::vector<std::string> names,
                             std::vector<Action> actions,
                             const std::vector<std::vector<RatFunc>>& pdata, bool inseparable);

// The theta-subring generated over F by the listed generators.
ThetaRingPtr subring(const ThetaRing& R, const std::vector<std::size_t>& gens);

// theta^{(k)} theta^{(i)} = C(i + k, i) theta^{(i+k)} on each listed element.
IterativityReport iterative_on(const LaurentHD& theta, const std::vector<LaurentElem>& xs);

// Checks theta(r_i)^p against independently known theta(r_i^p).
bool relations_respected(const ThetaRing& R, const std::vector<Element<LaurentElem>>& theta_of_pth_powers);

// R (x)_F R with generators r_i and r'_i; r'_i^p = r_i^p.
struct Square {
    ThetaRingPtr R;
    LaurentCtxPtr ctx2;
    std::shared_ptr<const LaurentHD> theta;
    LaurentElem left(const LaurentElem& x) const;
    LaurentElem right(const LaurentElem& x) const;
};
Square tensor_square(const ThetaRingPtr& R);

// An element of R (x) H^{(x)m}, keyed by H basis multi-indices.
class RHElem {
public:
    RHElem(LaurentCtxPtr ctx, const HopfAlgebra* h, std::size_t m) : ctx_(std::move(ctx)), h_(h), m_(m) {}
    static RHElem pure(LaurentCtxPtr ctx, const HopfAlgebra* h, const LaurentElem& a, std::vector<uint32_t> key);

    const std::map<std::vector<uint32_t>, LaurentElem>& parts() const { return parts_; }
    std::size_t factors() const { return m_; }
    const HopfAlgebra& hopf() const { return *h_; }
    void add(const std::vector<uint32_t>& key, const LaurentElem& a);
    RHElem operator*(const RHElem& o) const;
    RHElem operator+(const RHElem& o) const;
    RHElem operator-(const RHElem& o) const;
    RHElem theta(const LaurentHD& th, unsigned k) const;
    bool operator==(const RHElem& o) const { return parts_ == o.parts_; }
    std::string to_string() const;

private:
    LaurentCtxPtr ctx_;
    const HopfAlgebra* h_;
    std::size_t m_;
    std::map<std::vector<uint32_t>, LaurentElem> parts_;
};

// rho: R -> R (x) K[G], fixed by the images of the generators.
struct Coaction {
    ThetaRingPtr R;
    std::shared_ptr<const HopfAlgebra> H;
    std::vector<RHElem> rho_gens;
    RHElem apply(const LaurentElem& x) const;
    RHElem unit() const;
};

Coaction mu_coaction(const ThetaRingPtr& R);     // r_i -> r_i (x) x_i, G = mu_p^s
Coaction alpha_coaction(const ThetaRingPtr& R);  // r_i -> r_i (x) 1 + 1 (x) y_i, G = alpha_p^s

struct CoactionReport {
    bool coassociative = false;
    bool counital = false;
    bool equivariant = false;
    bool pass() const { return coassociative && counital && equivariant; }
};
CoactionReport check_coaction(const Coaction& co);

// gamma: R (x)_F R -> R (x) K[G], r (x) s -> (r (x) 1) rho(s).
RHElem gamma(const Coaction& co, const Square& sq, const LaurentElem& x);

struct TorsorReport {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t rank = 0;
    bool bijective = false;
    bool equivariant = false;
    std::optional<std::string> failure;
    bool pass() const { return bijective && equivariant; }
};
TorsorReport check_torsor(const Coaction& co);

// Exact rank over F = F_p(t, u) of a matrix whose entries are u-Laurent
// polynomials with F_p(t) coefficients, by clearing denominators and a
// degree-separated Kronecker substitution into F_p(z).
std::size_t f_rank(const std::vector<std::vector<LaurentElem>>& columns);
bool same_f_span(const ThetaRing& R, const std::vector<LaurentElem>& a, const std::vector<LaurentElem>& b);

// gamma(r (x) s - s (x) r) lies in R (x) I.
bool invariance_test(const Coaction& co, const Subspace& I, const LaurentElem& r, const LaurentElem& s);
// F-basis of R^H, H the closed subgroup cut out by the Hopf ideal I.
std::vector<LaurentElem> invariant_subalgebra(const Coaction& co, const Subspace& I);

struct ConstantsReport {
    std::size_t dim = 0;         // K-dimension, measured as the F-rank of the constants found
    std::size_t window_dim = 0;  // F_p-dimension of the kernel inside the window
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::vector<LaurentElem> basis;
};
// theta-constants of R (x)_F R among F_p-combinations of t^i r^e r'^b with
// e in [-p, p - 1]^s, b in [0, p)^s and i <= t_degree. Constants of F are
// absorbed by measuring the F-rank of what is found.
ConstantsReport constants_of_square(const ThetaRingPtr& R, unsigned t_degree = 0);

struct ReducednessReport {
    bool hopf_reduced = false;
    std::size_t hopf_nilradical_dim = 0;
    bool square_reduced = false;
    std::size_t square_frobenius_kernel = 0;
    bool certificate_nilpotent = false;  // (r_1 - r'_1)^p = 0 when it applies
    bool consistent() const { return hopf_reduced == square_reduced; }
};
ReducednessReport reduced_and_separable(const ThetaRingPtr& R, const HopfAlgebra& h);

struct SimplicityReport {
    std::size_t checked = 0;
    bool pass = true;
    std::optional<std::string> failure;
};
// Every nonzero element tried has its p-th power in F^*, so it is a unit.
SimplicityReport theta_simplicity(const ThetaRing& R, std::size_t samples, uint64_t seed);

struct BijectionReport {
    std::size_t ideals_of_L = 0;
    std::size_t theta_ideals = 0;
    bool single_jordan_block = false;
    bool round_trips = false;
    bool theta_stable = false;
    bool pass() const { return single_jordan_block && round_trips && theta_stable; }
};
// L = K[x]/(x^p - 1) acting on R (x)_K L.
BijectionReport ideal_bijection(const ThetaRing& R);

struct GmReport {
    bool iterative = false;
    std::size_t monomials_checked = 0;
    bool coaction_axioms = false;
    bool invariants = false;
    bool degenerate_constant = false;
    bool pass() const { return iterative && coaction_axioms && invariants && degenerate_constant; }
};
// F_p(t)[s^{+-1}] with theta^{(p^l)}(s) = a_l t^{-p^l} s, checked on |deg| <= D.
GmReport gm_symbolic_ring(uint32_t p, const std::vector<uint32_t>& digits, unsigned L, int D);

// The two worked families. digits[l] is used at level l; at least L + 1 entries.
ThetaRingPtr mupmup_ring(uint32_t p, const std::vector<uint32_t>& digits,
                         const std::vector<uint32_t>& digits2, unsigned L);
std::vector<Element<LaurentElem>> mupmup_relation_theta(const ThetaRing& R, const std::vector<uint32_t>& digits,
                                                        const std::vector<uint32_t>& digits2);
ThetaRingPtr alpalp_ring(uint32_t p, const std::vector<uint32_t>& digits,
                         const std::vector<uint32_t>& digits2, unsigned L);
std::vector<Element<LaurentElem>> alpalp_relation_theta(const ThetaRing& R, const std::vector<uint32_t>& digits,
                                                        const std::vector<uint32_t>& digits2);

}  // namespace itconn::galois
