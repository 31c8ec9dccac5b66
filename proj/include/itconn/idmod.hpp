#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "itconn/matrix.hpp"
#include "itconn/ratfunc.hpp"

namespace itconn::idmod {

using RMat = Matrix<RatFunc>;

// Iterative structure on F^n, F = F_p(t), in coordinates:
//   Theta(x) = C(T) * x(t + T),  C(T) = sum_k C_k T^k,  C_0 = 1.
// Only C_{p^l} for l < L are stored; the rest are derived.
struct IDStructure {
    uint32_t p = 2;
    std::size_t n = 1;
    unsigned L = 3;
    std::vector<RMat> C;  // C[l] = C_{p^l}

    static IDStructure trivial(uint32_t p, std::size_t n, unsigned L);
    // C_0 .. C_K from the stored p-power data.
    std::vector<RMat> series(uint64_t K) const;
};

// Lattice chain B_0 = 1, B_1, ..., B_L; the columns of B_l span M_l over F^{p^l}.
struct FcProjSystem {
    uint32_t p = 2;
    std::size_t n = 1;
    unsigned L = 3;
    std::vector<RMat> B;

    static FcProjSystem identity(uint32_t p, std::size_t n, unsigned L);
};

// p-power data A_{p^l} of theta(Y) = A(T) Y.
struct IterableEquation {
    uint32_t p = 2;
    std::size_t n = 1;
    unsigned L = 3;
    std::vector<RMat> A;

    std::vector<RMat> series(uint64_t K) const;
};

struct CompatibilityReport {
    bool pass = true;
    uint64_t pairs_checked = 0;
    // (k, l) of the first identity that fails, scanning k + l ascending.
    std::optional<std::pair<uint64_t, uint64_t>> first_failure;
};

// Entrywise Taylor coefficients: out[k] = theta^{(k)}(M), k = 0..K.
std::vector<RMat> theta_series(const RMat& M, uint64_t K);

bool frobenius_compatibility(const RatFunc& f, unsigned l);

CompatibilityReport check_compatibility(const IDStructure& s);
CompatibilityReport check_compatibility(const IterableEquation& e);

// Lattices B_0..B_l of the descending kernels. Throws RankDefect or NotDescendable.
std::vector<RMat> kernel_descent(const IDStructure& s, unsigned l);

// Throws InvariantViolation when the chain is not Frobenius compatible, and
// MathError when two admissible levels disagree.
IDStructure to_connection(const FcProjSystem& s);

// B^{-1} B2 lies in GL_n(F^{p^l}).
bool same_lattice(const RMat& B, const RMat& B2, unsigned l);

void check_chain(const FcProjSystem& s);

bool roundtrip(const FcProjSystem& s);

// Frobenius applied l times entrywise.
RMat frobenius(const RMat& M, unsigned l);

}  // namespace itconn::idmod
