#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "itconn/fpmatrix.hpp"

namespace itconn::hopf {

using FpVec = std::vector<uint32_t>;

// A finite-dimensional commutative Hopf algebra over F_p, given by
// structure constants on a fixed basis.
//   mult[i * dim + j]   coordinates of b_i * b_j
//   comult[i]           coordinates of Delta(b_i) in the basis b_a (x) b_b, index a * dim + b
struct HopfAlgebra {
    uint32_t p = 2;
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<FpVec> mult;
    std::vector<FpVec> comult;
    FpVec counit;
    std::vector<FpVec> antipode;
    FpVec unit;

    FpVec basis(std::size_t i) const;
    FpVec multiply(const FpVec& a, const FpVec& b) const;
    FpVec power(const FpVec& a, uint64_t e) const;
    std::string render(const FpVec& v) const;
};

struct HopfAxioms {
    bool associative = false;
    bool commutative = false;
    bool unital = false;
    bool coassociative = false;
    bool counital = false;
    bool bialgebra = false;
    bool antipode = false;
    bool all() const {
        return associative && commutative && unital && coassociative && counital && bialgebra && antipode;
    }
};

HopfAxioms check_axioms(const HopfAlgebra& h);

// Coordinate rings. Each constructor verifies the axioms and throws
// InputError if they fail.
HopfAlgebra mu(uint32_t p, std::size_t k, const std::string& var = "x");  // F_p[x]/(x^k - 1)
HopfAlgebra alpha(uint32_t p, const std::string& var = "y");             // F_p[y]/(y^p), y primitive
HopfAlgebra trivial_group(uint32_t p);
HopfAlgebra product(const HopfAlgebra& a, const HopfAlgebra& b);        // tensor product

// Subspaces are stored as a reduced row echelon basis.
struct Subspace {
    uint32_t p = 2;
    std::size_t ambient = 0;
    std::vector<FpVec> basis;
    std::size_t dim() const { return basis.size(); }
    bool contains(const FpVec& v) const;
    bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

Subspace span(uint32_t p, std::size_t ambient, const std::vector<FpVec>& vectors);
Subspace ideal(const HopfAlgebra& h, const std::vector<FpVec>& generators);
Subspace intersect(const Subspace& a, const Subspace& b);
bool is_ideal(const HopfAlgebra& h, const Subspace& s);
bool is_hopf_ideal(const HopfAlgebra& h, const Subspace& s);
// Rows q with Q v = 0 exactly when v lies in s.
FpMatrix annihilator(const Subspace& s);
// Every ideal of h, by exhaustive enumeration of subspaces (small p^dim only).
std::vector<Subspace> all_ideals(const HopfAlgebra& h);

// Matrix of x -> x^p; it is F_p-linear because the algebra is commutative.
FpMatrix frobenius_matrix(const HopfAlgebra& h);
// Nilradical as the kernel of a high enough Frobenius iterate.
Subspace nilradical(const HopfAlgebra& h);
bool is_reduced(const HopfAlgebra& h);

}  // namespace itconn::hopf
