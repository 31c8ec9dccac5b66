#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "itconn/idmod.hpp"

namespace itconn::solver {

using Series = std::vector<uint32_t>;  // coefficients of t^0 .. t^N

// n x n grid of power series over F_p truncated after t^N.
struct SeriesMatrix {
    uint32_t p = 2;
    std::size_t n = 1;
    std::size_t N = 0;
    std::vector<Series> e;

    SeriesMatrix() = default;
    SeriesMatrix(uint32_t p, std::size_t n, std::size_t N)
        : p(p), n(n), N(N), e(n * n, Series(N + 1, 0)) {}
    static SeriesMatrix identity(uint32_t p, std::size_t n, std::size_t N);

    Series& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
    const Series& at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
    friend bool operator==(const SeriesMatrix&, const SeriesMatrix&) = default;

    SeriesMatrix operator*(const SeriesMatrix& o) const;
    // theta^{(k)} coefficientwise; terms past t^{N-k} are dropped to zero.
    SeriesMatrix theta(uint64_t k) const;
    // Inverse when the constant term is invertible over F_p.
    SeriesMatrix inverse() const;
    // Keeps t^0 .. t^M.
    SeriesMatrix truncated(std::size_t M) const;
    std::string entry_string(std::size_t i, std::size_t j) const;
};

// Expansion of f at t = 0. Throws PoleAtOrigin.
Series expand(const RatFunc& f, std::size_t N);
SeriesMatrix expand(const idmod::RMat& m, std::size_t N);

struct SolutionReport {
    bool pass = true;
    std::size_t N = 0;
    // p-power orders q whose equation fails, ascending, each with the lowest
    // t-degree where it fails.
    std::vector<std::pair<uint64_t, std::size_t>> failures;
    std::optional<uint64_t> first_failing_order() const {
        if (failures.empty()) return std::nullopt;
        return failures.front().first;
    }
    std::optional<uint64_t> max_failing_order() const {
        if (failures.empty()) return std::nullopt;
        return failures.back().first;
    }
};

// Y(0) = 1 and theta^{(q)}(Y) = A_q Y mod t^{N-q+1} for every p-power q <= N.
// Throws Inconsistent when the recursion output fails the full check.
SeriesMatrix solve_fundamental(const idmod::IterableEquation& E, std::size_t N);

SolutionReport verify_solution(const SeriesMatrix& Y, const idmod::IterableEquation& E,
                               std::size_t N);

// Kernel of theta^{(k)} for every k in `orders` on the span of `basis` in
// F_p[[t]]/t^{N+1}; orders empty means 1..N. Returns a basis of the kernel.
std::vector<Series> constants(uint32_t p, const std::vector<Series>& basis, std::size_t N,
                              std::vector<uint64_t> orders = {});

}  // namespace itconn::solver
