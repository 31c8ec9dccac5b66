#include "itconn/solver.hpp"

#include "itconn/errors.hpp"
#include "itconn/fp.hpp"
#include "itconn/fpmatrix.hpp"
#include "itconn/kernels.hpp"

namespace itconn::solver {

namespace {

void add_into(Series& acc, const Series& x, uint32_t p) {
    kernels::axpy_mod(acc.data(), x.data(), acc.size(), 1, p);
}

// Inverse of a constant matrix over F_p.
std::vector<uint32_t> const_inverse(const SeriesMatrix& Y) {
    const std::size_t n = Y.n;
    const uint32_t p = Y.p;
    FpMatrix aug(p, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = Y.at(i, j)[0];
        aug(i, n + i) = 1;
    }
    const auto piv = aug.rref();
    if (piv.size() < n || piv[n - 1] != n - 1) throw NotInvertible("constant term is singular");
    std::vector<uint32_t> inv(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i * n + j] = aug(i, n + j);
    return inv;
}

std::vector<std::pair<uint64_t, uint32_t>> p_power_orders(uint32_t p, std::size_t N) {
    std::vector<std::pair<uint64_t, uint32_t>> out;
    uint64_t q = 1;
    for (uint32_t l = 0; q <= N; ++l, q *= p) out.emplace_back(q, l);
    return out;
}

SeriesMatrix coefficient(const idmod::IterableEquation& E, uint32_t l, std::size_t N) {
    if (l < E.A.size()) return expand(E.A[l], N);
    return SeriesMatrix(E.p, E.n, N);
}

}  // namespace

SeriesMatrix SeriesMatrix::identity(uint32_t p, std::size_t n, std::size_t N) {
    SeriesMatrix m(p, n, N);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i)[0] = 1;
    return m;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
    if (n != o.n || N != o.N || p != o.p) throw InputError("series matrix shape mismatch");
    SeriesMatrix z(p, n, N);
    Series tmp(N + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                kernels::mullo_mod(at(i, k).data(), o.at(k, j).data(), tmp.data(), N + 1, p);
                add_into(z.at(i, j), tmp, p);
            }
    return z;
}

SeriesMatrix SeriesMatrix::theta(uint64_t k) const {
    SeriesMatrix z(p, n, N);
    for (std::size_t e_ = 0; e_ < e.size(); ++e_)
        for (std::size_t j = 0; j + k <= N; ++j)
            if (e[e_][j + k])
                z.e[e_][j] = static_cast<uint32_t>(uint64_t{e[e_][j + k]} * binomial_mod_p(j + k, k, p) % p);
    return z;
}

SeriesMatrix SeriesMatrix::inverse() const {
    const auto c = const_inverse(*this);
    SeriesMatrix X(p, n, N);
    for (std::size_t i = 0; i < n * n; ++i) X.e[i][0] = c[i];
    // Newton: X <- X (2 - Y X), doubling the correct precision each pass.
    SeriesMatrix two = identity(p, n, N);
    for (auto& s : two.e) s[0] = s[0] * 2 % p;
    for (std::size_t prec = 1; prec <= N; prec *= 2) {
        SeriesMatrix YX = *this * X;
        SeriesMatrix corr = two;
        for (std::size_t i = 0; i < n * n; ++i)
            for (std::size_t d = 0; d <= N; ++d) corr.e[i][d] = (corr.e[i][d] + p - YX.e[i][d]) % p;
        X = X * corr;
    }
    return X;
}

SeriesMatrix SeriesMatrix::truncated(std::size_t M) const {
    SeriesMatrix z(p, n, M);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t d = 0; d <= std::min(M, N); ++d) z.e[i][d] = e[i][d];
    return z;
}

std::string SeriesMatrix::entry_string(std::size_t i, std::size_t j) const {
    return Poly(p, at(i, j)).to_string();
}

Series expand(const RatFunc& f, std::size_t N) {
    const uint32_t p = f.prime();
    const Poly& den = f.den();
    if (den.coef(0) == 0) throw PoleAtOrigin("pole at t = 0 in " + f.to_string());
    Series inv(N + 1, 0);
    const uint32_t i0 = inv_mod(den.coef(0), p);
    inv[0] = i0;
    for (std::size_t k = 1; k <= N; ++k) {
        uint64_t acc = 0;
        for (std::size_t i = 1; i <= k && i <= static_cast<std::size_t>(den.degree()); ++i)
            acc += uint64_t{den.coef(i)} * inv[k - i] % p;
        inv[k] = static_cast<uint32_t>((p - acc % p) % p * i0 % p);
    }
    Series num(N + 1, 0);
    for (std::size_t i = 0; i <= N; ++i) num[i] = f.num().coef(i);
    Series out(N + 1);
    kernels::mullo_mod(num.data(), inv.data(), out.data(), N + 1, p);
    return out;
}

SeriesMatrix expand(const idmod::RMat& m, std::size_t N) {
    SeriesMatrix z(m(0, 0).prime(), m.rows(), N);
    if (m.rows() != m.cols()) throw InputError("equation matrices must be square");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) z.at(i, j) = expand(m(i, j), N);
    return z;
}

SeriesMatrix solve_fundamental(const idmod::IterableEquation& E, std::size_t N) {
    const uint32_t p = E.p;
    const std::size_t n = E.n;
    std::vector<SeriesMatrix> A;
    for (auto [q, l] : p_power_orders(p, N)) A.push_back(coefficient(E, l, N));
    SeriesMatrix Y = SeriesMatrix::identity(p, n, N);
    for (std::size_t m = 1; m <= N; ++m) {
        // q = p^l is the lowest nonzero digit position of m, so C(m, q) is that digit.
        std::size_t q = 1, rest = m;
        uint32_t l = 0;
        while (rest % p == 0) {
            rest /= p;
            q *= p;
            ++l;
        }
        const uint32_t dinv = inv_mod(static_cast<uint32_t>(rest % p), p);
        const std::size_t deg = m - q;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                uint64_t acc = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    const Series& a = A[l].at(i, k);
                    const Series& y = Y.at(k, j);
                    for (std::size_t s = 0; s <= deg; ++s) acc += uint64_t{a[deg - s]} * y[s] % p;
                }
                Y.at(i, j)[m] = static_cast<uint32_t>(acc % p * dinv % p);
            }
    }
    const auto rep = verify_solution(Y, E, N);
    if (!rep.pass) {
        const auto& f = rep.failures.front();
        throw Inconsistent("equation for theta^(" + std::to_string(f.first) +
                           ") fails at t^" + std::to_string(f.second));
    }
    return Y;
}

SolutionReport verify_solution(const SeriesMatrix& Y, const idmod::IterableEquation& E,
                               std::size_t N) {
    if (Y.N < N) throw InputError("solution is truncated below the requested order");
    const SeriesMatrix Yn = Y.truncated(N);
    SolutionReport rep;
    rep.N = N;
    for (auto [q, l] : p_power_orders(E.p, N)) {
        const SeriesMatrix lhs = Yn.theta(q);
        const SeriesMatrix rhs = coefficient(E, l, N) * Yn;
        std::optional<std::size_t> bad;
        for (std::size_t d = 0; d + q <= N && !bad; ++d)
            for (std::size_t e = 0; e < lhs.e.size(); ++e)
                if (lhs.e[e][d] != rhs.e[e][d]) {
                    bad = d;
                    break;
                }
        if (bad) {
            rep.pass = false;
            rep.failures.emplace_back(q, *bad);
        }
    }
    return rep;
}

std::vector<Series> constants(uint32_t p, const std::vector<Series>& basis, std::size_t N,
                              std::vector<uint64_t> orders) {
    if (orders.empty())
        for (uint64_t k = 1; k <= N; ++k) orders.push_back(k);
    const std::size_t dim = basis.size();
    if (dim == 0) return {};
    FpMatrix M(p, 0, dim);
    for (uint64_t k : orders)
        for (std::size_t j = 0; j + k <= N; ++j) {
            std::vector<uint32_t> row(dim, 0);
            bool any = false;
            for (std::size_t c = 0; c < dim; ++c) {
                const uint32_t v = j + k < basis[c].size() ? basis[c][j + k] : 0;
                if (v) {
                    row[c] = static_cast<uint32_t>(uint64_t{v} * binomial_mod_p(j + k, k, p) % p);
                    any = any || row[c];
                }
            }
            if (any) M.append_row(row);
        }
    std::vector<Series> out;
    for (const auto& v : M.kernel()) {
        Series s(N + 1, 0);
        for (std::size_t c = 0; c < dim; ++c)
            if (v[c]) kernels::axpy_mod(s.data(), basis[c].data(), std::min(basis[c].size(), N + 1), v[c], p);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace itconn::solver
