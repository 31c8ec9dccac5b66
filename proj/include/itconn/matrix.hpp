#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itconn/errors.hpp"
#include "itconn/ring.hpp"

namespace itconn {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const T& fill) : r_(r), c_(c), a_(r * c, fill) {}

    static Matrix identity(std::size_t n, const T& like) {
        Matrix m(n, n, zero_like(like));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(like);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> out(r_, c_, f(a_.at(0)));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    Matrix transpose() const {
        Matrix t(c_, r_, a_.at(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix z = x;
        for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] += y.a_[k];
        return z;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix z = x;
        for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] -= y.a_[k];
        return z;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.c_ != y.r_) throw InputError("matrix shape mismatch in product");
        const T zero = zero_like(x.a_.at(0));
        Matrix z(x.r_, y.c_, zero);
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t k = 0; k < x.c_; ++k) {
                const T& xik = x(i, k);
                if (xik.is_zero()) continue;
                for (std::size_t j = 0; j < y.c_; ++j)
                    if (!y(k, j).is_zero()) z(i, j) += xik * y(k, j);
            }
        return z;
    }
    Matrix scaled(const T& s) const {
        Matrix z = *this;
        for (auto& v : z.a_) v = s * v;
        return z;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }

    // Kronecker product, row index (i1, i2) -> i1 * y.rows() + i2.
    friend Matrix kron(const Matrix& x, const Matrix& y) {
        Matrix z(x.r_ * y.r_, x.c_ * y.c_, zero_like(x.a_.at(0)));
        for (std::size_t i1 = 0; i1 < x.r_; ++i1)
            for (std::size_t j1 = 0; j1 < x.c_; ++j1)
                for (std::size_t i2 = 0; i2 < y.r_; ++i2)
                    for (std::size_t j2 = 0; j2 < y.c_; ++j2)
                        z(i1 * y.r_ + i2, j1 * y.c_ + j2) = x(i1, j1) * y(i2, j2);
        return z;
    }

private:
    static void check_same(const Matrix& x, const Matrix& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_) throw InputError("matrix shape mismatch");
    }
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

template <class T>
using Vec = std::vector<T>;

template <class T>
struct LinearSolution {
    std::optional<Vec<T>> particular;  // empty when the system is inconsistent
    std::vector<Vec<T>> kernel;        // basis of the solution space of A x = 0
};

// Row-reduces in place; returns pivot columns. Requires T to be a field
// element type (inverse() of a nonzero element succeeds).
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        const T inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const T f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
    return rref(m).size();
}

template <class T>
std::vector<Vec<T>> kernel_basis(const Matrix<T>& a) {
    Matrix<T> m = a;
    const auto piv = rref(m);
    const T zero = zero_like(a(0, 0));
    std::vector<bool> is_piv(a.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<Vec<T>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_piv[f]) continue;
        Vec<T> v(a.cols(), zero);
        v[f] = one_like(zero);
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
LinearSolution<T> solve_linear(const Matrix<T>& a, const Vec<T>& b) {
    if (b.size() != a.rows()) throw InputError("right-hand side length mismatch");
    const T zero = zero_like(a(0, 0));
    Matrix<T> aug(a.rows(), a.cols() + 1, zero);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto piv = rref(aug);
    LinearSolution<T> sol;
    sol.kernel = kernel_basis(a);
    if (!piv.empty() && piv.back() == a.cols()) return sol;
    Vec<T> x(a.cols(), zero);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
    sol.particular = std::move(x);
    return sol;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw InputError("inverse of a non-square matrix");
    Matrix<T> aug(n, 2 * n, zero_like(a(0, 0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = one_like(a(0, 0));
    }
    const auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw NotInvertible("singular matrix");
    Matrix<T> inv(n, n, a(0, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

template <class T>
Vec<T> mat_vec(const Matrix<T>& a, const Vec<T>& x) {
    Vec<T> y(a.rows(), zero_like(a(0, 0)));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
    return y;
}

}  // namespace itconn
