#include "itconn/fpmatrix.hpp"

#include <algorithm>

#include "itconn/errors.hpp"
#include "itconn/fp.hpp"
#include "itconn/kernels.hpp"

namespace itconn {

void FpMatrix::append_row(const std::vector<uint32_t>& v) {
    if (v.size() != c_) throw InputError("row length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++r_;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (c_ != o.r_) throw InputError("matrix shape mismatch in product");
    FpMatrix z(p_, r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k)
            if ((*this)(i, k)) kernels::axpy_mod(z.row(i), o.row(k), o.c_, (*this)(i, k), p_);
    return z;
}

std::vector<std::size_t> FpMatrix::rref() {
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
        std::size_t k = row;
        while (k < r_ && (*this)(k, col) == 0) ++k;
        if (k == r_) continue;
        if (k != row) std::swap_ranges(this->row(k), this->row(k) + c_, this->row(row));
        const uint32_t inv = inv_mod((*this)(row, col), p_);
        for (std::size_t j = 0; j < c_; ++j)
            (*this)(row, j) = static_cast<uint32_t>(uint64_t{(*this)(row, j)} * inv % p_);
        for (std::size_t i = 0; i < r_; ++i) {
            const uint32_t f = (*this)(i, col);
            if (i == row || f == 0) continue;
            kernels::axpy_mod(this->row(i), this->row(row), c_, p_ - f, p_);
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

std::size_t FpMatrix::rank() const {
    FpMatrix m = *this;
    return m.rref().size();
}

std::vector<std::vector<uint32_t>> FpMatrix::kernel() const {
    FpMatrix m = *this;
    const auto piv = m.rref();
    std::vector<bool> is_piv(c_, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<uint32_t>> out;
    for (std::size_t f = 0; f < c_; ++f) {
        if (is_piv[f]) continue;
        std::vector<uint32_t> v(c_, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = m(r, f) ? p_ - m(r, f) : 0;
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<uint32_t>> FpMatrix::solve(const std::vector<uint32_t>& b) const {
    FpMatrix aug(p_, r_, c_ + 1);
    for (std::size_t i = 0; i < r_; ++i) {
        std::copy(row(i), row(i) + c_, aug.row(i));
        aug(i, c_) = b.at(i) % p_;
    }
    const auto piv = aug.rref();
    if (!piv.empty() && piv.back() == c_) return std::nullopt;
    std::vector<uint32_t> x(c_, 0);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, c_);
    return x;
}

}  // namespace itconn
