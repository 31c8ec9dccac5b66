#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace itconn {

// Dense matrix over the prime field F_p. Row operations go through the
// vectorised axpy kernel.
class FpMatrix {
public:
    FpMatrix(uint32_t p, std::size_t rows, std::size_t cols)
        : p_(p), r_(rows), c_(cols), a_(rows * cols, 0) {}

    uint32_t prime() const { return p_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    uint32_t* row(std::size_t i) { return a_.data() + i * c_; }
    const uint32_t* row(std::size_t i) const { return a_.data() + i * c_; }

    void append_row(const std::vector<uint32_t>& v);
    FpMatrix operator*(const FpMatrix& o) const;
    bool operator==(const FpMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    std::vector<std::size_t> rref();
    std::size_t rank() const;
    std::vector<std::vector<uint32_t>> kernel() const;
    std::optional<std::vector<uint32_t>> solve(const std::vector<uint32_t>& b) const;

private:
    uint32_t p_;
    std::size_t r_, c_;
    std::vector<uint32_t> a_;
};

}  // namespace itconn
