#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dsiht {

using CpxScalar = std::complex<double>;

/// Dense row-major complex matrix.
class CpxMatrix {
public:
    CpxMatrix() = default;
    CpxMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    CpxMatrix(std::size_t rows, std::size_t cols, std::vector<CpxScalar> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("matrix data size mismatch");
    }

    static CpxMatrix identity(std::size_t n) {
        CpxMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    CpxScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CpxScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    CpxScalar* data() { return data_.data(); }
    const CpxScalar* data() const { return data_.data(); }

    /// Pointer to entry (r, c); columns are strided by cols().
    CpxScalar* at(std::size_t r, std::size_t c) { return data_.data() + r * cols_ + c; }

    bool operator==(const CpxMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CpxScalar> data_;
};

CpxMatrix conj_transpose(const CpxMatrix& a);
CpxMatrix multiply(const CpxMatrix& a, const CpxMatrix& b);
CpxMatrix subtract(const CpxMatrix& a, const CpxMatrix& b);

/// Largest entry modulus.
double max_abs(const CpxMatrix& a);

}  // namespace dsiht
