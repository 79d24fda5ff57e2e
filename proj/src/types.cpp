#include "dsiht/types.hpp"

#include <algorithm>
#include <cmath>

namespace dsiht {

CpxMatrix conj_transpose(const CpxMatrix& a) {
    CpxMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

CpxMatrix multiply(const CpxMatrix& a, const CpxMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    CpxMatrix c(n, m);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        CpxScalar* ci = c.at(i, 0);
        for (std::size_t l = 0; l < k; ++l) {
            const CpxScalar ail = a(i, l);
            const CpxScalar* bl = b.data() + l * m;
            for (std::size_t j = 0; j < m; ++j) ci[j] += ail * bl[j];
        }
    }
    return c;
}

CpxMatrix subtract(const CpxMatrix& a, const CpxMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference dimension mismatch");
    CpxMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) c.data()[i] = a.data()[i] - b.data()[i];
    return c;
}

double max_abs(const CpxMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) m = std::max(m, std::abs(a.data()[i]));
    return m;
}

}  // namespace dsiht
