#include "dsiht/reference.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

namespace dsiht::ref {

namespace {

double vnorm(std::span<const CpxScalar> v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

// Plain serial product, no pragmas.
CpxMatrix mul(const CpxMatrix& a, const CpxMatrix& b) {
    CpxMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const CpxScalar v = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += v * b(k, j);
        }
    return c;
}

CpxMatrix embed(const CpxMatrix& b2, std::size_t n, std::size_t lo, std::size_t hi) {
    CpxMatrix s = CpxMatrix::identity(n);
    s(lo, lo) = b2(0, 0);
    s(lo, hi) = b2(0, 1);
    s(hi, lo) = b2(1, 0);
    s(hi, hi) = b2(1, 1);
    return s;
}

}  // namespace

CpxMatrix basic_2x2(BasicKind kind, CpxScalar x0, CpxScalar x1) {
    const double r2 = std::norm(x0) + std::norm(x1);
    if (r2 <= 0.0) throw std::invalid_argument("zero generator pair");
    const double r = std::sqrt(r2);
    const double a0 = std::abs(x0);
    CpxMatrix b(2, 2);
    switch (kind) {
        case BasicKind::T: {
            const double s = x0.real() >= 0.0 ? 1.0 : -1.0;
            b(0, 0) = s * std::conj(x0) / r;
            b(0, 1) = s * std::conj(x1) / r;
            b(1, 0) = -s * x1 / r;
            b(1, 1) = s * x0 / r;
            break;
        }
        case BasicKind::M: {
            const CpxScalar phc = a0 > 0.0 ? std::conj(x0) / a0 : CpxScalar(1.0);
            b(0, 0) = std::conj(x0) / r;
            b(0, 1) = std::conj(x1) / r;
            b(1, 0) = -x1 * phc / r;
            b(1, 1) = a0 / r;
            break;
        }
        case BasicKind::G: {
            const CpxScalar ph = a0 > 0.0 ? x0 / a0 : CpxScalar(1.0);
            b(0, 0) = a0 / r;
            b(0, 1) = ph * std::conj(x1) / r;
            b(1, 0) = -x1 * std::conj(ph) / r;
            b(1, 1) = a0 / r;
            break;
        }
    }
    return b;
}

CpxMatrix transform_matrix(std::span<const CpxScalar> gen, BasicKind kind, HeapPath path) {
    const std::size_t n = gen.size();
    const double nrm = vnorm(gen);
    if (!(nrm > 0.0)) throw std::invalid_argument("zero generator");
    const double tiny = nrm * DBL_EPSILON;

    std::vector<CpxScalar> g(gen.begin(), gen.end());
    CpxMatrix h = CpxMatrix::identity(n);
    auto stage = [&](std::size_t lo, std::size_t hi) {
        const CpxMatrix s = embed(basic_2x2(kind, g[lo], g[hi]), n, lo, hi);
        h = mul(s, h);
        // Advance the generator through the same stage matrix.
        const CpxScalar a = g[lo], b = g[hi];
        g[lo] = s(lo, lo) * a + s(lo, hi) * b;
        g[hi] = s(hi, lo) * a + s(hi, hi) * b;
    };
    if (path == HeapPath::Natural) {
        for (std::size_t k = 1; k < n; ++k)
            if (std::abs(g[k]) > tiny) stage(0, k);
    } else {
        // The running heap sits at index i; the stage matrix moves it to i-1.
        for (std::size_t i = n - 1; i >= 1; --i)
            if (std::abs(g[i]) > tiny) stage(i - 1, i);
    }
    return h;
}

std::vector<CpxScalar> transform(std::span<const CpxScalar> gen,
                                 std::span<const CpxScalar> signal, BasicKind kind,
                                 HeapPath path) {
    const CpxMatrix h = transform_matrix(gen, kind, path);
    const std::size_t n = h.rows();
    std::vector<CpxScalar> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        CpxScalar s{};
        for (std::size_t j = 0; j < n; ++j) s += h(i, j) * signal[j];
        out[i] = s;
    }
    return out;
}

void qr(const CpxMatrix& x, const TypeSchedule& schedule, CpxMatrix& q, CpxMatrix& r) {
    const std::size_t n = x.rows();
    schedule.validate(n);
    CpxMatrix a = x;
    CpxMatrix u = CpxMatrix::identity(n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        std::vector<CpxScalar> gen(n - j);
        for (std::size_t i = 0; i < gen.size(); ++i) gen[i] = a(j + i, j);
        const CpxMatrix hj = transform_matrix(gen, schedule.stages[j], HeapPath::Natural);
        CpxMatrix s = CpxMatrix::identity(n);
        for (std::size_t p = 0; p < gen.size(); ++p)
            for (std::size_t c = 0; c < gen.size(); ++c) s(j + p, j + c) = hj(p, c);
        a = mul(s, a);
        u = mul(s, u);
    }
    q = conj_transpose(u);
    r = a;
}

void ql(const CpxMatrix& x, const TypeSchedule& schedule, CpxMatrix& q, CpxMatrix& l) {
    const std::size_t n = x.rows();
    schedule.validate(n);
    CpxMatrix a = x;
    CpxMatrix u = CpxMatrix::identity(n);
    std::size_t t = 0;
    for (std::size_t j = n - 1; j >= 1; --j, ++t) {
        std::vector<CpxScalar> gen(j + 1);
        for (std::size_t i = 0; i <= j; ++i) gen[i] = a(j - i, j);
        const CpxMatrix hj = transform_matrix(gen, schedule.stages[t], HeapPath::Natural);
        CpxMatrix s = CpxMatrix::identity(n);
        for (std::size_t p = 0; p <= j; ++p)
            for (std::size_t c = 0; c <= j; ++c) s(j - p, j - c) = hj(p, c);
        a = mul(s, a);
        u = mul(s, u);
    }
    q = conj_transpose(u);
    l = a;
}

std::vector<double> singular_values(const CpxMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    // One-sided Jacobi on columns: rotate pairs until all are orthogonal.
    std::vector<std::vector<CpxScalar>> a(cols, std::vector<CpxScalar>(rows));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) a[j][i] = m(i, j);

    const double eps = 1e-14;
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p)
            for (std::size_t q = p + 1; q < cols; ++q) {
                CpxScalar g{};
                double app = 0.0, aqq = 0.0;
                for (std::size_t i = 0; i < rows; ++i) {
                    g += std::conj(a[p][i]) * a[q][i];
                    app += std::norm(a[p][i]);
                    aqq += std::norm(a[q][i]);
                }
                const double ag = std::abs(g);
                if (ag <= eps * std::sqrt(app * aqq) || ag == 0.0) continue;
                rotated = true;
                // Phase-align column q so the pair inner product is real,
                // then rotate to orthogonality.
                const CpxScalar align = std::conj(g) / ag;
                const double tau = (aqq - app) / (2.0 * ag);
                const double tt = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + tt * tt);
                const double s = c * tt;
                for (std::size_t i = 0; i < rows; ++i) {
                    const CpxScalar vp = a[p][i];
                    const CpxScalar vq = align * a[q][i];
                    a[p][i] = c * vp - s * vq;
                    a[q][i] = s * vp + c * vq;
                }
            }
        if (!rotated) break;
    }
    std::vector<double> sv(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows; ++i) s += std::norm(a[j][i]);
        sv[j] = std::sqrt(s);
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

double spectral_norm(const CpxMatrix& m) {
    const auto sv = singular_values(m);
    return sv.empty() ? 0.0 : sv.front();
}

}  // namespace dsiht::ref
