#include "dsiht/decompose.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "dsiht/matio.hpp"

namespace dsiht {

TypeSchedule TypeSchedule::uniform(BasicKind kind, std::size_t dim) {
    TypeSchedule s;
    s.stages.assign(dim > 0 ? dim - 1 : 0, kind);
    return s;
}

TypeSchedule TypeSchedule::analytic(std::size_t dim) {
    TypeSchedule s = uniform(BasicKind::M, dim);
    s.engine = Engine::Analytic;
    return s;
}

TypeSchedule TypeSchedule::parse(std::string_view csv) {
    TypeSchedule s;
    std::string token;
    auto flush = [&] {
        if (token.empty()) throw std::invalid_argument("empty schedule entry");
        if (token.size() != 1) throw std::invalid_argument("bad schedule entry '" + token + "'");
        switch (std::tolower(static_cast<unsigned char>(token[0]))) {
            case 't': s.stages.push_back(BasicKind::T); break;
            case 'm': s.stages.push_back(BasicKind::M); break;
            case 'g': s.stages.push_back(BasicKind::G); break;
            default: throw std::invalid_argument("bad schedule entry '" + token + "'");
        }
        token.clear();
    };
    for (char c : csv) {
        if (c == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            token += c;
        }
    }
    flush();
    return s;
}

void TypeSchedule::validate(std::size_t dim) const {
    if (dim == 0) throw std::invalid_argument("empty matrix");
    if (stages.size() != dim - 1)
        throw std::invalid_argument("schedule length must be N-1 (" +
                                    std::to_string(dim - 1) + " for N=" + std::to_string(dim) +
                                    ", got " + std::to_string(stages.size()) + ")");
    if (engine == Engine::Analytic)
        for (BasicKind k : stages)
            if (k != BasicKind::M)
                throw std::invalid_argument("analytic engine requires a uniform M schedule");
}

RankDeficientError::RankDeficientError(std::size_t col)
    : std::runtime_error("rank-deficient column " + std::to_string(col)), column(col) {}

namespace {

double subcolumn_norm(const CpxScalar* first, std::size_t len, std::ptrdiff_t stride) {
    double s = 0.0;
    for (std::size_t i = 0; i < len; ++i)
        s += std::norm(first[static_cast<std::ptrdiff_t>(i) * stride]);
    return std::sqrt(s);
}

void matvec(const CpxMatrix& m, const std::vector<CpxScalar>& v, std::vector<CpxScalar>& out) {
    const std::size_t rows = m.rows(), cols = m.cols();
    out.assign(rows, CpxScalar{});
#pragma omp parallel for schedule(static) if (rows > 64)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rows); ++i) {
        const CpxScalar* row = m.data() + static_cast<std::size_t>(i) * cols;
        CpxScalar s{};
        for (std::size_t j = 0; j < cols; ++j) s += row[j] * v[j];
        out[static_cast<std::size_t>(i)] = s;
    }
}

void matvec_adjoint(const CpxMatrix& m, const std::vector<CpxScalar>& v,
                    std::vector<CpxScalar>& out) {
    const std::size_t rows = m.rows(), cols = m.cols();
    out.assign(cols, CpxScalar{});
#pragma omp parallel for schedule(static) if (cols > 64)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(cols); ++j) {
        CpxScalar s{};
        for (std::size_t i = 0; i < rows; ++i)
            s += std::conj(m(i, static_cast<std::size_t>(j))) * v[i];
        out[static_cast<std::size_t>(j)] = s;
    }
}

double vec_norm(const std::vector<CpxScalar>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

DecompResult finish(const CpxMatrix& x, CpxMatrix u, CpxMatrix factor, FactorShape shape,
                    TypeSchedule schedule, HeapPath path) {
    DecompResult res{conj_transpose(u), std::move(factor), shape, std::move(schedule), path,
                     0.0, 0.0};
    res.residual_norm = residual_norm(x, res.q, res.factor);
    res.unitarity_error = unitarity_error(res.q);
    return res;
}

}  // namespace

DecompResult qr_decompose(const CpxMatrix& x, const TypeSchedule& schedule,
                          const DecompOptions& opts) {
    if (!x.square()) throw std::invalid_argument("qr_decompose requires a square matrix");
    const std::size_t n = x.rows();
    schedule.validate(n);

    CpxMatrix a = x;
    CpxMatrix u = CpxMatrix::identity(n);
    const auto stride = static_cast<std::ptrdiff_t>(n);
    std::vector<CpxScalar> gen;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const std::size_t len = n - j;
        gen.assign(len, CpxScalar{});
        for (std::size_t i = 0; i < len; ++i) gen[i] = a(j + i, j);
        if (!(subcolumn_norm(gen.data(), len, 1) > 0.0)) {
            if (opts.allow_rank_deficient) continue;
            throw RankDeficientError(j);
        }
        if (schedule.engine == Engine::Analytic) {
#pragma omp parallel for schedule(static) if (n - j > 8)
            for (std::ptrdiff_t c = static_cast<std::ptrdiff_t>(j);
                 c < static_cast<std::ptrdiff_t>(n); ++c)
                apply_analytic(gen, a.at(j, static_cast<std::size_t>(c)), stride);
#pragma omp parallel for schedule(static) if (n > 8)
            for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(n); ++c)
                apply_analytic(gen, u.at(j, static_cast<std::size_t>(c)), stride);
        } else {
            const CascadePlan plan = make_cascade_plan(gen, schedule.stages[j], HeapPath::Natural);
#pragma omp parallel for schedule(static) if (n - j > 8)
            for (std::ptrdiff_t c = static_cast<std::ptrdiff_t>(j);
                 c < static_cast<std::ptrdiff_t>(n); ++c)
                apply_cascade_plan(plan, a.at(j, static_cast<std::size_t>(c)), stride);
#pragma omp parallel for schedule(static) if (n > 8)
            for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(n); ++c)
                apply_cascade_plan(plan, u.at(j, static_cast<std::size_t>(c)), stride);
        }
    }
    return finish(x, std::move(u), std::move(a), FactorShape::QR, schedule, HeapPath::Natural);
}

DecompResult ql_decompose(const CpxMatrix& x, const TypeSchedule& schedule,
                          const DecompOptions& opts) {
    if (!x.square()) throw std::invalid_argument("ql_decompose requires a square matrix");
    const std::size_t n = x.rows();
    schedule.validate(n);

    CpxMatrix a = x;
    CpxMatrix u = CpxMatrix::identity(n);
    // Tail-anchored cascade: within column j the heap lands at row j, so the
    // stage sees the leading subcolumn in reverse row order.
    const auto stride = -static_cast<std::ptrdiff_t>(n);
    std::vector<CpxScalar> gen;
    std::size_t t = 0;
    for (std::size_t j = n - 1; j >= 1; --j, ++t) {
        const std::size_t len = j + 1;
        gen.assign(len, CpxScalar{});
        for (std::size_t i = 0; i < len; ++i) gen[i] = a(j - i, j);
        if (!(subcolumn_norm(gen.data(), len, 1) > 0.0)) {
            if (opts.allow_rank_deficient) continue;
            throw RankDeficientError(j);
        }
        if (schedule.engine == Engine::Analytic) {
#pragma omp parallel for schedule(static) if (j > 8)
            for (std::ptrdiff_t c = 0; c <= static_cast<std::ptrdiff_t>(j); ++c)
                apply_analytic(gen, a.at(j, static_cast<std::size_t>(c)), stride);
#pragma omp parallel for schedule(static) if (n > 8)
            for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(n); ++c)
                apply_analytic(gen, u.at(j, static_cast<std::size_t>(c)), stride);
        } else {
            const CascadePlan plan = make_cascade_plan(gen, schedule.stages[t], HeapPath::Natural);
#pragma omp parallel for schedule(static) if (j > 8)
            for (std::ptrdiff_t c = 0; c <= static_cast<std::ptrdiff_t>(j); ++c)
                apply_cascade_plan(plan, a.at(j, static_cast<std::size_t>(c)), stride);
#pragma omp parallel for schedule(static) if (n > 8)
            for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(n); ++c)
                apply_cascade_plan(plan, u.at(j, static_cast<std::size_t>(c)), stride);
        }
    }
    return finish(x, std::move(u), std::move(a), FactorShape::QL, schedule, HeapPath::Strong);
}

DecompResult householder_qr(const CpxMatrix& x) {
    if (!x.square()) throw std::invalid_argument("householder_qr requires a square matrix");
    const std::size_t n = x.rows();

    CpxMatrix a = x;
    CpxMatrix u = CpxMatrix::identity(n);
    std::vector<CpxScalar> w;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const std::size_t len = n - j;
        w.assign(len, CpxScalar{});
        for (std::size_t i = 0; i < len; ++i) w[i] = a(j + i, j);
        const double nx = vec_norm(w);
        if (nx == 0.0) continue;
        w[0] += complex_sign(w[0]) * nx;
        const double nw = vec_norm(w);
        for (auto& wi : w) wi /= nw;

        auto reflect = [&](CpxMatrix& m, std::size_t c) {
            CpxScalar t{};
            for (std::size_t i = 0; i < len; ++i) t += std::conj(w[i]) * m(j + i, c);
            t *= 2.0;
            for (std::size_t i = 0; i < len; ++i) m(j + i, c) -= t * w[i];
        };
#pragma omp parallel for schedule(static) if (n - j > 8)
        for (std::ptrdiff_t c = static_cast<std::ptrdiff_t>(j);
             c < static_cast<std::ptrdiff_t>(n); ++c)
            reflect(a, static_cast<std::size_t>(c));
#pragma omp parallel for schedule(static) if (n > 8)
        for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(n); ++c)
            reflect(u, static_cast<std::size_t>(c));
    }
    return finish(x, std::move(u), std::move(a), FactorShape::QR,
                  TypeSchedule::uniform(BasicKind::M, n), HeapPath::Natural);
}

double spectral_norm(const CpxMatrix& m) {
    const std::size_t cols = m.cols();
    if (cols == 0 || m.rows() == 0) return 0.0;
    if (max_abs(m) == 0.0) return 0.0;

    // Deterministic start vector; entries in [-1, 1).
    SplitMix64 rng{0x5EEDBA5Eu};
    std::vector<CpxScalar> v(cols);
    for (auto& x : v) {
        const double re = 2.0 * ((rng.next() >> 11) * 0x1.0p-53) - 1.0;
        const double im = 2.0 * ((rng.next() >> 11) * 0x1.0p-53) - 1.0;
        x = {re, im};
    }
    double nv = vec_norm(v);
    for (auto& x : v) x /= nv;

    std::vector<CpxScalar> w, bv;
    double lambda = 0.0;
    for (int iter = 0; iter < 50; ++iter) {
        matvec(m, v, w);
        const double prev = lambda;
        lambda = 0.0;
        for (const auto& x : w) lambda += std::norm(x);  // Rayleigh quotient of M*M
        matvec_adjoint(m, w, bv);
        const double nb = vec_norm(bv);
        if (nb == 0.0) break;
        for (std::size_t i = 0; i < cols; ++i) v[i] = bv[i] / nb;
        if (iter > 0 && std::abs(lambda - prev) <= 1e-9 * lambda) break;
    }
    return std::sqrt(lambda);
}

double residual_norm(const CpxMatrix& x, const CpxMatrix& q, const CpxMatrix& f) {
    if (q.cols() != f.rows() || x.rows() != q.rows() || x.cols() != f.cols())
        throw std::invalid_argument("residual_norm dimension mismatch");
    return spectral_norm(subtract(x, multiply(q, f)));
}

double unitarity_error(const CpxMatrix& q) {
    if (!q.square()) throw std::invalid_argument("unitarity_error requires a square matrix");
    const std::size_t n = q.rows();
    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst) if (n > 16)
    for (std::ptrdiff_t j1 = 0; j1 < static_cast<std::ptrdiff_t>(n); ++j1) {
        for (std::size_t j2 = static_cast<std::size_t>(j1); j2 < n; ++j2) {
            CpxScalar dot{};
            for (std::size_t i = 0; i < n; ++i)
                dot += std::conj(q(i, static_cast<std::size_t>(j1))) * q(i, j2);
            if (static_cast<std::size_t>(j1) == j2) dot -= 1.0;
            worst = std::max(worst, std::abs(dot));
        }
    }
    return worst;
}

}  // namespace dsiht
