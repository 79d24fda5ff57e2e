#include "dsiht/heap.hpp"

#include <cfloat>
#include <cmath>

#include "dsiht/detail/knobs.hpp"

namespace dsiht {

namespace {

double vector_norm(std::span<const CpxScalar> v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

CpxScalar cascade_heap(BasicKind kind, CpxScalar a, CpxScalar b) {
    CpxScalar h = heap_value(kind, a, b);
    if (kind == BasicKind::M && detail::fault_knobs().m_pivot_sign_flip) h = -h;
    return h;
}

}  // namespace

Generator::Generator(std::vector<CpxScalar> values) : values_(std::move(values)) {
    if (values_.size() < 2) throw std::invalid_argument("generator needs at least 2 components");
    norm_ = vector_norm(values_);
    if (!(norm_ > 0.0)) throw std::invalid_argument("zero generator");
}

CascadePlan make_cascade_plan(std::span<const CpxScalar> gen, BasicKind kind, HeapPath path) {
    const std::size_t n = gen.size();
    const double nrm = vector_norm(gen);
    if (!(nrm > 0.0) || n == 0) throw std::invalid_argument("zero generator");
    const double tiny = nrm * DBL_EPSILON;

    CascadePlan plan{kind, path, n, {}, {}};
    plan.steps.reserve(n > 0 ? n - 1 : 0);
    if (path == HeapPath::Natural) {
        CpxScalar h = gen[0];
        for (std::size_t k = 1; k < n; ++k) {
            const CpxScalar xk = gen[k];
            if (std::abs(xk) <= tiny) continue;
            plan.steps.push_back({0, k, make_basic(kind, h, xk)});
            h = cascade_heap(kind, h, xk);
        }
        plan.heap = h;
    } else {
        // The heap migrates from the tail; a vanished heap just relocates.
        CpxScalar h = gen[n - 1];
        for (std::size_t i = n - 1; i >= 1; --i) {
            const CpxScalar xm = gen[i - 1];
            if (std::abs(h) <= tiny) {
                h = xm;
                continue;
            }
            plan.steps.push_back({i - 1, i, make_basic(kind, xm, h)});
            h = cascade_heap(kind, xm, h);
        }
        plan.heap = h;
    }
    return plan;
}

void apply_cascade_plan(const CascadePlan& plan, CpxScalar* first, std::ptrdiff_t stride) {
    for (const auto& s : plan.steps) {
        CpxScalar& lo = first[static_cast<std::ptrdiff_t>(s.lo) * stride];
        CpxScalar& hi = first[static_cast<std::ptrdiff_t>(s.hi) * stride];
        const CpxScalar a = lo, b = hi;
        lo = s.b.m00 * a + s.b.m01 * b;
        hi = s.b.m10 * a + s.b.m11 * b;
    }
}

std::vector<CpxScalar> dsiht(const Generator& gen, std::span<const CpxScalar> signal,
                             BasicKind kind, HeapPath path) {
    if (signal.size() != gen.size())
        throw std::invalid_argument("signal length differs from generator length");
    std::vector<CpxScalar> out(signal.begin(), signal.end());
    const CascadePlan plan = make_cascade_plan(gen.values(), kind, path);
    apply_cascade_plan(plan, out.data());
    return out;
}

void apply_analytic(std::span<const CpxScalar> gen, CpxScalar* first, std::ptrdiff_t stride) {
    const std::size_t n = gen.size();
    if (!(vector_norm(gen) > 0.0)) throw std::invalid_argument("zero generator");
    const bool post = detail::fault_knobs().analytic_postupdate_correlation;
    auto at = [&](std::size_t i) -> CpxScalar& {
        return first[static_cast<std::ptrdiff_t>(i) * stride];
    };

    double ex2 = std::norm(gen[0]);            // energy of the prefix
    CpxScalar exy = at(0) * std::conj(gen[0]);  // cross-correlation with the prefix
    for (std::size_t k = 1; k < n; ++k) {
        const CpxScalar xk = gen[k];
        const CpxScalar zk = at(k);
        const double ep = std::sqrt(ex2);
        if (ep == 0.0) {
            // All-zero prefix: the stage degenerates to a phased swap and the
            // correlation carries no information yet.
            const double axk = std::abs(xk);
            if (axk == 0.0) continue;
            at(k) = -xk * at(0) / axk;
            exy += zk * std::conj(xk);
            ex2 += std::norm(xk);
            continue;
        }
        if (post) {
            ex2 += std::norm(xk);
            exy += zk * std::conj(xk);
            at(k) = (ex2 * zk - exy * xk) / (ep * std::sqrt(ex2));
        } else {
            const CpxScalar num = ex2 * zk - exy * xk;
            ex2 += std::norm(xk);
            at(k) = num / (ep * std::sqrt(ex2));
            exy += zk * std::conj(xk);
        }
    }
    at(0) = exy / std::sqrt(ex2);
}

std::vector<CpxScalar> dsiht_analytic(const Generator& gen, std::span<const CpxScalar> signal) {
    if (signal.size() != gen.size())
        throw std::invalid_argument("signal length differs from generator length");
    std::vector<CpxScalar> out(signal.begin(), signal.end());
    apply_analytic(gen.values(), out.data());
    return out;
}

CpxMatrix dsiht_matrix(const Generator& gen, BasicKind kind, HeapPath path) {
    const std::size_t n = gen.size();
    const CascadePlan plan = make_cascade_plan(gen.values(), kind, path);
    CpxMatrix h(n, n);
    const auto stride = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (n > 8)
    for (std::ptrdiff_t m = 0; m < static_cast<std::ptrdiff_t>(n); ++m) {
        h(static_cast<std::size_t>(m), static_cast<std::size_t>(m)) = 1.0;
        apply_cascade_plan(plan, h.at(0, static_cast<std::size_t>(m)), stride);
    }
    return h;
}

AngularRep angular_representation(const Generator& gen, HeapPath path) {
    const auto g = gen.values();
    const std::size_t n = g.size();
    for (const auto& x : g)
        if (x.imag() != 0.0)
            throw std::invalid_argument("angular representation requires real generator");
    const double tiny = gen.norm() * DBL_EPSILON;

    AngularRep rep{0.0, std::vector<double>(n - 1, 0.0)};
    if (path == HeapPath::Natural) {
        double h = g[0].real();
        for (std::size_t k = 1; k < n; ++k) {
            const double xk = g[k].real();
            if (std::abs(xk) <= tiny) continue;
            const double phi = real_givens_angle(h, xk).phi;
            rep.angles[k - 1] = phi;
            h = std::cos(phi) * h - std::sin(phi) * xk;
        }
        rep.heap = h;
    } else {
        double h = g[n - 1].real();
        for (std::size_t i = n - 1; i >= 1; --i) {
            const double xm = g[i - 1].real();
            if (std::abs(h) <= tiny) {
                h = xm;
                continue;
            }
            const double phi = real_givens_angle(xm, h).phi;
            rep.angles[i - 1] = phi;
            h = std::cos(phi) * xm - std::sin(phi) * h;
        }
        rep.heap = h;
    }
    return rep;
}

CpxMatrix matrix_from_angles(const std::vector<double>& angles, HeapPath path) {
    const std::size_t n = angles.size() + 1;
    CpxMatrix h(n, n);
    for (std::size_t m = 0; m < n; ++m) {
        std::vector<double> v(n, 0.0);
        v[m] = 1.0;
        auto rotate = [&](std::size_t lo, std::size_t hi, double phi) {
            const double c = std::cos(phi), s = std::sin(phi);
            const double a = v[lo], b = v[hi];
            v[lo] = c * a - s * b;
            v[hi] = s * a + c * b;
        };
        if (path == HeapPath::Natural) {
            for (std::size_t k = 1; k < n; ++k) rotate(0, k, angles[k - 1]);
        } else {
            for (std::size_t i = n - 1; i >= 1; --i) rotate(i - 1, i, angles[i - 1]);
        }
        for (std::size_t r = 0; r < n; ++r) h(r, m) = v[r];
    }
    return h;
}

}  // namespace dsiht
