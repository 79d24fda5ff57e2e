#include "dsiht/basic.hpp"

#include <cmath>

namespace dsiht {

char kind_letter(BasicKind k) {
    switch (k) {
        case BasicKind::T: return 'T';
        case BasicKind::M: return 'M';
        case BasicKind::G: return 'G';
    }
    return '?';
}

CpxScalar complex_sign(CpxScalar x) {
    const double a = std::abs(x);
    return a > 0.0 ? x / a : CpxScalar(1.0, 0.0);
}

double real_part_sign(CpxScalar x) { return x.real() >= 0.0 ? 1.0 : -1.0; }

namespace {

double pair_norm(CpxScalar x0, CpxScalar x1) {
    const double r2 = std::norm(x0) + std::norm(x1);
    if (r2 <= 0.0) throw std::invalid_argument("zero generator pair");
    return std::sqrt(r2);
}

}  // namespace

Basic2x2 make_basic(BasicKind kind, CpxScalar x0, CpxScalar x1) {
    const double r = pair_norm(x0, x1);
    Basic2x2 b{kind, {}, {}, {}, {}};
    switch (kind) {
        case BasicKind::T: {
            const double s = real_part_sign(x0) / r;
            b.m00 = s * std::conj(x0);
            b.m01 = s * std::conj(x1);
            b.m10 = -s * x1;
            b.m11 = s * x0;
            break;
        }
        case BasicKind::M: {
            const double a0 = std::abs(x0);
            const CpxScalar phc = a0 > 0.0 ? std::conj(x0) / a0 : CpxScalar(1.0);
            b.m00 = std::conj(x0) / r;
            b.m01 = std::conj(x1) / r;
            b.m10 = -x1 * phc / r;
            b.m11 = a0 / r;
            break;
        }
        case BasicKind::G: {
            const double a0 = std::abs(x0);
            const CpxScalar ph = a0 > 0.0 ? x0 / a0 : CpxScalar(1.0);
            b.m00 = a0 / r;
            b.m01 = ph * std::conj(x1) / r;
            b.m10 = -x1 * std::conj(ph) / r;
            b.m11 = a0 / r;
            break;
        }
    }
    return b;
}

std::pair<CpxScalar, CpxScalar> apply_basic(BasicKind kind, CpxScalar x0, CpxScalar x1,
                                            CpxScalar z0, CpxScalar z1) {
    const double r = pair_norm(x0, x1);
    switch (kind) {
        case BasicKind::T: {
            const double s = real_part_sign(x0);
            return {s * (std::conj(x0) * z0 + std::conj(x1) * z1) / r,
                    s * (x0 * z1 - x1 * z0) / r};
        }
        case BasicKind::M: {
            const double a0 = std::abs(x0);
            const CpxScalar phc = a0 > 0.0 ? std::conj(x0) / a0 : CpxScalar(1.0);
            return {(std::conj(x0) * z0 + std::conj(x1) * z1) / r,
                    (a0 * z1 - x1 * phc * z0) / r};
        }
        case BasicKind::G: {
            const double a0 = std::abs(x0);
            const CpxScalar ph = a0 > 0.0 ? x0 / a0 : CpxScalar(1.0);
            return {(a0 * z0 + ph * std::conj(x1) * z1) / r,
                    (a0 * z1 - x1 * std::conj(ph) * z0) / r};
        }
    }
    throw std::logic_error("unreachable");
}

CpxScalar heap_value(BasicKind kind, CpxScalar x0, CpxScalar x1) {
    const double r = pair_norm(x0, x1);
    switch (kind) {
        case BasicKind::T: return real_part_sign(x0) * r;
        case BasicKind::M: return r;
        case BasicKind::G: return complex_sign(x0) * r;
    }
    throw std::logic_error("unreachable");
}

GivensAngle real_givens_angle(double x, double y) {
    if (x == 0.0 && y == 0.0) throw std::invalid_argument("zero generator pair");
    if (x == 0.0) return {M_PI / 2};
    double phi = std::atan(-y / x);
    if (x < 0.0) phi += M_PI;
    if (phi > M_PI) phi -= 2 * M_PI;
    return {phi};
}

}  // namespace dsiht
