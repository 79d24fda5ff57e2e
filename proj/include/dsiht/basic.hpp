#pragma once

#include <utility>

#include "dsiht/types.hpp"

namespace dsiht {

/// The three families of 2x2 unitary kernels. T is fully complex, M carries
/// one real coefficient, G is the complex Givens rotation with real diagonal.
enum class BasicKind { T, M, G };

char kind_letter(BasicKind k);

struct Basic2x2 {
    BasicKind kind;
    CpxScalar m00, m01, m10, m11;
};

struct GivensAngle {
    double phi;  // radians in (-pi, pi]
};

/// x/|x| for nonzero x, 1 for x = 0.
CpxScalar complex_sign(CpxScalar x);

/// sign(Re x) with sign(0) = +1.
double real_part_sign(CpxScalar x);

/// Build the 2x2 kernel that maps the generator pair (x0, x1) to
/// (heap, 0). Throws std::invalid_argument when both components are zero.
Basic2x2 make_basic(BasicKind kind, CpxScalar x0, CpxScalar x1);

/// Product of make_basic(kind, x0, x1) with (z0, z1), computed inline.
std::pair<CpxScalar, CpxScalar> apply_basic(BasicKind kind, CpxScalar x0, CpxScalar x1,
                                            CpxScalar z0, CpxScalar z1);

/// First component of the kernel applied to its own generator, in closed
/// form: T -> sign(Re x0)*r, M -> r, G -> complex_sign(x0)*r.
CpxScalar heap_value(BasicKind kind, CpxScalar x0, CpxScalar x1);

/// Rotation angle used by the real angular representation. The rotation
/// [[cos, -sin], [sin, cos]] sends (x, y) to (+-sqrt(x^2+y^2), 0).
/// x = 0 gives pi/2; for x < 0 the angle is shifted by pi so the rotated
/// leading component comes out positive.
GivensAngle real_givens_angle(double x, double y);

}  // namespace dsiht
