#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "dsiht/basic.hpp"
#include "test_util.hpp"

using namespace dsiht;
using testutil::Rng;

namespace {

CpxMatrix as_matrix(const Basic2x2& b) {
    CpxMatrix m(2, 2);
    m(0, 0) = b.m00;
    m(0, 1) = b.m01;
    m(1, 0) = b.m10;
    m(1, 1) = b.m11;
    return m;
}

constexpr BasicKind kKinds[] = {BasicKind::T, BasicKind::M, BasicKind::G};

}  // namespace

TEST_CASE("complex_sign") {
    CHECK(std::abs(complex_sign({1, -3}) - CpxScalar{0.3162, -0.9487}) < 5e-5);
    const CpxScalar unit = CpxScalar{1, -3} / std::sqrt(10.0);
    CHECK(std::abs(complex_sign(unit) - unit) < 1e-15);
    CHECK(complex_sign({0, 0}) == CpxScalar{1, 0});
    CHECK(complex_sign({-5, 0}) == CpxScalar{-1, 0});
    CHECK(std::abs(std::abs(complex_sign({3, -4})) - 1.0) < 1e-15);
}

TEST_CASE("make_basic reproduces the reference 2-point kernels") {
    const CpxScalar x0{1, 3}, x1{-2, 5};
    const double r = std::sqrt(39.0), s10 = std::sqrt(10.0);

    const Basic2x2 t = make_basic(BasicKind::T, x0, x1);
    CHECK(std::abs(t.m00 - CpxScalar{1, -3} / r) < 1e-14);
    CHECK(std::abs(t.m01 - CpxScalar{-2, -5} / r) < 1e-14);
    CHECK(std::abs(t.m10 - CpxScalar{2, -5} / r) < 1e-14);
    CHECK(std::abs(t.m11 - CpxScalar{1, 3} / r) < 1e-14);

    const Basic2x2 g = make_basic(BasicKind::G, x0, x1);
    CHECK(std::abs(g.m00 - s10 / r) < 1e-14);
    CHECK(std::abs(g.m01 - CpxScalar{13, -11} / (s10 * r)) < 1e-14);
    CHECK(std::abs(g.m10 - CpxScalar{-13, -11} / (s10 * r)) < 1e-14);
    CHECK(std::abs(g.m11 - s10 / r) < 1e-14);

    const Basic2x2 m = make_basic(BasicKind::M, {1, 0}, {0, 0});
    CHECK(std::abs(m.m00 - 1.0) < 1e-15);
    CHECK(std::abs(m.m01) < 1e-15);
    CHECK(std::abs(m.m10) < 1e-15);
    CHECK(std::abs(m.m11 - 1.0) < 1e-15);

    CHECK_THROWS_AS(make_basic(BasicKind::T, {0, 0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("degenerate kernels with a vanishing first component") {
    const CpxScalar x1{3, -4};
    for (BasicKind k : {BasicKind::M, BasicKind::G}) {
        const Basic2x2 b = make_basic(k, {0, 0}, x1);
        CHECK(std::abs(b.m00) == 0.0);
        CHECK(std::abs(b.m01 - std::conj(x1) / 5.0) < 1e-15);
        CHECK(std::abs(b.m10 + x1 / 5.0) < 1e-15);
        CHECK(std::abs(b.m11) == 0.0);
    }
}

TEST_CASE("apply_basic matches the reference transforms") {
    const CpxScalar x0{1, 3}, x1{-2, 5};
    const CpxScalar z0{-7, 2}, z1{3, -5};

    auto [t0, t1] = apply_basic(BasicKind::T, x0, x1, z0, z1);
    CHECK(std::abs(t0 - CpxScalar{-5.1241, 2.8823}) < 5e-4);
    CHECK(std::abs(t1 - CpxScalar{2.2418, 6.8855}) < 5e-4);

    auto [g0, g1] = apply_basic(BasicKind::G, x0, x1, z0, z1);
    CHECK(std::abs(g0 - CpxScalar{-4.3548, -3.9497}) < 5e-4);
    CHECK(std::abs(g1 - CpxScalar{7.2411, 0.0506}) < 5e-4);

    auto [m0, m1] = apply_basic(BasicKind::M, x0, x1, x0, x1);
    CHECK(std::abs(m0 - 6.2450) < 5e-4);
    CHECK(std::abs(m1) < 1e-13);
}

TEST_CASE("heap_value closed forms") {
    const CpxScalar x0{1, 3}, x1{-2, 5};
    CHECK(std::abs(heap_value(BasicKind::G, x0, x1) - CpxScalar{1.9748, 5.9245}) < 5e-4);
    CHECK(std::abs(heap_value(BasicKind::T, x0, x1) - 6.2450) < 5e-4);
    CHECK(heap_value(BasicKind::T, {-1, 0}, {0, 0}) == CpxScalar{-1, 0});
    CHECK(heap_value(BasicKind::M, {-1, 0}, {0, 0}) == CpxScalar{1, 0});
}

TEST_CASE("real_givens_angle branches") {
    CHECK(real_givens_angle(1, 1).phi == doctest::Approx(-0.7854).epsilon(1e-3));
    CHECK(real_givens_angle(0, 1).phi == doctest::Approx(M_PI / 2));
    CHECK(real_givens_angle(std::sqrt(2.0), 2).phi == doctest::Approx(-0.9553).epsilon(1e-3));
    CHECK_THROWS_AS(real_givens_angle(0, 0), std::invalid_argument);

    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.symmetric(), y = rng.symmetric();
        if (x == 0 && y == 0) continue;
        const double phi = real_givens_angle(x, y).phi;
        CHECK(phi > -M_PI);
        CHECK(phi <= M_PI + 1e-15);
        const double c = std::cos(phi), s = std::sin(phi);
        CHECK(std::abs(c * c + s * s - 1.0) <= 1e-15);
        const double r = std::hypot(x, y);
        CHECK(std::abs(s * x + c * y) <= 1e-13 * r);  // zeroed component
        CHECK(std::abs(std::abs(c * x - s * y) - r) <= 1e-13 * r);
    }
}

TEST_CASE("kernel unitarity, determinant, energy, zeroing over random generators") {
    Rng rng(1234);
    for (int trial = 0; trial < 1000; ++trial) {
        const CpxScalar x0 = rng.nonzero_cpx(), x1 = rng.nonzero_cpx();
        const double r = std::sqrt(std::norm(x0) + std::norm(x1));
        for (BasicKind k : kKinds) {
            const Basic2x2 b = make_basic(k, x0, x1);

            // B* B = I
            const CpxScalar c00 = std::conj(b.m00) * b.m00 + std::conj(b.m10) * b.m10;
            const CpxScalar c01 = std::conj(b.m00) * b.m01 + std::conj(b.m10) * b.m11;
            const CpxScalar c11 = std::conj(b.m01) * b.m01 + std::conj(b.m11) * b.m11;
            CHECK(std::abs(c00 - 1.0) <= 1e-14);
            CHECK(std::abs(c01) <= 1e-14);
            CHECK(std::abs(c11 - 1.0) <= 1e-14);

            const CpxScalar det = b.m00 * b.m11 - b.m01 * b.m10;
            if (k == BasicKind::M)
                CHECK(std::abs(det - std::conj(x0) / std::abs(x0)) <= 1e-14);
            else
                CHECK(std::abs(det - 1.0) <= 1e-14);

            const CpxScalar z0 = rng.cpx(), z1 = rng.cpx();
            auto [w0, w1] = apply_basic(k, x0, x1, z0, z1);
            const double ein = std::norm(z0) + std::norm(z1);
            const double eout = std::norm(w0) + std::norm(w1);
            CHECK(std::abs(eout - ein) <= 1e-13 * ein);

            auto [h, tail] = apply_basic(k, x0, x1, x0, x1);
            CHECK(std::abs(tail) <= 1e-13 * r);
            CHECK(std::abs(std::abs(h) - r) <= 1e-13 * r);
            CHECK(std::abs(heap_value(k, x0, x1) - h) <= 1e-13 * r);

            // apply_basic agrees with the materialized kernel
            auto ref0 = b.m00 * z0 + b.m01 * z1;
            auto ref1 = b.m10 * z0 + b.m11 * z1;
            CHECK(std::abs(w0 - ref0) <= 1e-14 * (1.0 + std::abs(ref0)));
            CHECK(std::abs(w1 - ref1) <= 1e-14 * (1.0 + std::abs(ref1)));
        }
    }
}

TEST_CASE("G factors through T and M") {
    Rng rng(777);
    for (int trial = 0; trial < 1000; ++trial) {
        CpxScalar x0 = rng.nonzero_cpx();
        if (std::abs(x0.real()) < 0.05) x0 += CpxScalar{0.1, 0};  // keep Re x0 away from 0
        const CpxScalar x1 = rng.nonzero_cpx();

        const CpxMatrix t = as_matrix(make_basic(BasicKind::T, x0, x1));
        const CpxMatrix m = as_matrix(make_basic(BasicKind::M, x0, x1));
        const CpxMatrix g = as_matrix(make_basic(BasicKind::G, x0, x1));
        const CpxScalar ph = x0 / std::abs(x0);
        const double sr = real_part_sign(x0);

        CpxMatrix g_from_t(2, 2), g_from_m(2, 2);
        g_from_t(0, 0) = sr * ph * t(0, 0);
        g_from_t(0, 1) = sr * ph * t(0, 1);
        g_from_t(1, 0) = sr * std::conj(ph) * t(1, 0);
        g_from_t(1, 1) = sr * std::conj(ph) * t(1, 1);
        g_from_m(0, 0) = ph * m(0, 0);
        g_from_m(0, 1) = ph * m(0, 1);
        g_from_m(1, 0) = m(1, 0);
        g_from_m(1, 1) = m(1, 1);

        CHECK(testutil::max_diff(g, g_from_t) <= 1e-13);
        CHECK(testutil::max_diff(g, g_from_m) <= 1e-13);
    }
}
