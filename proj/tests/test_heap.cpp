#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "dsiht/heap.hpp"
#include "dsiht/reference.hpp"
#include "test_util.hpp"

using namespace dsiht;
using testutil::max_diff;
using testutil::Rng;
using testutil::vec_norm;

namespace {

constexpr BasicKind kKinds[] = {BasicKind::T, BasicKind::M, BasicKind::G};
constexpr HeapPath kPaths[] = {HeapPath::Natural, HeapPath::Strong};

std::vector<CpxScalar> real_vec(std::initializer_list<double> v) {
    return std::vector<CpxScalar>(v.begin(), v.end());
}

Generator random_generator(Rng& rng, std::size_t n) {
    for (;;) {
        auto v = rng.cpx_vector(n);
        if (vec_norm(v) > 1e-3) return Generator(std::move(v));
    }
}

}  // namespace

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(Generator(std::vector<CpxScalar>{{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Generator(std::vector<CpxScalar>{{0, 0}, {0, 0}}), std::invalid_argument);
    const Generator g(real_vec({1, 1, 2, 4, 3, 1}));
    CHECK(g.norm() == doctest::Approx(std::sqrt(32.0)));
}

TEST_CASE("6-point real transforms match the reference vectors") {
    const Generator gen(real_vec({1, 1, 2, 4, 3, 1}));
    const auto z = real_vec({4, -2, 3, -1, 7, 2});

    const auto self = dsiht::dsiht(gen, gen.values(), BasicKind::T, HeapPath::Natural);
    CHECK(std::abs(self[0] - 5.6569) < 5e-4);
    for (std::size_t k = 1; k < 6; ++k) CHECK(std::abs(self[k]) < 1e-12 * gen.norm());

    const auto z1 = dsiht::dsiht(gen, z, BasicKind::T, HeapPath::Natural);
    const auto e1 = real_vec({4.7730, -4.2426, 0.5774, -3.3075, 5.4375, 1.1748});
    CHECK(max_diff(z1, e1) < 5e-4);

    const auto z2 = dsiht::dsiht(gen, z, BasicKind::T, HeapPath::Strong);
    const auto e2 = real_vec({4.7730, -3.2068, 2.7873, -1.4322, 6.3258, -0.3162});
    CHECK(max_diff(z2, e2) < 5e-4);

    CHECK_THROWS_AS(dsiht::dsiht(gen, real_vec({1, 2, 3}), BasicKind::T, HeapPath::Natural),
                    std::invalid_argument);
}

TEST_CASE("analytic engine") {
    const Generator gen(real_vec({1, 1, 2, 4, 3, 1}));
    const auto z = real_vec({4, -2, 3, -1, 7, 2});
    const auto out = dsiht_analytic(gen, z);
    CHECK(std::abs(out[0] - 27.0 / std::sqrt(32.0)) < 1e-12);

    const auto self = dsiht_analytic(gen, gen.values());
    CHECK(std::abs(self[0] - gen.norm()) < 1e-12);
    for (std::size_t k = 1; k < 6; ++k) CHECK(std::abs(self[k]) < 1e-12);

    // Componentwise equal to the M-kind cascade, checked against the explicit
    // 2x2 matrix-product route.
    Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng.index(2, 9);
        const Generator g = random_generator(rng, n);
        const auto sig = rng.cpx_vector(n);
        const auto a = dsiht_analytic(g, sig);
        const auto m = dsiht::dsiht(g, sig, BasicKind::M, HeapPath::Natural);
        const auto r = ref::transform(g.values(), sig, BasicKind::M, HeapPath::Natural);
        CHECK(max_diff(a, m) <= 1e-12);
        CHECK(max_diff(a, r) <= 1e-12);
    }
}

TEST_CASE("analytic engine with zero generator prefix") {
    const Generator gen({{0, 0}, {0, 0}, {0, 5}, {2, 1}});
    Rng rng(5);
    const auto sig = rng.cpx_vector(4);
    const auto a = dsiht_analytic(gen, sig);
    const auto m = dsiht::dsiht(gen, sig, BasicKind::M, HeapPath::Natural);
    CHECK(max_diff(a, m) <= 1e-13);
}

TEST_CASE("transform matrices of the 6-point example") {
    const Generator gen(real_vec({1, 1, 2, 4, 3, 1}));
    const CpxMatrix h1 = dsiht_matrix(gen, BasicKind::T, HeapPath::Natural);
    const double row0[] = {0.1768, 0.1768, 0.3536, 0.7071, 0.5303, 0.1768};
    for (std::size_t j = 0; j < 6; ++j) CHECK(std::abs(h1(0, j) - row0[j]) < 5e-4);

    const CpxMatrix h2 = dsiht_matrix(gen, BasicKind::T, HeapPath::Strong);
    const double row1[] = {-0.9843, 0.0318, 0.0635, 0.1270, 0.0953, 0.0318};
    for (std::size_t j = 0; j < 6; ++j) CHECK(std::abs(h2(1, j) - row1[j]) < 5e-4);

    // H e_m must equal the cascade applied to e_m, and H gen = (heap, 0...).
    std::vector<CpxScalar> hg(6, CpxScalar{});
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) hg[i] += h1(i, j) * gen.values()[j];
    CHECK(std::abs(hg[0] - gen.norm()) < 1e-12);
    for (std::size_t i = 1; i < 6; ++i) CHECK(std::abs(hg[i]) < 1e-12 * gen.norm());
}

TEST_CASE("4-point complex transform matrix rows") {
    const Generator gen({{7, 4}, {3, 7}, {-6, 2}, {1, 2}});
    const CpxMatrix m = dsiht_matrix(gen, BasicKind::M, HeapPath::Natural);
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(std::abs(m(0, j) - (0.5401 / 7.0) * std::conj(gen.values()[j])) < 5e-4);
    CHECK(std::abs(m(1, 0).real() - (-0.5480)) < 5e-4);
    CHECK(std::abs(m(1, 1) - 0.7269) < 5e-4);
}

TEST_CASE("cascade properties over random generators") {
    Rng rng(2024);
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t n = rng.index(2, 12);
        const Generator g = random_generator(rng, n);
        const auto sig = rng.cpx_vector(n);
        const double sn = vec_norm(sig);
        for (BasicKind k : kKinds)
            for (HeapPath p : kPaths) {
                const auto out = dsiht::dsiht(g, sig, k, p);
                CHECK(std::abs(vec_norm(out) - sn) <= 1e-12 * sn);  // energy

                const auto self = dsiht::dsiht(g, g.values(), k, p);
                CHECK(std::abs(std::abs(self[0]) - g.norm()) <= 1e-11 * g.norm());
                for (std::size_t i = 1; i < n; ++i)
                    CHECK(std::abs(self[i]) <= 1e-11 * g.norm());  // heap property

                // Same route through the explicit matrices.
                const auto r = ref::transform(g.values(), sig, k, p);
                CHECK(max_diff(out, r) <= 1e-12 * (1.0 + sn));
            }

        // First-component formula for the natural M cascade.
        const auto m = dsiht::dsiht(g, sig, BasicKind::M, HeapPath::Natural);
        CpxScalar corr{};
        for (std::size_t i = 0; i < n; ++i) corr += sig[i] * std::conj(g.values()[i]);
        CHECK(std::abs(m[0] - corr / g.norm()) <= 1e-12 * (1.0 + sn));
    }
}

TEST_CASE("matrix unitarity up to N = 64") {
    Rng rng(4242);
    for (std::size_t n : {2ul, 5ul, 16ul, 33ul, 64ul}) {
        const Generator g = random_generator(rng, n);
        for (BasicKind k : kKinds)
            for (HeapPath p : kPaths) {
                const CpxMatrix h = dsiht_matrix(g, k, p);
                const CpxMatrix hh = multiply(conj_transpose(h), h);
                const CpxMatrix eye = CpxMatrix::identity(n);
                CHECK(max_diff(hh, eye) <= 1e-12);
            }
    }
}

TEST_CASE("kind changes touch only the first two rows") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = rng.index(3, 8);
        auto v = rng.cpx_vector(n);
        v[0] = {std::abs(v[0].real()) + 0.1, v[0].imag()};
        const Generator g(v);

        const CpxMatrix t = dsiht_matrix(g, BasicKind::T, HeapPath::Natural);
        const CpxMatrix m = dsiht_matrix(g, BasicKind::M, HeapPath::Natural);
        const CpxMatrix gg = dsiht_matrix(g, BasicKind::G, HeapPath::Natural);

        auto rows_above = [&](const CpxMatrix& a, const CpxMatrix& b, std::size_t from) {
            double d = 0.0;
            for (std::size_t i = from; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    d = std::max(d, std::abs(a(i, j) - b(i, j)));
            return d;
        };
        CHECK(max_diff(t, m) > 1e-10);                 // they do differ
        CHECK(rows_above(t, m, 2) <= 1e-12);           // ...but only in row 1
        double row0 = 0.0;
        for (std::size_t j = 0; j < n; ++j) row0 = std::max(row0, std::abs(t(0, j) - m(0, j)));
        CHECK(row0 <= 1e-12);
        CHECK(rows_above(t, gg, 2) <= 1e-12);          // T vs G: rows 0,1
        CHECK(rows_above(m, gg, 1) <= 1e-12);          // M vs G: row 0

        // Row 0 of T and M is proportional to conj(gen) with a real factor.
        const CpxScalar f = t(0, 0) / std::conj(v[0]);
        CHECK(std::abs(f.imag()) <= 1e-12);
        CHECK(std::abs(std::abs(f) - 1.0 / g.norm()) <= 1e-12);
        for (std::size_t j = 0; j < n; ++j)
            CHECK(std::abs(t(0, j) - f * std::conj(v[j])) <= 1e-12);
    }
}

TEST_CASE("stages with zero components are skipped") {
    const Generator g({{1, 0}, {0, 0}, {2, 0}});
    const std::vector<CpxScalar> sig{{5, 0}, {7, 0}, {1, 0}};
    const auto out = dsiht::dsiht(g, sig, BasicKind::T, HeapPath::Natural);
    CHECK(out[1] == CpxScalar{7, 0});  // untouched

    // Strong path with a zero tail: the heap relocates silently.
    const Generator g2({{1, 0}, {2, 0}, {0, 0}, {0, 0}});
    const auto self = dsiht::dsiht(g2, g2.values(), BasicKind::G, HeapPath::Strong);
    CHECK(std::abs(std::abs(self[0]) - g2.norm()) < 1e-13);
    for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(self[i]) < 1e-13);

    // All-zero prefix in the natural path: the first kernel degenerates.
    const Generator g3({{0, 0}, {0, 0}, {3, 4}});
    const auto self3 = dsiht::dsiht(g3, g3.values(), BasicKind::M, HeapPath::Natural);
    CHECK(std::abs(std::abs(self3[0]) - 5.0) < 1e-13);
    CHECK(std::abs(self3[2]) < 1e-13);
}

TEST_CASE("angular representation") {
    const Generator gen(real_vec({1, 1, 2, 4, 3, 1}));
    const AngularRep nat = angular_representation(gen);
    const double en[] = {-0.7854, -0.9553, -1.0213, -0.5690, -0.1777};
    REQUIRE(nat.angles.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(nat.angles[i] - en[i]) < 5e-5);
    CHECK(std::abs(nat.heap - 5.6569) < 5e-5);

    const AngularRep str = angular_representation(gen, HeapPath::Strong);
    const double es[] = {-1.3931, -1.3902, -1.1970, -0.6690, -0.3218};
    for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(str.angles[i] - es[i]) < 5e-5);

    const AngularRep skip = angular_representation(Generator(real_vec({1, 0})));
    CHECK(skip.angles == std::vector<double>{0.0});

    CHECK_THROWS_AS(angular_representation(Generator({{1, 0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("angle list rebuilds the cascade matrix") {
    Rng rng(555);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = rng.index(2, 9);
        std::vector<CpxScalar> v(n);
        for (auto& x : v) x = {rng.symmetric(), 0.0};
        if (vec_norm(v) < 1e-3) continue;
        const Generator g(v);
        for (HeapPath p : kPaths) {
            const AngularRep rep = angular_representation(g, p);
            const CpxMatrix h = matrix_from_angles(rep.angles, p);
            // H gen = (heap, 0, ..., 0) and H is unitary.
            std::vector<CpxScalar> hg(n, CpxScalar{});
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) hg[i] += h(i, j) * v[j];
            CHECK(std::abs(hg[0] - rep.heap) <= 1e-12 * (1.0 + g.norm()));
            for (std::size_t i = 1; i < n; ++i) CHECK(std::abs(hg[i]) <= 1e-12 * g.norm());
            CHECK(max_diff(multiply(conj_transpose(h), h), CpxMatrix::identity(n)) <= 1e-12);
        }
    }
}
