#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#ifdef _OPENMP
#include <omp.h>
#endif

#include "doctest.h"
#include "dsiht/decompose.hpp"
#include "dsiht/heap.hpp"
#include "dsiht/matio.hpp"
#include "test_util.hpp"

using namespace dsiht;
using testutil::Rng;

// The parallel loops split work by column only; every column runs the same
// arithmetic regardless of the thread count, so results must be bit-equal.

#ifdef _OPENMP

namespace {

template <class F>
auto with_threads(int n, F&& f) {
    const int before = omp_get_max_threads();
    omp_set_num_threads(n);
    auto r = f();
    omp_set_num_threads(before);
    return r;
}

}  // namespace

TEST_CASE("decompositions are bit-identical across thread counts") {
    Rng rng(2718);
    const CpxMatrix x = rng.cpx_matrix(48);
    const int many = std::max(2, omp_get_max_threads());

    for (BasicKind k : {BasicKind::T, BasicKind::M, BasicKind::G}) {
        const TypeSchedule s = TypeSchedule::uniform(k, 48);
        const DecompResult serial = with_threads(1, [&] { return qr_decompose(x, s); });
        const DecompResult parallel = with_threads(many, [&] { return qr_decompose(x, s); });
        CHECK(serial.q == parallel.q);
        CHECK(serial.factor == parallel.factor);
        CHECK(serial.residual_norm == parallel.residual_norm);
        CHECK(serial.unitarity_error == parallel.unitarity_error);
    }

    const TypeSchedule a = TypeSchedule::analytic(48);
    const DecompResult s1 = with_threads(1, [&] { return qr_decompose(x, a); });
    const DecompResult s2 = with_threads(many, [&] { return qr_decompose(x, a); });
    CHECK(s1.factor == s2.factor);

    const TypeSchedule g = TypeSchedule::uniform(BasicKind::G, 48);
    const DecompResult l1 = with_threads(1, [&] { return ql_decompose(x, g); });
    const DecompResult l2 = with_threads(many, [&] { return ql_decompose(x, g); });
    CHECK(l1.q == l2.q);
    CHECK(l1.factor == l2.factor);

    const DecompResult h1 = with_threads(1, [&] { return householder_qr(x); });
    const DecompResult h2 = with_threads(many, [&] { return householder_qr(x); });
    CHECK(h1.q == h2.q);
    CHECK(h1.factor == h2.factor);
}

TEST_CASE("transform matrices are bit-identical across thread counts") {
    Rng rng(165);
    const Generator gen(rng.cpx_vector(40));
    const int many = std::max(2, omp_get_max_threads());
    for (HeapPath p : {HeapPath::Natural, HeapPath::Strong}) {
        const CpxMatrix a = with_threads(1, [&] { return dsiht_matrix(gen, BasicKind::G, p); });
        const CpxMatrix b = with_threads(many, [&] { return dsiht_matrix(gen, BasicKind::G, p); });
        CHECK(a == b);
    }
}

#else

TEST_CASE("built without OpenMP") {
    MESSAGE("OpenMP disabled; thread-count equivalence not exercised");
    CHECK(true);
}

#endif
