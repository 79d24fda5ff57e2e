// Compares the strided OpenMP kernels against the serial explicit-matrix
// reference: agreement on small sizes, then wall-clock scaling.

#include <chrono>
#include <cstdio>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "dsiht/decompose.hpp"
#include "dsiht/matio.hpp"
#include "dsiht/reference.hpp"

using namespace dsiht;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

double max_entry_diff(const CpxMatrix& a, const CpxMatrix& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
    return d;
}

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int main() {
    std::printf("agreement: production kernels vs explicit-matrix reference\n");
    std::printf("%-6s %-6s %-14s %-14s\n", "n", "kind", "max|dQ|", "max|dR|");
    for (std::size_t n : {8ul, 16ul, 24ul}) {
        const CpxMatrix x = random_int_complex_matrix(n, 3);
        for (BasicKind k : {BasicKind::T, BasicKind::M, BasicKind::G}) {
            const TypeSchedule s = TypeSchedule::uniform(k, n);
            const DecompResult d = qr_decompose(x, s);
            CpxMatrix q, r;
            ref::qr(x, s, q, r);
            std::printf("%-6zu %-6c %-14.3e %-14.3e\n", n, kind_letter(k),
                        max_entry_diff(d.q, q), max_entry_diff(d.factor, r));
        }
    }

    std::printf("\ntimings (ms), uniform M schedule\n");
    std::printf("%-6s %-14s %-14s %-14s\n", "n", "reference", "1 thread", "all threads");
    const int threads = max_threads();
    for (std::size_t n : {32ul, 64ul, 128ul, 256ul}) {
        const CpxMatrix x = random_int_complex_matrix(n, 3);
        const TypeSchedule s = TypeSchedule::uniform(BasicKind::M, n);

        double t_ref = -1.0;
        if (n <= 64) {
            CpxMatrix q, r;
            const auto t0 = clock_type::now();
            ref::qr(x, s, q, r);
            t_ref = ms_since(t0);
        }

        set_threads(1);
        auto t0 = clock_type::now();
        const DecompResult serial = qr_decompose(x, s);
        const double t_one = ms_since(t0);

        set_threads(threads);
        t0 = clock_type::now();
        const DecompResult parallel = qr_decompose(x, s);
        const double t_all = ms_since(t0);

        if (serial.factor == parallel.factor) {
            if (t_ref >= 0)
                std::printf("%-6zu %-14.1f %-14.1f %-14.1f\n", n, t_ref, t_one, t_all);
            else
                std::printf("%-6zu %-14s %-14.1f %-14.1f\n", n, "-", t_one, t_all);
        } else {
            std::printf("%-6zu thread counts disagree!\n", n);
            return 1;
        }
    }
    std::printf("(%d thread(s) available)\n", threads);
    return 0;
}
