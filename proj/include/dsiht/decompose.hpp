#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dsiht/heap.hpp"
#include "dsiht/types.hpp"

namespace dsiht {

enum class Engine { Cascade, Analytic };
enum class FactorShape { QR, QL };

/// Per-stage kernel selection for an N x N decomposition (N-1 stages).
struct TypeSchedule {
    std::vector<BasicKind> stages;
    Engine engine = Engine::Cascade;

    static TypeSchedule uniform(BasicKind kind, std::size_t dim);
    static TypeSchedule analytic(std::size_t dim);  // uniform M, analytic engine
    /// Parse "t,m,g,t,t" (case-insensitive).
    static TypeSchedule parse(std::string_view csv);

    /// Throws unless stages.size() == dim - 1 and the analytic engine is
    /// paired with a uniform-M schedule.
    void validate(std::size_t dim) const;
};

/// Raised when a stage meets an exactly zero generator subcolumn.
class RankDeficientError : public std::runtime_error {
public:
    RankDeficientError(std::size_t column);
    std::size_t column;
};

struct DecompResult {
    CpxMatrix q;       // unitary factor
    CpxMatrix factor;  // upper-triangular R (QR) or lower-triangular L (QL)
    FactorShape shape;
    TypeSchedule schedule;
    HeapPath path;
    double residual_norm;
    double unitarity_error;
};

struct DecompOptions {
    /// Skip rank-deficient stages (zero diagonal) instead of throwing.
    bool allow_rank_deficient = false;
};

/// Column-wise triangularization X = Q R: stage j zeroes X[j+1:, j] with a
/// natural-path cascade generated by the trailing subcolumn.
DecompResult qr_decompose(const CpxMatrix& x, const TypeSchedule& schedule,
                          const DecompOptions& opts = {});

/// X = Q L: columns are processed from last to first with a tail-anchored
/// cascade so the heap lands on the diagonal and rows above it are zeroed.
DecompResult ql_decompose(const CpxMatrix& x, const TypeSchedule& schedule,
                          const DecompOptions& opts = {});

/// Classical complex Householder triangularization, the comparison baseline.
/// Reflector phase is the cancellation-safe w = x + complex_sign(x0)||x|| e0.
DecompResult householder_qr(const CpxMatrix& x);

/// Spectral norm via power iteration on M* M (50 iterations or relative
/// change < 1e-9, whichever first).
double spectral_norm(const CpxMatrix& m);

/// ||X - Q F||_2.
double residual_norm(const CpxMatrix& x, const CpxMatrix& q, const CpxMatrix& f);

/// Largest entry modulus of Q* Q - I.
double unitarity_error(const CpxMatrix& q);

}  // namespace dsiht
