#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dsiht/basic.hpp"
#include "dsiht/types.hpp"

namespace dsiht {

/// Order in which component pairs are processed by the cascade.
///   Natural: pairs (0,1),(0,2),...,(0,N-1); the heap stays at index 0.
///   Strong:  pairs (N-2,N-1),(N-3,N-2),...,(0,1); the heap starts at the
///            tail and migrates down to index 0. The stage result is stored
///            at the higher index of each pair.
enum class HeapPath { Natural, Strong };

/// Nonzero vector inducing the transform.
class Generator {
public:
    explicit Generator(std::vector<CpxScalar> values);

    std::span<const CpxScalar> values() const { return values_; }
    double norm() const { return norm_; }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<CpxScalar> values_;
    double norm_;
};

/// One 2x2 stage acting on indices (lo, hi); lo receives the heap.
struct CascadeStep {
    std::size_t lo, hi;
    Basic2x2 b;
};

/// Precomputed stage sequence for one generator. Stages whose incoming
/// component is below eps * ||gen|| are dropped (identity stages).
struct CascadePlan {
    BasicKind kind;
    HeapPath path;
    std::size_t length;
    CpxScalar heap;  // closed-form accumulated heap of the generator
    std::vector<CascadeStep> steps;
};

CascadePlan make_cascade_plan(std::span<const CpxScalar> gen, BasicKind kind, HeapPath path);

/// Apply the plan in place to a strided vector (v[i] = first[i*stride]).
void apply_cascade_plan(const CascadePlan& plan, CpxScalar* first, std::ptrdiff_t stride = 1);

/// N-point cascade transform of `signal` induced by `gen`.
std::vector<CpxScalar> dsiht(const Generator& gen, std::span<const CpxScalar> signal,
                             BasicKind kind, HeapPath path);

/// Matrix-free evaluation of the natural-path M-kind transform through the
/// running cross-correlation with the generator. output[0] comes out as
/// <z, x> / ||x||.
std::vector<CpxScalar> dsiht_analytic(const Generator& gen, std::span<const CpxScalar> signal);

/// Strided in-place form used by the decomposition stages.
void apply_analytic(std::span<const CpxScalar> gen, CpxScalar* first, std::ptrdiff_t stride = 1);

/// N x N unitary matrix of the transform, built by applying the cascade to
/// the unit vectors (columns are independent).
CpxMatrix dsiht_matrix(const Generator& gen, BasicKind kind, HeapPath path);

/// Rotation-angle form of a real-generator cascade.
struct AngularRep {
    double heap;                 // final accumulated value
    std::vector<double> angles;  // angles[k-1] belongs to the pair whose
                                 // higher index is k
};

/// Requires a generator with all-real entries; throws otherwise.
AngularRep angular_representation(const Generator& gen, HeapPath path = HeapPath::Natural);

/// Rebuild the (real) cascade matrix from its angle list.
CpxMatrix matrix_from_angles(const std::vector<double>& angles, HeapPath path);

}  // namespace dsiht
