#pragma once

#include <span>
#include <vector>

#include "dsiht/decompose.hpp"
#include "dsiht/heap.hpp"
#include "dsiht/types.hpp"

// Serial reference implementations kept for testing. Everything here goes
// through explicit stage matrices and full matrix products, independent of
// the strided in-place kernels in the main library. Costs are O(N^3) per
// transform and O(N^4) per decomposition; use small sizes.
namespace dsiht::ref {

/// 2x2 kernel written out from the closed formulas.
CpxMatrix basic_2x2(BasicKind kind, CpxScalar x0, CpxScalar x1);

/// Full transform matrix as the product of embedded stage matrices. The
/// running generator is advanced by multiplying it with each stage matrix
/// rather than by the closed-form heap update.
CpxMatrix transform_matrix(std::span<const CpxScalar> gen, BasicKind kind, HeapPath path);

std::vector<CpxScalar> transform(std::span<const CpxScalar> gen,
                                 std::span<const CpxScalar> signal, BasicKind kind,
                                 HeapPath path);

/// Triangularization by full embedded-matrix products.
void qr(const CpxMatrix& x, const TypeSchedule& schedule, CpxMatrix& q, CpxMatrix& r);
void ql(const CpxMatrix& x, const TypeSchedule& schedule, CpxMatrix& q, CpxMatrix& l);

/// Singular values (descending) via one-sided Jacobi sweeps.
std::vector<double> singular_values(const CpxMatrix& m);
double spectral_norm(const CpxMatrix& m);

}  // namespace dsiht::ref
