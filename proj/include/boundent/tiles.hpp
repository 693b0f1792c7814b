#pragma once

#include <array>
#include <vector>

#include "boundent/linalg.hpp"
#include "boundent/tensor.hpp"

namespace boundent {

/// A normalized product state: one local vector per party.
struct ProductState {
    ComplexVector a_local;
    ComplexVector b_local;

    ProductState(ComplexVector a, ComplexVector b);

    /// The joint vector a (x) b.
    ComplexVector joint() const;
};

/// Convex decomposition of target into weighted product projectors:
/// sum_k w_k |a_k,b_k><a_k,b_k| == target to Frobenius tolerance.
struct SeparabilityCertificate {
    std::vector<std::pair<double, ProductState>> terms;
    HermitianOperator target;

    /// Frobenius norm of (sum of terms) - target.
    double residual() const;
};

/// The five Tiles product vectors on 3x3, each local factor normalized:
///   |0> (x) (|0>+|1>)/sqrt2
///   (|0>+|1>)/sqrt2 (x) |2>
///   |2> (x) (|1>+|2>)/sqrt2
///   (|1>+|2>)/sqrt2 (x) |0>
///   a0 (x) a0   with   a0 = (|0>-|1>+|2>)/sqrt3
/// They are pairwise orthogonal, and their orthogonal complement holds no
/// product vector.
std::array<ProductState, 5> tiles_upb();

/// Projector onto the orthogonal complement of the Tiles vectors:
/// rank 4, trace 4, annihilates every Tiles vector.
HermitianOperator tiles_projector();

/// The bound entangled state: the Tiles complement projector normalized to
/// unit trace. PSD with positive partial transpose.
HermitianOperator rho_b();

/// Rank-1 projector onto the two-qubit singlet (|01>-|10>)/sqrt2.
HermitianOperator singlet();

/// Orthonormal basis {a0, a1, a2} of C^3 extending a0 = (|0>-|1>+|2>)/sqrt3,
/// built by Gram-Schmidt on (a0, |0>, |1>) so the completion is reproducible.
std::array<ComplexVector, 3> a_basis();

/// 1 - |a0,a0><a0,a0|; spanned by the 8 product vectors |a_k1,a_k2| with
/// (k1,k2) != (0,0).
HermitianOperator p1_projector();

/// Tiles complement projector plus |a0,a0><a0,a0|; rank 5, spanned by five
/// mutually orthogonal product vectors.
HermitianOperator p2_projector();

/// Explicit product decomposition of 1 + P_b as 13 unit-weight product
/// projectors (8 spanning P1 plus 5 spanning P2). Throws CertificateError
/// if the construction misses its 1e-10 residual, which would be a bug.
SeparabilityCertificate complement_certificate();

} // namespace boundent
