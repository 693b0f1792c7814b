#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "boundent/linalg.hpp"

namespace boundent {

enum class Party { A, B };

struct TensorFactor {
    Party party;
    std::size_t dim;
};

/// Ordered tensor factors splitting an operator between parties A and B.
///
/// Factor 0 is the slowest-varying (leftmost Kronecker) index. Worked
/// example for factors [(A,2),(B,3)]: basis label r of the 6-dimensional
/// space decomposes as r = 3*i + j with A-index i in {0,1} and B-index
/// j in {0,1,2}, so rows 0..2 carry i=0 and rows 3..5 carry i=1.
class TensorSpace {
public:
    explicit TensorSpace(std::vector<TensorFactor> factors);

    const std::vector<TensorFactor>& factors() const { return factors_; }
    std::size_t num_factors() const { return factors_.size(); }
    std::size_t total_dim() const;
    std::size_t party_dim(Party p) const; ///< product of dims on one side

    /// True when every A factor precedes every B factor.
    bool grouped() const;

    std::string summary() const; ///< e.g. "[A3 B3]" or "[A3 A3 | B3 B3]"

private:
    std::vector<TensorFactor> factors_;
};

/// A Hermitian matrix annotated with its tensor-factor structure.
class HermitianOperator {
public:
    HermitianOperator(ComplexMatrix matrix, TensorSpace space);

    const ComplexMatrix& matrix() const { return matrix_; }
    const TensorSpace& space() const { return space_; }
    std::size_t dim() const { return matrix_.rows(); }

private:
    ComplexMatrix matrix_;
    TensorSpace space_;
};

/// Reorder tensor factors. perm maps new positions to old ones: the result's
/// factor at position i is op's factor perm[i]. The matrix is conjugated by
/// the corresponding index permutation, so the spectrum is unchanged.
HermitianOperator permute_factors(const HermitianOperator& op,
                                  const std::vector<std::size_t>& perm);

/// Permutation that moves all A factors (in order) in front of all B
/// factors (in order); turns interleaved multi-copy layouts into the
/// grouped A|B bipartition.
std::vector<std::size_t> grouping_permutation(const TensorSpace& space);

/// Transpose of all party-B tensor indices. Hermiticity and trace are
/// preserved; the spectrum in general is not.
HermitianOperator partial_transpose(const HermitianOperator& op);

/// (<e| (x) 1_B) op (|e> (x) 1_B): the party-B matrix left after pinning
/// party A to the unit vector e. Requires op's factors grouped A-then-B and
/// e of dimension equal to the A-side product. PSD inputs give PSD outputs.
ComplexMatrix contract_party_A(const HermitianOperator& op, const ComplexVector& e);

/// Kronecker product of operators with concatenated factor lists.
HermitianOperator tensor_product(const HermitianOperator& a, const HermitianOperator& b,
                                 std::size_t max_dim = 6561);

} // namespace boundent
