#include "boundent/tensor.hpp"

#include <algorithm>
#include <cmath>

#include "boundent/errors.hpp"

namespace boundent {

TensorSpace::TensorSpace(std::vector<TensorFactor> factors) : factors_(std::move(factors)) {
    bool has_a = false;
    bool has_b = false;
    for (const TensorFactor& f : factors_) {
        if (f.dim < 2)
            throw ContractViolation("tensor factors need local dimension >= 2");
        (f.party == Party::A ? has_a : has_b) = true;
    }
    if (!has_a || !has_b)
        throw ContractViolation("a TensorSpace needs at least one A and one B factor");
}

std::size_t TensorSpace::total_dim() const {
    std::size_t d = 1;
    for (const TensorFactor& f : factors_)
        d *= f.dim;
    return d;
}

std::size_t TensorSpace::party_dim(Party p) const {
    std::size_t d = 1;
    for (const TensorFactor& f : factors_)
        if (f.party == p)
            d *= f.dim;
    return d;
}

bool TensorSpace::grouped() const {
    bool seen_b = false;
    for (const TensorFactor& f : factors_) {
        if (f.party == Party::B)
            seen_b = true;
        else if (seen_b)
            return false;
    }
    return true;
}

std::string TensorSpace::summary() const {
    std::string out = "[";
    bool boundary_done = false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) {
            if (grouped() && !boundary_done && factors_[i].party == Party::B &&
                factors_[i - 1].party == Party::A) {
                out += " | ";
                boundary_done = true;
            } else {
                out += " ";
            }
        }
        out += (factors_[i].party == Party::A ? "A" : "B");
        out += std::to_string(factors_[i].dim);
    }
    out += "]";
    return out;
}

HermitianOperator::HermitianOperator(ComplexMatrix matrix, TensorSpace space)
    : matrix_(std::move(matrix)), space_(std::move(space)) {
    if (matrix_.rows() != matrix_.cols())
        throw ContractViolation("HermitianOperator requires a square matrix");
    if (matrix_.rows() != space_.total_dim())
        throw ContractViolation("matrix dimension does not match the tensor space");
    if (!matrix_.all_finite())
        throw ContractViolation("HermitianOperator requires finite entries");
    if (hermiticity_defect(matrix_) > 1e-10)
        throw ContractViolation("HermitianOperator requires a Hermitian matrix");
}

namespace {

// Strides of each factor in the linear index, factor 0 slowest.
std::vector<std::size_t> factor_strides(const std::vector<TensorFactor>& factors) {
    std::vector<std::size_t> strides(factors.size());
    std::size_t s = 1;
    for (std::size_t i = factors.size(); i-- > 0;) {
        strides[i] = s;
        s *= factors[i].dim;
    }
    return strides;
}

std::vector<std::size_t> digits_of(std::size_t index, const std::vector<TensorFactor>& factors,
                                   const std::vector<std::size_t>& strides) {
    std::vector<std::size_t> d(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        d[i] = index / strides[i];
        index %= strides[i];
    }
    return d;
}

} // namespace

HermitianOperator permute_factors(const HermitianOperator& op,
                                  const std::vector<std::size_t>& perm) {
    const auto& factors = op.space().factors();
    const std::size_t m = factors.size();
    if (perm.size() != m)
        throw ContractViolation("permutation length does not match factor count");
    std::vector<bool> seen(m, false);
    for (std::size_t p : perm) {
        if (p >= m || seen[p])
            throw ContractViolation("permutation is not a bijection on factor indices");
        seen[p] = true;
    }

    std::vector<TensorFactor> new_factors(m);
    for (std::size_t i = 0; i < m; ++i)
        new_factors[i] = factors[perm[i]];
    const auto old_strides = factor_strides(factors);
    const auto new_strides = factor_strides(new_factors);

    const std::size_t dim = op.dim();
    // Old linear index -> new linear index under the factor reordering.
    std::vector<std::size_t> remap(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const auto d = digits_of(r, factors, old_strides);
        std::size_t nr = 0;
        for (std::size_t i = 0; i < m; ++i)
            nr += d[perm[i]] * new_strides[i];
        remap[r] = nr;
    }

    ComplexMatrix out(dim, dim);
    const ComplexMatrix& in = op.matrix();
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            out(remap[r], remap[c]) = in(r, c);
    return HermitianOperator(std::move(out), TensorSpace(std::move(new_factors)));
}

std::vector<std::size_t> grouping_permutation(const TensorSpace& space) {
    std::vector<std::size_t> perm;
    perm.reserve(space.num_factors());
    for (std::size_t i = 0; i < space.num_factors(); ++i)
        if (space.factors()[i].party == Party::A)
            perm.push_back(i);
    for (std::size_t i = 0; i < space.num_factors(); ++i)
        if (space.factors()[i].party == Party::B)
            perm.push_back(i);
    return perm;
}

HermitianOperator partial_transpose(const HermitianOperator& op) {
    const auto& factors = op.space().factors();
    const auto strides = factor_strides(factors);
    const std::size_t dim = op.dim();
    const std::size_t m = factors.size();

    ComplexMatrix out(dim, dim);
    const ComplexMatrix& in = op.matrix();
    std::vector<std::vector<std::size_t>> row_digits(dim);
    for (std::size_t r = 0; r < dim; ++r)
        row_digits[r] = digits_of(r, factors, strides);

    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            std::size_t nr = 0;
            std::size_t nc = 0;
            for (std::size_t i = 0; i < m; ++i) {
                const std::size_t ri = row_digits[r][i];
                const std::size_t ci = row_digits[c][i];
                if (factors[i].party == Party::B) {
                    nr += ci * strides[i];
                    nc += ri * strides[i];
                } else {
                    nr += ri * strides[i];
                    nc += ci * strides[i];
                }
            }
            out(nr, nc) = in(r, c);
        }
    }
    return HermitianOperator(std::move(out), op.space());
}

ComplexMatrix contract_party_A(const HermitianOperator& op, const ComplexVector& e) {
    if (!op.space().grouped())
        throw ContractViolation(
            "contract_party_A needs factors grouped A-then-B; permute_factors first");
    const std::size_t da = op.space().party_dim(Party::A);
    const std::size_t db = op.space().party_dim(Party::B);
    if (e.dim() != da)
        throw ContractViolation("contraction vector dimension does not match party A");
    if (std::abs(norm(e) - 1.0) > 1e-10)
        throw ContractViolation("contraction vector must be normalized");

    const ComplexMatrix& in = op.matrix();
    ComplexMatrix out(db, db);
    for (std::size_t a = 0; a < da; ++a) {
        const cplx ea_conj = std::conj(e[a]);
        if (ea_conj == cplx{0.0, 0.0})
            continue;
        for (std::size_t ap = 0; ap < da; ++ap) {
            const cplx weight = ea_conj * e[ap];
            if (weight == cplx{0.0, 0.0})
                continue;
            for (std::size_t b = 0; b < db; ++b)
                for (std::size_t bp = 0; bp < db; ++bp)
                    out(b, bp) += weight * in(a * db + b, ap * db + bp);
        }
    }
    return out;
}

HermitianOperator tensor_product(const HermitianOperator& a, const HermitianOperator& b,
                                 std::size_t max_dim) {
    ComplexMatrix m = kron(a.matrix(), b.matrix(), max_dim);
    std::vector<TensorFactor> factors = a.space().factors();
    factors.insert(factors.end(), b.space().factors().begin(), b.space().factors().end());
    return HermitianOperator(std::move(m), TensorSpace(std::move(factors)));
}

} // namespace boundent
