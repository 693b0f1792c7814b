#include <doctest.h>

#include <cmath>

#include "boundent/errors.hpp"
#include "boundent/tensor.hpp"
#include "boundent/tiles.hpp"
#include "test_support.hpp"

using namespace boundent;

namespace {

ComplexMatrix pauli_x() {
    ComplexMatrix x(2, 2);
    x(0, 1) = x(1, 0) = cplx{1.0, 0.0};
    return x;
}

ComplexMatrix pauli_y() {
    ComplexMatrix y(2, 2);
    y(0, 1) = cplx{0.0, -1.0};
    y(1, 0) = cplx{0.0, 1.0};
    return y;
}

} // namespace

TEST_CASE("tensor space bookkeeping") {
    const TensorSpace space({{Party::A, 2}, {Party::B, 3}});
    CHECK(space.total_dim() == 6);
    CHECK(space.party_dim(Party::A) == 2);
    CHECK(space.party_dim(Party::B) == 3);
    CHECK(space.grouped());
    CHECK(space.summary() == "[A2 | B3]");

    const TensorSpace interleaved(
        {{Party::A, 3}, {Party::B, 3}, {Party::A, 3}, {Party::B, 3}});
    CHECK_FALSE(interleaved.grouped());
    CHECK(interleaved.party_dim(Party::A) == 9);

    CHECK_THROWS_AS(TensorSpace({{Party::A, 1}, {Party::B, 2}}), ContractViolation);
    CHECK_THROWS_AS(TensorSpace({{Party::A, 2}}), ContractViolation);
    CHECK_THROWS_AS(TensorSpace({}), ContractViolation);
}

TEST_CASE("hermitian operator validation") {
    const TensorSpace space({{Party::A, 2}, {Party::B, 2}});
    CHECK_THROWS_AS(HermitianOperator(ComplexMatrix::identity(3), space),
                    ContractViolation);
    ComplexMatrix nonherm(4, 4);
    nonherm(0, 1) = cplx{1.0, 0.0};
    CHECK_THROWS_AS(HermitianOperator(std::move(nonherm), space), ContractViolation);
    CHECK_NOTHROW(HermitianOperator(ComplexMatrix::identity(4), space));
}

TEST_CASE("factor permutation on the worked 2x3 example") {
    // op = X (x) D with D diagonal; swapping the factors must give D (x) X.
    ComplexMatrix d(3, 3);
    d(0, 0) = cplx{1.0, 0.0};
    d(1, 1) = cplx{2.0, 0.0};
    d(2, 2) = cplx{3.0, 0.0};
    const HermitianOperator op(kron(pauli_x(), d),
                               TensorSpace({{Party::A, 2}, {Party::B, 3}}));

    const HermitianOperator swapped = permute_factors(op, {1, 0});
    CHECK(swapped.space().factors()[0].party == Party::B);
    CHECK(frobenius_norm(swapped.matrix() - kron(d, pauli_x())) < 1e-14);

    // conjugation by a permutation leaves the spectrum alone
    const auto before = hermitian_eigenvalues(op.matrix());
    const auto after = hermitian_eigenvalues(swapped.matrix());
    for (std::size_t k = 0; k < before.size(); ++k)
        CHECK(before[k] == doctest::Approx(after[k]).epsilon(1e-13));

    CHECK_THROWS_AS(permute_factors(op, {0, 0}), ContractViolation);
    CHECK_THROWS_AS(permute_factors(op, {0}), ContractViolation);
}

TEST_CASE("grouping permutation brings interleaved copies together") {
    const TensorSpace interleaved(
        {{Party::A, 3}, {Party::B, 3}, {Party::A, 3}, {Party::B, 3}});
    const std::vector<std::size_t> perm = grouping_permutation(interleaved);
    CHECK(perm == std::vector<std::size_t>{0, 2, 1, 3});

    const HermitianOperator two = tensor_product(tiles_projector(), tiles_projector());
    CHECK_FALSE(two.space().grouped());
    const HermitianOperator grouped = permute_factors(two, grouping_permutation(two.space()));
    CHECK(grouped.space().grouped());
    CHECK(grouped.space().summary() == "[A3 A3 | B3 B3]");
    CHECK(trace(grouped.matrix()).real() == doctest::Approx(16.0).epsilon(1e-13));

    // the permuted matrix keeps the projector property
    CHECK(frobenius_norm(grouped.matrix() * grouped.matrix() - grouped.matrix()) < 1e-12);
}

TEST_CASE("partial transpose of the singlet has the known spectrum") {
    const HermitianOperator pt = partial_transpose(singlet());
    const auto evs = hermitian_eigenvalues(pt.matrix());
    CHECK(evs[0] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(evs[1] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(evs[2] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(evs[3] == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(trace(pt.matrix()).real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("partial transpose structure") {
    // on a product operator only the B factor is transposed
    const HermitianOperator op(kron(pauli_x(), pauli_y()),
                               TensorSpace({{Party::A, 2}, {Party::B, 2}}));
    const HermitianOperator pt = partial_transpose(op);
    ComplexMatrix yt = pauli_y();
    std::swap(yt(0, 1), yt(1, 0)); // transpose
    CHECK(frobenius_norm(pt.matrix() - kron(pauli_x(), yt)) < 1e-14);

    // involution
    const HermitianOperator ptpt = partial_transpose(pt);
    CHECK(frobenius_norm(ptpt.matrix() - op.matrix()) < 1e-14);

    // random state: trace and hermiticity survive
    Rng rng(derive_stream(RngSeed{3}, 1));
    const HermitianOperator rho(testing::random_density(6, rng),
                                TensorSpace({{Party::A, 2}, {Party::B, 3}}));
    const HermitianOperator rpt = partial_transpose(rho);
    CHECK(trace(rpt.matrix()).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(is_hermitian(rpt.matrix()));
}

TEST_CASE("contracting party A") {
    // op = P_A (x) Y: pinning A to e leaves <e|P_A|e> * Y
    const ComplexMatrix pa = outer_projector(
        normalized(ComplexVector{cplx{1.0, 0.0}, cplx{1.0, 0.0}}));
    const HermitianOperator op(kron(pa, pauli_y()),
                               TensorSpace({{Party::A, 2}, {Party::B, 2}}));

    const ComplexVector e0 = ComplexVector::basis(2, 0);
    const ComplexMatrix c0 = contract_party_A(op, e0);
    CHECK(frobenius_norm(c0 - 0.5 * pauli_y()) < 1e-14);

    const ComplexVector plus = normalized(ComplexVector{cplx{1.0, 0.0}, cplx{1.0, 0.0}});
    const ComplexMatrix cp = contract_party_A(op, plus);
    CHECK(frobenius_norm(cp - pauli_y()) < 1e-13);

    // PSD in, PSD out
    const ComplexMatrix cb = contract_party_A(tiles_projector(), ComplexVector::basis(3, 0));
    const auto evs = hermitian_eigenvalues(cb);
    CHECK(evs.back() > -1e-12);

    CHECK_THROWS_AS((void)contract_party_A(op, ComplexVector::basis(3, 0)),
                    ContractViolation);
    ComplexVector unnormalized{cplx{2.0, 0.0}, cplx{0.0, 0.0}};
    CHECK_THROWS_AS((void)contract_party_A(op, unnormalized), ContractViolation);

    const HermitianOperator interleaved = tensor_product(op, op);
    CHECK_THROWS_AS((void)contract_party_A(interleaved, ComplexVector::basis(4, 0)),
                    ContractViolation);
}

TEST_CASE("tensor product concatenates factors and guards size") {
    const HermitianOperator a(ComplexMatrix::identity(4),
                              TensorSpace({{Party::A, 2}, {Party::B, 2}}));
    const HermitianOperator ab = tensor_product(a, a);
    CHECK(ab.space().num_factors() == 4);
    CHECK(ab.dim() == 16);
    CHECK_THROWS_AS((void)tensor_product(a, a, 15), SizeLimitError);
}
