#include <doctest.h>

#include <cmath>

#include "boundent/errors.hpp"
#include "boundent/linalg.hpp"
#include "test_support.hpp"

using namespace boundent;

TEST_CASE("vector basics") {
    const ComplexVector e1 = ComplexVector::basis(4, 1);
    CHECK(e1.dim() == 4);
    CHECK(e1[1] == cplx{1.0, 0.0});
    CHECK(e1[0] == cplx{0.0, 0.0});
    CHECK(norm(e1) == doctest::Approx(1.0));

    const ComplexVector v{cplx{3.0, 0.0}, cplx{0.0, 4.0}};
    CHECK(norm(v) == doctest::Approx(5.0));
    CHECK(norm(normalized(v)) == doctest::Approx(1.0).epsilon(1e-14));

    // inner is conjugate-linear in the first slot
    const ComplexVector u{cplx{0.0, 1.0}, cplx{0.0, 0.0}};
    const ComplexVector w{cplx{1.0, 0.0}, cplx{0.0, 0.0}};
    CHECK(inner(u, w) == cplx{0.0, -1.0});
    CHECK(inner(w, u) == cplx{0.0, 1.0});
}

TEST_CASE("matrix basics") {
    const ComplexMatrix id = ComplexMatrix::identity(3);
    CHECK(trace(id) == cplx{3.0, 0.0});
    CHECK(frobenius_norm(id) == doctest::Approx(std::sqrt(3.0)));

    ComplexMatrix a(2, 2);
    a(0, 1) = cplx{0.0, 1.0};
    const ComplexMatrix ad = adjoint(a);
    CHECK(ad(1, 0) == cplx{0.0, -1.0});
    CHECK(ad(0, 1) == cplx{0.0, 0.0});

    CHECK(is_hermitian(id));
    CHECK_FALSE(is_hermitian(a));
    CHECK(hermiticity_defect(id) == doctest::Approx(0.0));

    // |v><v| is the rank-1 projector
    const ComplexVector v = normalized(ComplexVector{cplx{1.0, 0.0}, cplx{0.0, 1.0}});
    const ComplexMatrix p = outer_projector(v);
    CHECK(frobenius_norm(p * p - p) < 1e-14);
    CHECK(trace(p).real() == doctest::Approx(1.0));
}

TEST_CASE("kronecker product values and guard") {
    ComplexMatrix x(2, 2);
    x(0, 1) = x(1, 0) = cplx{1.0, 0.0};
    ComplexMatrix d(2, 2);
    d(0, 0) = cplx{2.0, 0.0};
    d(1, 1) = cplx{3.0, 0.0};

    const ComplexMatrix k = kron(x, d);
    // factor 0 slowest: block structure [[0, d], [d, 0]]
    CHECK(k.rows() == 4);
    CHECK(k(0, 2) == cplx{2.0, 0.0});
    CHECK(k(1, 3) == cplx{3.0, 0.0});
    CHECK(k(0, 0) == cplx{0.0, 0.0});
    CHECK(k(2, 0) == cplx{2.0, 0.0});

    const ComplexVector v = kron(ComplexVector::basis(2, 1), ComplexVector::basis(3, 0));
    CHECK(v.dim() == 6);
    CHECK(v[3] == cplx{1.0, 0.0}); // r = 3*i + j with i=1, j=0

    CHECK_THROWS_AS((void)kron(ComplexMatrix::identity(100), ComplexMatrix::identity(100)),
                    SizeLimitError);
    CHECK_THROWS_AS((void)kron(x, d, 3), SizeLimitError);
}

TEST_CASE("eigendecomposition on known matrices") {
    SUBCASE("diagonal") {
        ComplexMatrix a(3, 3);
        a(0, 0) = cplx{-1.0, 0.0};
        a(1, 1) = cplx{5.0, 0.0};
        a(2, 2) = cplx{2.0, 0.0};
        const auto eig = hermitian_eig(a);
        CHECK(eig.eigenvalues[0] == doctest::Approx(5.0).epsilon(1e-14));
        CHECK(eig.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(eig.eigenvalues[2] == doctest::Approx(-1.0).epsilon(1e-14));
    }

    SUBCASE("pauli x") {
        ComplexMatrix x(2, 2);
        x(0, 1) = x(1, 0) = cplx{1.0, 0.0};
        const auto eig = hermitian_eig(x);
        CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(eig.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-14));
        // top eigenvector is (1,1)/sqrt2 up to phase
        const ComplexVector& v = eig.eigenvectors[0];
        CHECK(std::abs(std::abs(v[0]) - 1.0 / std::sqrt(2.0)) < 1e-12);
        CHECK(std::abs(v[0] - v[1]) < 1e-12);
    }

    SUBCASE("complex off-diagonal") {
        // [[2, i], [-i, 2]] has eigenvalues 3 and 1
        ComplexMatrix a(2, 2);
        a(0, 0) = a(1, 1) = cplx{2.0, 0.0};
        a(0, 1) = cplx{0.0, 1.0};
        a(1, 0) = cplx{0.0, -1.0};
        const auto evs = hermitian_eigenvalues(a);
        CHECK(evs[0] == doctest::Approx(3.0).epsilon(1e-14));
        CHECK(evs[1] == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("eigendecomposition reconstructs random hermitian input") {
    Rng rng(derive_stream(RngSeed{7}, 0));
    const ComplexMatrix a = testing::random_hermitian(12, rng);
    const auto eig = hermitian_eig(a);

    // descending order
    for (std::size_t k = 1; k < 12; ++k)
        CHECK(eig.eigenvalues[k - 1] >= eig.eigenvalues[k]);

    // orthonormal eigenvectors
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j) {
            const cplx g = inner(eig.eigenvectors[i], eig.eigenvectors[j]);
            CHECK(std::abs(g - (i == j ? cplx{1.0, 0.0} : cplx{0.0, 0.0})) < 1e-12);
        }

    // A == sum_k lambda_k |v_k><v_k|
    ComplexMatrix rec(12, 12);
    for (std::size_t k = 0; k < 12; ++k)
        rec = rec + eig.eigenvalues[k] * outer_projector(eig.eigenvectors[k]);
    CHECK(frobenius_norm(rec - a) < 1e-12 * frobenius_norm(a));

    // values-only path agrees
    const auto evs = hermitian_eigenvalues(a);
    for (std::size_t k = 0; k < 12; ++k)
        CHECK(evs[k] == doctest::Approx(eig.eigenvalues[k]).epsilon(1e-13));
}

TEST_CASE("eigendecomposition input contracts") {
    ComplexMatrix bad(2, 3);
    CHECK_THROWS_AS((void)hermitian_eig(bad), ContractViolation);
    CHECK_THROWS_AS((void)hermitian_eig(ComplexMatrix()), ContractViolation);

    ComplexMatrix nonherm(2, 2);
    nonherm(0, 1) = cplx{1.0, 0.0}; // missing conjugate partner
    CHECK_THROWS_AS((void)hermitian_eig(nonherm), ContractViolation);

    ComplexMatrix nan_mat(2, 2);
    nan_mat(0, 0) = cplx{std::nan(""), 0.0};
    CHECK_THROWS_AS((void)hermitian_eig(nan_mat), ContractViolation);

    Rng rng(derive_stream(RngSeed{11}, 0));
    const ComplexMatrix a = testing::random_hermitian(16, rng);
    CHECK_THROWS_AS((void)hermitian_eig(a, 1e-14, 1), ConvergenceError);
    try {
        (void)hermitian_eig(a, 1e-14, 1);
    } catch (const ConvergenceError& err) {
        CHECK(err.residual > 0.0);
    }
}

TEST_CASE("trace norm of hermitian matrices") {
    ComplexMatrix a(2, 2);
    a(0, 0) = cplx{3.0, 0.0};
    a(1, 1) = cplx{-4.0, 0.0};
    CHECK(trace_norm_hermitian(a) == doctest::Approx(7.0).epsilon(1e-14));
    CHECK(trace_norm_hermitian(ComplexMatrix::identity(5)) ==
          doctest::Approx(5.0).epsilon(1e-14));
}
