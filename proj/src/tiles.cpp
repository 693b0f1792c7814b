#include "boundent/tiles.hpp"

#include <cmath>

#include "boundent/errors.hpp"

namespace boundent {

ProductState::ProductState(ComplexVector a, ComplexVector b)
    : a_local(std::move(a)), b_local(std::move(b)) {
    if (!a_local.all_finite() || !b_local.all_finite())
        throw ContractViolation("ProductState requires finite amplitudes");
    if (std::abs(norm(a_local) - 1.0) > 1e-12 || std::abs(norm(b_local) - 1.0) > 1e-12)
        throw ContractViolation("ProductState locals must be normalized");
}

ComplexVector ProductState::joint() const {
    return kron(a_local, b_local);
}

double SeparabilityCertificate::residual() const {
    ComplexMatrix acc(target.dim(), target.dim());
    for (const auto& [weight, state] : terms)
        acc = acc + weight * outer_projector(state.joint());
    return frobenius_norm(acc - target.matrix());
}

namespace {

ComplexVector ket3(double c0, double c1, double c2) {
    ComplexVector v{cplx{c0, 0.0}, cplx{c1, 0.0}, cplx{c2, 0.0}};
    return normalized(v);
}

TensorSpace space_3x3() {
    return TensorSpace({{Party::A, 3}, {Party::B, 3}});
}

} // namespace

std::array<ProductState, 5> tiles_upb() {
    const ComplexVector k0 = ket3(1, 0, 0);
    const ComplexVector k1 = ket3(0, 1, 0);
    const ComplexVector k2 = ket3(0, 0, 1);
    const ComplexVector plus01 = ket3(1, 1, 0);
    const ComplexVector plus12 = ket3(0, 1, 1);
    const ComplexVector a0 = ket3(1, -1, 1);
    return {ProductState(k0, plus01), ProductState(plus01, k2), ProductState(k2, plus12),
            ProductState(plus12, k0), ProductState(a0, a0)};
}

HermitianOperator tiles_projector() {
    ComplexMatrix p = ComplexMatrix::identity(9);
    for (const ProductState& v : tiles_upb())
        p = p - outer_projector(v.joint());
    return HermitianOperator(std::move(p), space_3x3());
}

HermitianOperator rho_b() {
    return HermitianOperator(0.25 * tiles_projector().matrix(), space_3x3());
}

HermitianOperator singlet() {
    ComplexVector psi(4);
    psi[1] = cplx{1.0 / std::sqrt(2.0), 0.0};
    psi[2] = cplx{-1.0 / std::sqrt(2.0), 0.0};
    return HermitianOperator(outer_projector(psi),
                             TensorSpace({{Party::A, 2}, {Party::B, 2}}));
}

std::array<ComplexVector, 3> a_basis() {
    const ComplexVector a0 = ket3(1, -1, 1);
    std::array<ComplexVector, 3> basis{a0, ComplexVector(3), ComplexVector(3)};
    const ComplexVector seeds[2] = {ket3(1, 0, 0), ket3(0, 1, 0)};
    for (std::size_t k = 0; k < 2; ++k) {
        ComplexVector v = seeds[k];
        for (std::size_t j = 0; j <= k; ++j) {
            const cplx overlap = inner(basis[j], v);
            for (std::size_t i = 0; i < 3; ++i)
                v[i] -= overlap * basis[j][i];
        }
        basis[k + 1] = normalized(v);
    }
    return basis;
}

HermitianOperator p1_projector() {
    const auto basis = a_basis();
    const ComplexVector a00 = kron(basis[0], basis[0]);
    return HermitianOperator(ComplexMatrix::identity(9) - outer_projector(a00), space_3x3());
}

HermitianOperator p2_projector() {
    const auto basis = a_basis();
    const ComplexVector a00 = kron(basis[0], basis[0]);
    return HermitianOperator(tiles_projector().matrix() + outer_projector(a00), space_3x3());
}

SeparabilityCertificate complement_certificate() {
    const auto basis = a_basis();

    std::vector<std::pair<double, ProductState>> terms;
    terms.reserve(13);
    for (std::size_t k1 = 0; k1 < 3; ++k1)
        for (std::size_t k2 = 0; k2 < 3; ++k2) {
            if (k1 == 0 && k2 == 0)
                continue;
            terms.emplace_back(1.0, ProductState(basis[k1], basis[k2]));
        }

    const ComplexVector k0 = ket3(1, 0, 0);
    const ComplexVector k1v = ket3(0, 1, 0);
    const ComplexVector k2v = ket3(0, 0, 1);
    const ComplexVector minus01 = ket3(1, -1, 0);
    const ComplexVector minus12 = ket3(0, 1, -1);
    terms.emplace_back(1.0, ProductState(k0, minus01));
    terms.emplace_back(1.0, ProductState(minus01, k2v));
    terms.emplace_back(1.0, ProductState(k2v, minus12));
    terms.emplace_back(1.0, ProductState(minus12, k0));
    terms.emplace_back(1.0, ProductState(k1v, k1v));

    HermitianOperator target(ComplexMatrix::identity(9) + tiles_projector().matrix(),
                             space_3x3());
    SeparabilityCertificate cert{std::move(terms), std::move(target)};
    const double res = cert.residual();
    if (res > 1e-10)
        throw CertificateError("complement certificate does not reproduce 1 + P_b", res);
    return cert;
}

} // namespace boundent
