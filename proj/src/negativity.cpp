#include "boundent/negativity.hpp"

#include <cmath>

#include "boundent/errors.hpp"
#include "boundent/tiles.hpp"

namespace boundent {

namespace {

void require_state(const HermitianOperator& op) {
    const double tr = trace(op.matrix()).real();
    if (std::abs(tr - 1.0) > 1e-10)
        throw ContractViolation("log_negativity requires a unit-trace operator");
    const std::vector<double> evs = hermitian_eigenvalues(op.matrix());
    if (evs.back() < -1e-10)
        throw ContractViolation("log_negativity requires a PSD operator");
}

} // namespace

NegativityReport log_negativity(const HermitianOperator& op) {
    require_state(op);

    const HermitianOperator pt = partial_transpose(op);
    const std::vector<double> evs = hermitian_eigenvalues(pt.matrix());
    double trace_norm = 0.0;
    for (double ev : evs)
        trace_norm += std::abs(ev);

    NegativityReport report;
    report.value_bits = std::log2(trace_norm);
    report.min_pt_eigenvalue = evs.back();
    report.is_ppt = report.min_pt_eigenvalue >= -1e-10;
    report.space_summary = op.space().summary();
    return report;
}

AdditivityCheck additivity_check(const HermitianOperator& a, const HermitianOperator& b,
                                 std::size_t dim_limit) {
    const NegativityReport ra = log_negativity(a);
    const NegativityReport rb = log_negativity(b);

    HermitianOperator joint = tensor_product(a, b, dim_limit);
    joint = permute_factors(joint, grouping_permutation(joint.space()));
    const NegativityReport rj = log_negativity(joint);

    const double lhs = rj.value_bits;
    const double rhs = ra.value_bits + rb.value_bits;
    return AdditivityCheck{lhs, rhs, std::abs(lhs - rhs) <= 1e-8};
}

CeilingCheck theorem2_ceiling(std::size_t n_copies, std::size_t n_singlets,
                              std::size_t dim_limit) {
    if (n_copies < 1)
        throw ContractViolation("theorem2_ceiling requires at least one bound-entangled copy");

    std::size_t requested = 1;
    for (std::size_t i = 0; i < n_copies; ++i)
        requested *= 9;
    for (std::size_t i = 0; i < n_singlets; ++i)
        requested *= 4;
    if (requested > dim_limit)
        throw SizeLimitError("theorem2_ceiling state exceeds the dimension budget",
                             requested, dim_limit);

    const HermitianOperator rho = rho_b();
    const HermitianOperator psi = singlet();
    HermitianOperator state = rho;
    for (std::size_t i = 1; i < n_copies; ++i)
        state = tensor_product(state, rho, dim_limit);
    for (std::size_t i = 0; i < n_singlets; ++i)
        state = tensor_product(state, psi, dim_limit);
    state = permute_factors(state, grouping_permutation(state.space()));

    const NegativityReport report = log_negativity(state);
    const double ceiling = static_cast<double>(n_singlets);
    return CeilingCheck{n_copies,
                        n_singlets,
                        report.value_bits,
                        ceiling,
                        std::abs(report.value_bits - ceiling) <= 1e-8,
                        report.min_pt_eigenvalue,
                        report.space_summary};
}

} // namespace boundent
