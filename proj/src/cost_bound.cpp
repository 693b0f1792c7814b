#include "boundent/cost_bound.hpp"

#include <algorithm>
#include <cmath>

#include "boundent/errors.hpp"
#include "boundent/seesaw.hpp"
#include "boundent/tiles.hpp"

namespace boundent {

double shannon_entropy_bits(const std::vector<double>& probabilities) {
    double h = 0.0;
    for (double p : probabilities)
        if (p > 0.0)
            h -= p * std::log2(p);
    return h;
}

bool entropy_floor_check(const std::vector<double>& schmidt_sq, double alpha) {
    if (schmidt_sq.empty())
        throw ContractViolation("entropy_floor_check requires a nonempty distribution");
    double sum = 0.0;
    double max_p = 0.0;
    for (double p : schmidt_sq) {
        if (!std::isfinite(p) || p < -1e-15)
            throw ContractViolation("entropy_floor_check requires nonnegative entries");
        sum += p;
        max_p = std::max(max_p, p);
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw ContractViolation("entropy_floor_check requires a normalized distribution");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw ContractViolation("entropy_floor_check requires alpha in (0, 1]");

    if (max_p > alpha)
        return true; // hypothesis fails, implication holds vacuously
    return shannon_entropy_bits(schmidt_sq) >= -std::log2(alpha) - 1e-9;
}

InductionCheck induction_inequality_check(std::size_t n, double beta) {
    if (n < 1 || n > 2) {
        std::size_t requested = 9;
        for (std::size_t i = 0; i < n && requested <= 6561; ++i)
            requested *= 9;
        throw SizeLimitError("induction check supports N in {1, 2}", requested, 6561);
    }
    if (!(beta > 0.0) || !(beta < 1.0))
        throw ContractViolation("induction check requires beta in (0, 1)");

    const ComplexMatrix p = tiles_projector().matrix();
    ComplexMatrix p_pow_n = p; // P^{(x)N}
    for (std::size_t i = 1; i < n; ++i)
        p_pow_n = kron(p_pow_n, p);
    const std::size_t dn = p_pow_n.rows();

    const double scale = 1.0 / std::pow(beta, static_cast<double>(n));
    const ComplexMatrix lhs =
        kron(ComplexMatrix::identity(9) + p,
             ComplexMatrix::identity(dn) - scale * p_pow_n);
    const ComplexMatrix rhs = ComplexMatrix::identity(9 * dn) +
                              kron(p, ComplexMatrix::identity(dn)) -
                              (2.0 * scale) * kron(p, p_pow_n);
    const ComplexMatrix diff = rhs - lhs;

    const ComplexMatrix closed_form =
        scale * kron(ComplexMatrix::identity(9) - p, p_pow_n);
    const double identity_residual = frobenius_norm(diff - closed_form);

    const std::vector<double> evs = hermitian_eigenvalues(diff);
    const double min_eig = evs.back();

    const bool pass = min_eig >= -1e-10 && identity_residual <= 1e-9;
    return InductionCheck{n, beta, min_eig, identity_residual, pass, false, ""};
}

ECBound ec_lower_bound(double alpha1_hat) {
    if (!std::isfinite(alpha1_hat) || alpha1_hat < 0.0)
        throw ContractViolation("ec_lower_bound requires alpha1_hat >= 0");
    if (alpha1_hat >= 1.0)
        throw InvalidEstimateError(
            "alpha1_hat >= 1: the overlap estimate admits no nontrivial cost bound");
    const double beta = (1.0 + alpha1_hat) / 2.0;
    return ECBound{alpha1_hat, beta, -std::log2(beta)};
}

CostBoundReport run_theorem1_pipeline(const ToleranceConfig& config,
                                      const HermitianOperator* projector) {
    config.validate();

    CostBoundReport report{};
    report.note = "numerical lower-bound estimate";

    // Stage 1: separability certificate for 1 + P_b (Tiles runs only).
    report.certificate_checked = projector == nullptr;
    if (report.certificate_checked) {
        try {
            const SeparabilityCertificate cert = complement_certificate();
            report.certificate_residual = cert.residual();
            report.certificate_ok = report.certificate_residual <= config.cert_tol;
        } catch (const CertificateError& err) {
            report.certificate_residual = err.residual;
            report.certificate_ok = false;
        }
    } else {
        report.certificate_ok = true; // not applicable
        report.certificate_residual = 0.0;
    }

    // Stage 2: see-saw estimate of the best product overlap.
    const HermitianOperator p = projector != nullptr ? *projector : tiles_projector();
    const SeesawOutcome alpha1 = seesaw_maximize(
        p, config.restarts_n1, config.seesaw_tol, config.max_iter, config.seed);
    report.alpha1_hat = alpha1.best_value;
    report.seesaw_all_converged =
        std::all_of(alpha1.converged.begin(), alpha1.converged.end(),
                    [](bool c) { return c; });

    // Stage 3: deterministic grid cross-check of the same supremum.
    report.grid_value = grid_oracle(p, config.grid_resolution);
    report.grid_ok = std::abs(report.grid_value - report.alpha1_hat) <= 1e-3;

    // Stage 4: the bound. Throws InvalidEstimateError when the overlap
    // estimate reached 1 (e.g. a projector with product states inside).
    const ECBound bound = ec_lower_bound(report.alpha1_hat);
    report.beta = bound.beta;
    report.ec_lower_bound_bits = bound.bits;

    // Stage 5: induction steps establishing <= beta^N for every N.
    report.induction_checks.push_back(induction_inequality_check(1, report.beta));
    if (config.skip_n2) {
        report.induction_checks.push_back(
            InductionCheck{2, report.beta, 0.0, 0.0, true, true, "skipped: disabled"});
    } else if (config.dim_limit < 729) {
        report.induction_checks.push_back(
            InductionCheck{2, report.beta, 0.0, 0.0, true, true, "skipped: size limit"});
    } else {
        report.induction_checks.push_back(induction_inequality_check(2, report.beta));
    }
    report.induction_ok = true;
    for (const InductionCheck& c : report.induction_checks)
        report.induction_ok = report.induction_ok && (c.skipped || c.pass);

    // Stage 6: multi-copy overlaps against the floor/ceiling sandwich. Only
    // meaningful for the Tiles projector whose powers multicopy_overlap
    // builds; custom projectors stop at the single-copy stage.
    if (projector == nullptr) {
        for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
            const std::size_t restarts = n == 1 ? config.restarts_n1 : config.restarts_n2;
            const SeesawOutcome outcome = multicopy_overlap(
                n, restarts, config.seesaw_tol, config.max_iter, config.seed);
            const double floor =
                std::pow(report.alpha1_hat, static_cast<double>(n)) - 1e-9;
            const double ceiling = std::pow(report.beta, static_cast<double>(n)) + 1e-6;
            const bool pass = outcome.best_value >= floor && outcome.best_value <= ceiling;
            report.multicopy_checks.push_back(
                MulticopyCheck{n, outcome.best_value, floor, ceiling, pass});
        }
    }

    return report;
}

} // namespace boundent
