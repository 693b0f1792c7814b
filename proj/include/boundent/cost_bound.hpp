#pragma once

#include <string>
#include <vector>

#include "boundent/config.hpp"
#include "boundent/tensor.hpp"

namespace boundent {

/// One row of the multi-copy consistency table: the N-copy overlap estimate
/// against its feasible-point floor (alpha_1^N) and its beta^N ceiling.
struct MulticopyCheck {
    std::size_t n_copies;
    double alpha_hat;
    double floor;   ///< alpha_1^N - 1e-9
    double ceiling; ///< beta^N + 1e-6
    bool pass;
};

/// Outcome of the induction-step operator inequality at one N.
struct InductionCheck {
    std::size_t n_copies; ///< N of the step N -> N+1
    double beta;
    double min_eigenvalue;    ///< of RHS - LHS on the 9^{N+1}-dim space
    double identity_residual; ///< Frobenius gap to (1/beta^N)(1-P)(x)P^{(x)N}
    bool pass;
    bool skipped = false;
    std::string skip_reason;
};

/// Everything the Theorem-1 pipeline establishes about the cost bound.
struct CostBoundReport {
    double alpha1_hat;
    double beta;               ///< (1 + alpha1_hat)/2
    double ec_lower_bound_bits; ///< -log2(beta), ebits per copy

    bool certificate_checked; ///< false when the pipeline ran on a custom projector
    bool certificate_ok;
    double certificate_residual;

    bool seesaw_all_converged;
    double grid_value;
    bool grid_ok; ///< grid oracle within 1e-3 of the see-saw estimate

    bool induction_ok; ///< every executed induction check passed
    std::vector<InductionCheck> induction_checks;
    std::vector<MulticopyCheck> multicopy_checks;

    std::string note; ///< epistemic status of the bound
};

/// Verifies the entropy floor: whenever max(schmidt_sq) <= alpha, the
/// Shannon entropy of schmidt_sq is at least -log2(alpha) (to 1e-9). Inputs
/// with max above alpha satisfy the implication vacuously and pass.
/// schmidt_sq must be nonnegative and sum to 1 within 1e-10; alpha in (0, 1].
bool entropy_floor_check(const std::vector<double>& schmidt_sq, double alpha);

/// Shannon entropy -sum p log2 p with the 0 log 0 = 0 convention.
double shannon_entropy_bits(const std::vector<double>& probabilities);

/// Checks the induction step at level N for base beta: builds
///   LHS = (1 + P) (x) [1 - beta^{-N} P^{(x)N}]
///   RHS = 1 + P (x) 1 - 2 beta^{-N} P^{(x)(N+1)}
/// with P the Tiles complement projector, confirms RHS - LHS is PSD to
/// -1e-10 and matches the closed form beta^{-N} (1 - P) (x) P^{(x)N} to
/// Frobenius 1e-9. N in {1, 2}; beta in (0, 1).
InductionCheck induction_inequality_check(std::size_t n, double beta);

/// The bound itself, as pure arithmetic on the overlap estimate.
struct ECBound {
    double alpha1_hat;
    double beta; ///< (1 + alpha1_hat)/2
    double bits; ///< -log2(beta)
};

/// beta = (1 + alpha1_hat)/2 and the per-copy cost bound -log2(beta).
/// Requires alpha1_hat in [0, 1); at 1 or above the bound is vacuous and an
/// InvalidEstimateError is thrown.
ECBound ec_lower_bound(double alpha1_hat);

/// Full Theorem-1 pipeline: separability certificate, see-saw alpha_1 with
/// grid-oracle cross-check, cost bound, induction checks (N=1 always; N=2
/// unless skipped by flag or dimension budget), and the multi-copy overlap
/// table. With a custom projector (3x3, PSD) the certificate stage does not
/// apply; the default runs on the Tiles complement projector.
CostBoundReport run_theorem1_pipeline(const ToleranceConfig& config,
                                      const HermitianOperator* projector = nullptr);

} // namespace boundent
