#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "boundent/config.hpp"
#include "boundent/tensor.hpp"
#include "boundent/tiles.hpp"

namespace boundent {

/// Deterministic random stream: mt19937_64 driven, with doubles built
/// directly from the raw bits so the sequence is identical wherever the
/// engine is (the engine itself is pinned by the standard).
class Rng {
public:
    explicit Rng(std::uint64_t stream_seed) : engine_(stream_seed) {}

    double uniform01(); ///< uniform on [0, 1), 53-bit resolution
    double gaussian();  ///< standard normal via Box-Muller
    cplx complex_gaussian(); ///< independent standard-normal real and imaginary parts

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// Stream seed for restart `index` under a base seed. Distinct indices give
/// decorrelated streams; the map is pure so restarts can run in any order.
std::uint64_t derive_stream(RngSeed seed, std::uint64_t index);

/// Haar-random product state: independent complex-Gaussian local amplitudes,
/// each local vector normalized. Requires both local dims >= 2.
ProductState sample_product_state(std::size_t dim_a, std::size_t dim_b, Rng& stream);

/// <a,b| op |a,b> for a Hermitian op on the grouped A|B bipartition.
double product_overlap(const HermitianOperator& op, const ProductState& state);

struct SeesawOptions {
    std::size_t restarts = 200;
    double tol = 1e-10;        ///< objective-gain threshold ending a trajectory
    std::size_t max_iter = 500;
    RngSeed seed{42};

    /// Warm starts: restart r < initial_states.size() begins from
    /// initial_states[r] instead of a fresh sample. Random streams are
    /// indexed by restart regardless, so later restarts are unaffected.
    std::vector<ProductState> initial_states;

    bool record_traces = false; ///< keep the per-iteration objective values
};

/// Result of a multi-restart see-saw run. best_value is a feasible lower
/// bound on sup <e,f|M|e,f>: it is the recomputed overlap of best_state.
struct SeesawOutcome {
    double best_value;
    ProductState best_state;
    std::size_t best_restart;
    std::size_t restarts;

    std::vector<double> restart_values; ///< final overlap per restart
    std::vector<std::size_t> iterations_per_restart;
    std::vector<bool> converged;        ///< gain fell below tol within budget

    bool any_degenerate;  ///< a leading eigenvalue was degenerate during some update
    bool monotone_ok;     ///< every within-restart objective gain >= -1e-12

    /// Per-restart objective sequence (two entries per iteration: after the
    /// B update, then after the A update). Filled only when requested.
    std::vector<std::vector<double>> objective_traces;
};

/// Alternating leading-eigenvector maximization of <e,f|M|e,f> over product
/// states: fix e, replace f by the top eigenvector of the A-contraction,
/// then the symmetric B step; repeat until the gain drops below tol. M must
/// be PSD with grouped A|B factors. Deterministic for fixed options.
SeesawOutcome seesaw_maximize(const HermitianOperator& op, const SeesawOptions& options);

/// Convenience overload matching the common call shape.
SeesawOutcome seesaw_maximize(const HermitianOperator& op, std::size_t restarts,
                              double tol, std::size_t max_iter, RngSeed seed);

/// Brute-force cross-check for 3x3 problems: each local state is swept over
/// a deterministic grid (two polar angles on [0, pi/2], two phases on
/// [0, 2pi), first amplitude real nonnegative, `resolution` points per
/// parameter), then the best grid point is polished by one see-saw
/// trajectory. Returns the polished objective value.
double grid_oracle(const HermitianOperator& op, std::size_t resolution);

/// alpha_N estimate: see-saw over product states of P_b^{(x)N} brought to
/// the grouped [A^N | B^N] bipartition. For N >= 2 the tensor power of the
/// single-copy optimizer seeds restart 0, so the outcome is never below
/// (alpha_1)^N up to solver tolerance. N must lie in {1, 2, 3}.
SeesawOutcome multicopy_overlap(std::size_t n_copies, std::size_t restarts, double tol,
                                std::size_t max_iter, RngSeed seed);

} // namespace boundent
