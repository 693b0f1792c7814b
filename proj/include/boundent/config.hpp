#pragma once

#include <cstdint>
#include <cstddef>

#include "boundent/errors.hpp"

namespace boundent {

/// Seed for a deterministic random stream. The same seed always yields the
/// same sampling sequence, bit for bit.
struct RngSeed {
    std::uint64_t value = 42;
};

/// One knob set shared by every pipeline. Defaults reproduce the published
/// runs; tweak through the CLI flags or a --config JSON file.
struct ToleranceConfig {
    double eig_tol = 1e-14;    ///< Jacobi target: off-diagonal Frobenius mass relative to the input norm
    double psd_tol = 1e-10;    ///< absolute floor for "nonnegative" eigenvalues on unit-scale operators
    double cert_tol = 1e-10;   ///< Frobenius residual allowed for separability certificates
    double seesaw_tol = 1e-10; ///< objective-gain threshold ending a see-saw trajectory

    std::size_t max_sweeps = 100;  ///< Jacobi sweep budget
    std::size_t max_iter = 500;    ///< see-saw iteration budget per restart
    std::size_t restarts_n1 = 200; ///< see-saw restarts for single-copy runs
    std::size_t restarts_n2 = 500; ///< see-saw restarts for the two-copy landscape

    RngSeed seed{42};
    std::size_t dim_limit = 6561; ///< largest operator dimension any pipeline may build

    bool skip_n2 = false;             ///< drop the 729-dimensional two-copy checks
    std::size_t grid_resolution = 16; ///< grid-oracle points per parameter

    void validate() const {
        auto check_tol = [](double t, const char* name) {
            if (!(t > 0.0) || t > 1e-3)
                throw ContractViolation(std::string(name) + " must lie in (0, 1e-3]");
        };
        check_tol(eig_tol, "eig_tol");
        check_tol(psd_tol, "psd_tol");
        check_tol(cert_tol, "cert_tol");
        check_tol(seesaw_tol, "seesaw_tol");
        if (dim_limit < 81)
            throw ContractViolation("dim_limit must be at least 81");
        if (max_sweeps == 0 || max_iter == 0 || restarts_n1 == 0 || restarts_n2 == 0)
            throw ContractViolation("iteration and restart counts must be positive");
        if (grid_resolution < 8)
            throw ContractViolation("grid_resolution must be at least 8");
    }
};

} // namespace boundent
