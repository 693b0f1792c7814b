#pragma once

#include <string>

#include "boundent/tensor.hpp"

namespace boundent {

/// Logarithmic negativity of a state, with the partial-transpose spectrum
/// diagnostics that decide the PPT predicate.
struct NegativityReport {
    double value_bits;         ///< log2 of the partial-transpose trace norm
    double min_pt_eigenvalue;
    bool is_ppt;               ///< min_pt_eigenvalue >= -1e-10
    std::string space_summary;
};

/// E_N(rho) = log2 ||rho^{T_B}||_1. Requires a valid state: PSD within
/// 1e-10 and unit trace within 1e-10. Zero (to numerics) exactly when the
/// state is PPT; 1 on the singlet.
NegativityReport log_negativity(const HermitianOperator& op);

/// Additivity of E_N under tensoring, verified numerically: compares
/// E_N(a (x) b) on the grouped bipartition against E_N(a) + E_N(b).
struct AdditivityCheck {
    double lhs; ///< E_N(a (x) b)
    double rhs; ///< E_N(a) + E_N(b)
    bool pass;  ///< |lhs - rhs| <= 1e-8
};

AdditivityCheck additivity_check(const HermitianOperator& a, const HermitianOperator& b,
                                 std::size_t dim_limit = 6561);

/// The distillation ceiling for N bound-entangled copies padded with L
/// singlets: E_N(rho_b^{(x)N} (x) Psi^{(x)L}) equals L, so at most L
/// singlets can come back out.
struct CeilingCheck {
    std::size_t n_copies;   ///< N >= 1
    std::size_t n_singlets; ///< L >= 0
    double e_neg;
    double ceiling;         ///< L
    bool pass;              ///< |e_neg - L| <= 1e-8
    double min_pt_eigenvalue;
    std::string space_summary;
};

/// Builds the padded state on the grouped A|B bipartition and evaluates the
/// ceiling. Requires 9^N * 4^L <= dim_limit.
CeilingCheck theorem2_ceiling(std::size_t n_copies, std::size_t n_singlets,
                              std::size_t dim_limit = 6561);

} // namespace boundent
