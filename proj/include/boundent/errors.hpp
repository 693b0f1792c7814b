#pragma once

#include <stdexcept>
#include <string>

namespace boundent {

/// Precondition or type-invariant violation on a caller-supplied value.
class ContractViolation : public std::invalid_argument {
public:
    explicit ContractViolation(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Requested construction would exceed the configured dimension budget.
class SizeLimitError : public std::runtime_error {
public:
    SizeLimitError(const std::string& msg, std::size_t requested, std::size_t limit)
        : std::runtime_error(msg + " (requested " + std::to_string(requested) +
                             ", limit " + std::to_string(limit) + ")"),
          requested_dim(requested), dim_limit(limit) {}
    std::size_t requested_dim;
    std::size_t dim_limit;
};

/// Iterative solver failed to reach its tolerance; carries the final residual.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double res)
        : std::runtime_error(msg + " (residual " + std::to_string(res) + ")"),
          residual(res) {}
    double residual;
};

/// An estimate left the range where the derived quantity is meaningful.
class InvalidEstimateError : public std::runtime_error {
public:
    explicit InvalidEstimateError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A constructed certificate failed its own consistency check; indicates a bug.
class CertificateError : public std::logic_error {
public:
    CertificateError(const std::string& msg, double res)
        : std::logic_error(msg + " (residual " + std::to_string(res) + ")"),
          residual(res) {}
    double residual;
};

} // namespace boundent
